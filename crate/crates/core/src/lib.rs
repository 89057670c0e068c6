//! Exact algebra for automorphism groups of smooth cubic surfaces: cyclotomic
//! arithmetic, projective matrices and cubic forms, the 27 lines, W(E6),
//! Galois twists, F3 group cohomology and rationality bookkeeping.

pub mod descent;
pub mod error;
pub mod exactnum;
pub mod gcoh;
pub mod lines;
pub mod matforms;
pub mod models;
pub mod rationality;
pub mod weyl;

pub use error::{Error, Result};
