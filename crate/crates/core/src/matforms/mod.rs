//! Matrices up to scalars, cubic forms, Groebner bases, smoothness, rational
//! canonical forms and definability of projective matrices over subfields.

mod definable;
mod groebner;
pub mod linalg;
mod mat;
mod parse;
mod poly;
mod rcf;
mod smooth;

pub use definable::{analyse, eigenvalue_exponents, projectively_definable_over, Definability};
pub use groebner::{groebner, groebner_with_budget, leading_monomial, reduce, s_polynomial, DEFAULT_BUDGET};
pub use mat::{generate_group, Mat4, ProjMat};
pub use parse::{parse_cyc, parse_poly};
pub use poly::{grevlex, mono_degree, projective_invariance, substitute, CubicForm, Mono, Poly};
pub use rcf::{companion, block_diagonal, charpoly, rcf, UPoly};
pub use smooth::{is_smooth, root_of_unity_24, singular_point_mod_p};
