//! Exact arithmetic in Q(zeta24), its Galois group and its sixteen subfields.

mod conic;
mod cyc;
mod galois;
mod scalar;

pub use conic::{conic_table_entry, solve_conic_neg3, ConicTableEntry};
pub use cyc::{CycNum, Rational, DEG, ZETA_POWERS};
pub(crate) use cyc::{mod_inv, mod_pow};
pub use galois::{field_contains, galois_apply, FieldHandle, GaloisAut, UNITS};
pub use scalar::{Quad5, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
}

/// Binary field arithmetic; `Inv` ignores `y`.
pub fn cyc_arith(op: ArithOp, x: &CycNum, y: &CycNum) -> crate::Result<CycNum> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Inv => x.inv()?,
    })
}

pub fn zeta(n: u32) -> crate::Result<CycNum> {
    CycNum::zeta(n)
}

/// Primitive cube root of unity.
pub fn e3() -> CycNum {
    CycNum::zeta_pow(8)
}

pub fn imag_unit() -> CycNum {
    CycNum::zeta_pow(6)
}

pub fn sqrt3() -> CycNum {
    &CycNum::zeta_pow(2) + &CycNum::zeta_pow(22)
}

pub fn rat(n: i64, d: i64) -> CycNum {
    CycNum::from_rational(&Rational::new(n.into(), d.into()))
}
