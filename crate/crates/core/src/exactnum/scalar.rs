use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyc::CycNum;
use crate::error::{Error, Result};

/// The field operations generic linear algebra needs.
pub trait Scalar:
    Clone
    + Eq
    + Hash
    + Ord
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    fn from_cyc(c: &CycNum) -> Self;
}

impl Scalar for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn one() -> Self {
        CycNum::one()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        CycNum::inv(self)
    }
    fn from_cyc(c: &CycNum) -> Self {
        c.clone()
    }
}

/// a + b*sqrt(5) with a, b in Q(zeta24). Since sqrt(5) is not in Q(zeta24)
/// this is a field of degree 16.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quad5 {
    pub a: CycNum,
    pub b: CycNum,
}

impl Quad5 {
    pub fn new(a: CycNum, b: CycNum) -> Self {
        Quad5 { a, b }
    }

    pub fn sqrt5() -> Self {
        Quad5 { a: CycNum::zero(), b: CycNum::one() }
    }

    /// The conjugate under sqrt(5) -> -sqrt(5).
    pub fn conj(&self) -> Self {
        Quad5 { a: self.a.clone(), b: -&self.b }
    }
}

impl Add for Quad5 {
    type Output = Quad5;
    fn add(self, r: Quad5) -> Quad5 {
        Quad5 { a: self.a + r.a, b: self.b + r.b }
    }
}

impl Sub for Quad5 {
    type Output = Quad5;
    fn sub(self, r: Quad5) -> Quad5 {
        Quad5 { a: self.a - r.a, b: self.b - r.b }
    }
}

impl Mul for Quad5 {
    type Output = Quad5;
    fn mul(self, r: Quad5) -> Quad5 {
        let five = CycNum::from_int(5);
        Quad5 {
            a: &self.a * &r.a + &five * &(&self.b * &r.b),
            b: &self.a * &r.b + &self.b * &r.a,
        }
    }
}

impl Neg for Quad5 {
    type Output = Quad5;
    fn neg(self) -> Quad5 {
        Quad5 { a: -self.a, b: -self.b }
    }
}

impl Scalar for Quad5 {
    fn zero() -> Self {
        Quad5 { a: CycNum::zero(), b: CycNum::zero() }
    }
    fn one() -> Self {
        Quad5 { a: CycNum::one(), b: CycNum::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = &self.a * &self.a - &CycNum::from_int(5) * &(&self.b * &self.b);
        let ni = n.inv()?;
        Ok(Quad5 { a: &self.a * &ni, b: -(&self.b * &ni) })
    }
    fn from_cyc(c: &CycNum) -> Self {
        Quad5 { a: c.clone(), b: CycNum::zero() }
    }
}

impl fmt::Display for Quad5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}) + ({})*r5", self.a, self.b)
        }
    }
}

impl fmt::Debug for Quad5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad5({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt5_squares_to_five() {
        let s = Quad5::sqrt5();
        assert_eq!(s.clone() * s, Quad5::from_cyc(&CycNum::from_int(5)));
    }

    #[test]
    fn quad5_inverse() {
        let x = Quad5::new(CycNum::zeta_pow(3), CycNum::from_int(2));
        let y = x.inv().unwrap();
        assert_eq!(x * y, Quad5::one());
    }
}
