use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Degree of Q(zeta24) over Q.
pub const DEG: usize = 8;

/// `ZETA_POWERS[k]` holds the power-basis coordinates of zeta24^k.
pub const ZETA_POWERS: [[i64; DEG]; 24] = zeta_table();

const fn zeta_table() -> [[i64; DEG]; 24] {
    let mut t = [[0i64; DEG]; 24];
    t[0][0] = 1;
    let mut k = 1;
    while k < 24 {
        let prev = t[k - 1];
        let mut next = [0i64; DEG];
        let mut j = 0;
        while j < DEG - 1 {
            next[j + 1] = prev[j];
            j += 1;
        }
        // x^8 = x^4 - 1
        next[4] += prev[7];
        next[0] -= prev[7];
        t[k] = next;
        k += 1;
    }
    t
}

/// An element of Q(zeta24) stored as integer power-basis coordinates over a
/// common positive denominator, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycNum {
    num: [BigInt; DEG],
    den: BigInt,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { num: Default::default(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num: [BigInt; DEG] = Default::default();
        num[0] = BigInt::from(n);
        CycNum { num, den: BigInt::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        let mut num: [BigInt; DEG] = Default::default();
        num[0] = q.numer().clone();
        Self::normalized(num, q.denom().clone())
    }

    pub fn from_coords(coords: &[Rational; DEG]) -> Self {
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = std::array::from_fn(|k| coords[k].numer() * (&den / coords[k].denom()));
        Self::normalized(num, den)
    }

    pub fn from_int_coords(coords: [i64; DEG]) -> Self {
        CycNum { num: coords.map(BigInt::from), den: BigInt::one() }
    }

    /// zeta24^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_int_coords(ZETA_POWERS[k.rem_euclid(24) as usize])
    }

    /// A primitive n-th root of unity, zeta24^(24/n).
    pub fn zeta(n: u32) -> Result<Self> {
        if n == 0 || 24 % n != 0 {
            return Err(Error::BadRootOrder(n));
        }
        Ok(Self::zeta_pow((24 / n) as i64))
    }

    fn normalized(mut num: [BigInt; DEG], mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        let mut g = den.clone();
        for c in &num {
            g = g.gcd(c);
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = den / &g;
        }
        CycNum { num, den }
    }

    pub fn coords(&self) -> [Rational; DEG] {
        std::array::from_fn(|k| Rational::new(self.num[k].clone(), self.den.clone()))
    }

    pub fn coord(&self, k: usize) -> Rational {
        Rational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerators(&self) -> &[BigInt; DEG] {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coord(0))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = std::array::from_fn(|k| &self.num[k] * q.numer());
        Self::normalized(num, &self.den * q.denom())
    }

    /// Image under zeta24 -> zeta24^a.
    pub fn galois(&self, a: u32) -> Self {
        let mut num: [BigInt; DEG] = Default::default();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &ZETA_POWERS[(a as usize * j) % 24];
            for k in 0..DEG {
                if row[k] != 0 {
                    num[k] += c * row[k];
                }
            }
        }
        Self::normalized(num, self.den.clone())
    }

    /// Product of all eight Galois conjugates; a rational number.
    pub fn norm(&self) -> Rational {
        let mut acc = self.clone();
        for a in [5, 7, 11, 13, 17, 19, 23] {
            acc = &acc * &self.galois(a);
        }
        acc.coord(0)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut co = Self::one();
        for a in [5, 7, 11, 13, 17, 19, 23] {
            co = &co * &self.galois(a);
        }
        let n = (&co * self).coord(0);
        Ok(co.scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// If this is zeta24^k, returns k.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let ints: Vec<i64> = self.num.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
        (0..24u32).find(|&k| ZETA_POWERS[k as usize][..] == ints[..])
    }

    /// Multiplicative order, if finite.
    pub fn order(&self) -> Option<u32> {
        self.root_of_unity_exponent().map(|k| 24 / gcd_u32(k, 24))
    }

    /// Reduction modulo a prime p with zeta24 sent to `root`; `None` if p
    /// divides the denominator.
    pub fn reduce_mod(&self, p: u64, root: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let d = self.den.mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        let mut acc = 0u64;
        let mut rk = 1u64;
        for c in &self.num {
            let cm = c.mod_floor(&pb).to_u64()?;
            acc = (acc + cm * rk) % p;
            rk = rk * root % p;
        }
        Some(acc * mod_inv(d, p) % p)
    }
}

pub(crate) fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd_u32(b, a % b) }
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mul_raw(a: &[BigInt; DEG], b: &[BigInt; DEG]) -> [BigInt; DEG] {
    let mut prod: [BigInt; 2 * DEG - 1] = Default::default();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    for k in (DEG..2 * DEG - 1).rev() {
        let c = std::mem::take(&mut prod[k]);
        if !c.is_zero() {
            prod[k - 4] += &c;
            prod[k - 8] -= c;
        }
    }
    std::array::from_fn(|k| std::mem::take(&mut prod[k]))
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.den == rhs.den {
            let num = std::array::from_fn(|k| &self.num[k] + &rhs.num[k]);
            return CycNum::normalized(num, self.den.clone());
        }
        let num = std::array::from_fn(|k| &self.num[k] * &rhs.den + &rhs.num[k] * &self.den);
        CycNum::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero();
        }
        CycNum::normalized(mul_raw(&self.num, &rhs.num), &self.den * &rhs.den)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { num: std::array::from_fn(|k| -&self.num[k]), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<Rational> for CycNum {
    fn from(q: Rational) -> Self {
        CycNum::from_rational(&q)
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

/// Prints as a sum of `c*w^k` terms, which the literal parser reads back.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in 0..DEG {
            let c = self.coord(k);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            match (a.is_one(), k) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{mono}")?,
                (false, 0) => write!(f, "{a}")?,
                (false, _) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}
