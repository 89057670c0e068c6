use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::mat::{Mat4, ProjMat};
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Scalar};

/// Exponent vector of x0..x3.
pub type Mono = [u32; 4];

pub fn mono_degree(m: &Mono) -> u32 {
    m.iter().sum()
}

/// Graded reverse lexicographic order with x0 > x1 > x2 > x3.
pub fn grevlex(a: &Mono, b: &Mono) -> Ordering {
    match mono_degree(a).cmp(&mono_degree(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    for k in (0..4).rev() {
        if a[k] != b[k] {
            // smaller exponent in the last differing variable is larger
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

/// A polynomial in x0..x3 over Q(zeta24). No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, CycNum>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: CycNum) -> Self {
        Poly::monomial([0; 4], c)
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; 4];
        m[i] = 1;
        Poly::monomial(m, CycNum::one())
    }

    pub fn monomial(m: Mono, c: CycNum) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, CycNum)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(CycNum::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(mono_degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(CycNum::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut n = *m;
                n[i] -= 1;
                out.add_term(n, &(c * &CycNum::from_int(m[i] as i64)));
            }
        }
        out
    }

    pub fn galois(&self, a: u32) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.galois(a))).collect() }
    }

    pub fn eval(&self, x: &[CycNum; 4]) -> CycNum {
        self.eval_generic(x)
    }

    /// Evaluation at a point with coordinates in any field containing Q(zeta24).
    pub fn eval_generic<F: Scalar>(&self, x: &[F; 4]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_cyc(c);
            for (k, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * x[k].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// F(Mx): each x_i becomes the i-th entry of M x.
    pub fn substitute(&self, m: &Mat4) -> Poly {
        let lin: Vec<Poly> = (0..4)
            .map(|i| Poly::from_terms((0..4).map(|j| (unit(j), m.0[i][j].clone()))))
            .collect();
        let max_e = self.terms.keys().flat_map(|m| m.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<Poly>> = lin
            .iter()
            .map(|l| {
                let mut v = vec![Poly::constant(CycNum::one())];
                for _ in 0..max_e {
                    let next = v.last().expect("nonempty") * l;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Poly::zero();
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (k, &e) in mono.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[k][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Terms sorted by decreasing grevlex order.
    pub fn sorted_terms(&self) -> Vec<(Mono, CycNum)> {
        let mut v: Vec<(Mono, CycNum)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| grevlex(&b.0, &a.0));
        v
    }

    /// If self = c * other for a scalar c, returns c.
    pub fn proportional_to(&self, other: &Poly) -> Option<CycNum> {
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = other.terms.iter().next()?;
        let lambda = self.terms.get(m0)?.checked_div(c0).ok()?;
        (*self == other.scale(&lambda)).then_some(lambda)
    }
}

fn unit(j: usize) -> Mono {
    let mut m = [0; 4];
    m[j] = 1;
    m
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                out.add_term(m, &(x * y));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms().iter().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { format!("x{k}") } else { format!("x{k}^{e}") })
                .collect();
            let (neg, coef) = match c.as_rational() {
                Some(q) => {
                    let neg = q < num_traits::Zero::zero();
                    let a = if neg { -q } else { q };
                    let s = if num_traits::One::is_one(&a) && !mono.is_empty() { String::new() } else { a.to_string() };
                    (neg, s)
                }
                None => (false, format!("({c})")),
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if !coef.is_empty() {
                parts.push(coef);
            }
            parts.extend(mono);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// A nonzero homogeneous cubic in x0..x3.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubicForm {
    poly: Poly,
}

impl CubicForm {
    pub fn new(poly: Poly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::Invalid("zero polynomial is not a cubic form".into()));
        }
        if !poly.is_homogeneous() || poly.degree() != Some(3) {
            return Err(Error::Invalid(format!("`{poly}` is not homogeneous of degree 3")));
        }
        Ok(CubicForm { poly })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(super::parse::parse_poly(text)?)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn substitute(&self, m: &Mat4) -> CubicForm {
        CubicForm { poly: self.poly.substitute(m) }
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub fn substitute(f: &Poly, m: &Mat4) -> Poly {
    f.substitute(m)
}

/// The scalar lambda with F(g x) = lambda F(x), if g preserves F projectively.
pub fn projective_invariance(f: &CubicForm, g: &ProjMat) -> Option<CycNum> {
    f.poly.substitute(g.rep()).proportional_to(&f.poly)
}
