//! Univariate polynomials over Q(zeta24) and rational canonical forms.

use std::fmt;

use super::linalg::Matrix;
use super::mat::Mat4;
use crate::exactnum::CycNum;

/// Coefficients from the constant term up, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<CycNum>);

impl UPoly {
    pub fn new(mut c: Vec<CycNum>) -> Self {
        while c.last().is_some_and(CycNum::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn constant(c: CycNum) -> Self {
        UPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(CycNum::one())
    }

    /// x - a
    pub fn linear(a: &CycNum) -> Self {
        UPoly::new(vec![-a, CycNum::one()])
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&CycNum> {
        self.0.last()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = CycNum::zero();
        UPoly::new((0..n).map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut c = vec![CycNum::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, s: &CycNum) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("nonzero divisor");
        let li = d.lead().expect("nonzero").inv().expect("nonzero");
        let mut r = self.0.clone();
        let mut q = vec![CycNum::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().expect("nonempty") * &li;
            for (j, c) in d.0.iter().enumerate() {
                r[k + j] -= &(&f * c);
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(CycNum::is_zero) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.0.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// xI - M as a matrix of polynomials.
fn char_matrix(m: &Matrix<CycNum>) -> Vec<Vec<UPoly>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UPoly::constant(-&m[i][j]);
                    if i == j { c.add(&UPoly::new(vec![CycNum::zero(), CycNum::one()])) } else { c }
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion (sizes here are at most 4).
fn poly_det(a: &[Vec<UPoly>]) -> UPoly {
    match a.len() {
        0 => UPoly::one(),
        1 => a[0][0].clone(),
        n => {
            let mut acc = UPoly::default();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
                let t = a[0][j].mul(&poly_det(&minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

pub fn charpoly(m: &Mat4) -> UPoly {
    poly_det(&char_matrix(&m.to_matrix()))
}

/// Invariant factors f1 | f2 | ... of M (nonconstant ones only), from the
/// determinantal divisors d_k = gcd of the k x k minors of xI - M.
pub fn rcf(m: &Mat4) -> Vec<UPoly> {
    let a = char_matrix(&m.to_matrix());
    let n = a.len();
    let mut d_prev = UPoly::one();
    let mut out = Vec::new();
    for k in 1..=n {
        let mut d = UPoly::default();
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<UPoly>> = rows.iter().map(|&r| cols.iter().map(|&c| a[r][c].clone()).collect()).collect();
                d = d.gcd(&poly_det(&minor));
            }
        }
        let (f, r) = d.divrem(&d_prev);
        debug_assert!(r.is_zero());
        if f.degree().unwrap_or(0) > 0 {
            out.push(f);
        }
        d_prev = d;
    }
    out
}

/// Companion matrix: ones on the subdiagonal, last column -c0, ..., -c_{n-1}.
pub fn companion(f: &UPoly) -> Matrix<CycNum> {
    let f = f.monic();
    let n = f.degree().expect("nonzero");
    let mut m = vec![vec![CycNum::zero(); n]; n];
    for i in 1..n {
        m[i][i - 1] = CycNum::one();
    }
    for i in 0..n {
        m[i][n - 1] = -&f.coeffs()[i];
    }
    m
}

pub fn block_diagonal(blocks: &[Matrix<CycNum>]) -> Matrix<CycNum> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut m = vec![vec![CycNum::zero(); n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m[off + i][off + j] = x.clone();
            }
        }
        off += b.len();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::e3;

    #[test]
    fn identity_factors() {
        let f = rcf(&Mat4::identity());
        assert_eq!(f, vec![UPoly::linear(&CycNum::one()); 4]);
    }

    #[test]
    fn three_a_block() {
        let m = Mat4::diag([e3(), 1.into(), 1.into(), 1.into()]);
        let f = rcf(&m);
        let one = CycNum::one();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], UPoly::linear(&one));
        assert_eq!(f[2], UPoly::linear(&one).mul(&UPoly::linear(&e3())));
        let c = companion(&f[2]);
        assert_eq!(c[0][1], -e3());
        assert_eq!(c[1][1], &e3() + &one);
    }

    #[test]
    fn divrem_roundtrip() {
        let a = UPoly::new(vec![1.into(), 2.into(), 3.into(), 4.into()]);
        let b = UPoly::linear(&e3());
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) == 0);
    }
}
