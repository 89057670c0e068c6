//! Whether a finite-order element of PGL4 over Q(zeta24) is similar to one
//! defined over a subfield k.
//!
//! Write the eigenvalue multiset of a lift as lambda0 * {zeta^e_i}. Some
//! rescaling b * lift has a characteristic polynomial over k iff there is a
//! 1-cocycle sigma -> zeta^s_sigma on Gal(Q(zeta24)/k) with
//! u_sigma * E = E + s_sigma as multisets mod 24; any such cocycle is
//! b / sigma(b) by Hilbert 90.

use num_bigint::BigInt;
use num_traits::Signed;

use super::mat::ProjMat;
use super::rcf::{charpoly, UPoly};
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, FieldHandle, Rational};

const MAX_ORDER: u32 = 120;

/// Multiset of exponents j (eigenvalue zeta24^j) of a matrix whose
/// characteristic polynomial splits into 24th roots of unity.
pub fn eigenvalue_exponents(m: &super::Mat4) -> Result<Vec<u32>> {
    let mut f = charpoly(m);
    let mut out = Vec::new();
    'outer: while f.degree().unwrap_or(0) > 0 {
        for j in 0..24 {
            let (q, r) = f.divrem(&UPoly::linear(&CycNum::zeta_pow(j)));
            if r.is_zero() {
                out.push(j as u32);
                f = q;
                continue 'outer;
            }
        }
        return Err(Error::EigenvalueOutsideField);
    }
    out.sort_unstable();
    Ok(out)
}

fn rational_nth_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() && n % 2 == 0 {
        return None;
    }
    let root = |z: &BigInt| -> Option<BigInt> {
        let r = z.abs().nth_root(n);
        (r.pow(n) == z.abs()).then(|| if z.is_negative() { -r } else { r })
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// Some lambda in Q(zeta24) with lambda^n = c, among t * s * zeta^j with t
/// rational and s in {1, sqrt2, sqrt3, sqrt6}.
fn nth_root(c: &CycNum, n: u32) -> Option<CycNum> {
    let sqrt2 = &CycNum::zeta_pow(3) + &CycNum::zeta_pow(21);
    let sqrt3 = &CycNum::zeta_pow(2) + &CycNum::zeta_pow(22);
    let radicals = [CycNum::one(), sqrt2.clone(), sqrt3.clone(), &sqrt2 * &sqrt3];
    for s in &radicals {
        for j in 0..24 {
            let base = s * &CycNum::zeta_pow(j);
            let q = c.checked_div(&base.pow(n as u64)).ok()?;
            if let Some(t) = q.as_rational().and_then(|q| rational_nth_root(&q, n)) {
                return Some(base.scale(&t));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definability {
    pub order: u32,
    /// Eigenvalue exponents of the rescaled lift (multiset mod 24).
    pub exponents: Vec<u32>,
    /// The cocycle found, as (unit, shift) pairs over the fixer of k.
    pub cocycle: Option<Vec<(u32, u32)>>,
}

impl Definability {
    pub fn definable(&self) -> bool {
        self.cocycle.is_some()
    }
}

fn shifted(e: &[u32], u: u32, s: u32) -> Vec<u32> {
    let mut v: Vec<u32> = e.iter().map(|x| (x * u + 24 - s) % 24).collect();
    v.sort_unstable();
    v
}

pub fn analyse(g: &ProjMat, k: &FieldHandle) -> Result<Definability> {
    let order = g.order(MAX_ORDER).ok_or_else(|| Error::Invalid("element of infinite or large order".into()))?;
    let c = g.rep().pow_scalar(order).ok_or_else(|| Error::Invalid("power is not scalar".into()))?;
    let lambda = nth_root(&c, order).ok_or(Error::EigenvalueOutsideField)?;
    let a = g.rep().scale(&lambda.inv()?);
    let exps = eigenvalue_exponents(&a)?;
    let fixer = k.fixer().to_vec();
    let allowed: Vec<Vec<u32>> =
        fixer.iter().map(|&u| (0..24).filter(|&s| shifted(&exps, u, s) == exps).collect()).collect();
    let mut assign: Vec<Option<u32>> = vec![None; fixer.len()];
    let found = search(&fixer, &allowed, &mut assign, 0);
    Ok(Definability {
        order,
        exponents: exps,
        cocycle: found.then(|| fixer.iter().zip(&assign).map(|(&u, s)| (u, s.expect("assigned"))).collect()),
    })
}

/// Backtracking over cochains, checking s(ab) = s(a) + a * s(b) on assigned pairs.
fn search(fixer: &[u32], allowed: &[Vec<u32>], assign: &mut Vec<Option<u32>>, idx: usize) -> bool {
    if idx == fixer.len() {
        return true;
    }
    for &s in &allowed[idx] {
        assign[idx] = Some(s);
        let consistent = (0..=idx).all(|i| {
            (0..=idx).all(|j| {
                let prod = fixer[i] * fixer[j] % 24;
                let p = fixer.iter().position(|&u| u == prod).expect("subgroup");
                match (assign[i], assign[j], assign[p]) {
                    (Some(si), Some(sj), Some(sp)) => sp == (si + fixer[i] * sj) % 24,
                    _ => true,
                }
            })
        });
        if consistent && search(fixer, allowed, assign, idx + 1) {
            return true;
        }
    }
    assign[idx] = None;
    false
}

pub fn projectively_definable_over(g: &ProjMat, k: &FieldHandle) -> Result<bool> {
    Ok(analyse(g, k)?.definable())
}

impl super::Mat4 {
    /// Some(c) when self^n = c * I.
    pub fn pow_scalar(&self, n: u32) -> Option<CycNum> {
        let mut acc = super::Mat4::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc.scalar_value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{e3, imag_unit};
    use crate::matforms::Mat4;

    fn pm(d: [CycNum; 4]) -> ProjMat {
        ProjMat::new(Mat4::diag(d)).unwrap()
    }

    fn f(n: &str) -> FieldHandle {
        FieldHandle::by_name(n).unwrap()
    }

    #[test]
    fn three_a_needs_e3() {
        let g = pm([e3(), 1.into(), 1.into(), 1.into()]);
        assert!(!projectively_definable_over(&g, &f("Q")).unwrap());
        assert!(projectively_definable_over(&g, &f("Q(zeta3)")).unwrap());
    }

    #[test]
    fn four_a_needs_i() {
        let g = pm([imag_unit(), (-1).into(), 1.into(), 1.into()]);
        assert!(!projectively_definable_over(&g, &f("Q")).unwrap());
        assert!(projectively_definable_over(&g, &f("Q(i)")).unwrap());
        assert!(!projectively_definable_over(&g, &f("Q(zeta3)")).unwrap());
    }

    #[test]
    fn involution_is_always_definable() {
        let g = pm([(-1).into(), 1.into(), 1.into(), 1.into()]);
        assert!(projectively_definable_over(&g, &f("Q")).unwrap());
    }
}
