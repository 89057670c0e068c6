//! Smoothness of cubic surfaces: exact criterion and a mod-p point-scan oracle.

use super::groebner::{groebner, leading_monomial};
use super::poly::{CubicForm, Mono};
use crate::error::{Error, Result};
use crate::exactnum::{mod_inv, mod_pow};

/// True iff the partial derivatives have no common projective zero: every
/// variable has a pure power among the leading monomials of a Groebner basis.
pub fn is_smooth(f: &CubicForm) -> Result<bool> {
    let partials: Vec<_> = (0..4).map(|i| f.poly().partial(i)).collect();
    let basis = groebner(&partials)?;
    let leads: Vec<Mono> = basis.iter().filter_map(leading_monomial).collect();
    Ok((0..4).all(|v| leads.iter().any(|m| m[v] > 0 && (0..4).all(|w| w == v || m[w] == 0))))
}

/// An element of exact order 24 modulo p, for p = 1 mod 24.
pub fn root_of_unity_24(p: u64) -> Option<u64> {
    if p % 24 != 1 {
        return None;
    }
    (2..p).find(|&r| mod_pow(r, 24, p) == 1 && mod_pow(r, 12, p) != 1 && mod_pow(r, 8, p) != 1)
}

/// Arithmetic in F_{p^2} = F_p[t]/(t^2 - n).
#[derive(Clone, Copy)]
struct Fp2 {
    p: u64,
    n: u64,
}

type E = (u64, u64);

impl Fp2 {
    fn add(&self, a: E, b: E) -> E {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }
    fn mul(&self, a: E, b: E) -> E {
        let p = self.p;
        ((a.0 * b.0 + a.1 * b.1 % p * self.n) % p, (a.0 * b.1 + a.1 * b.0) % p)
    }
    fn neg(&self, a: E) -> E {
        ((self.p - a.0) % self.p, (self.p - a.1) % self.p)
    }
    fn inv(&self, a: E) -> E {
        // (a0 + a1 t)^-1 = (a0 - a1 t) / (a0^2 - n a1^2)
        let p = self.p;
        let norm = (a.0 * a.0 % p + p - a.1 * a.1 % p * self.n % p) % p;
        let ni = mod_inv(norm, p);
        (a.0 * ni % p, (p - a.1) % p * ni % p)
    }
    fn elements(&self) -> impl Iterator<Item = E> + '_ {
        (0..self.p).flat_map(move |a| (0..self.p).map(move |b| (a, b)))
    }
}

fn is_zero(a: E) -> bool {
    a == (0, 0)
}

/// Partial derivatives reduced mod p, as lists of (monomial, coefficient).
fn reduced_partials(f: &CubicForm, p: u64, root: u64) -> Result<Vec<Vec<(Mono, u64)>>> {
    (0..4)
        .map(|i| {
            f.poly()
                .partial(i)
                .terms()
                .map(|(m, c)| {
                    c.reduce_mod(p, root)
                        .map(|v| (*m, v))
                        .ok_or_else(|| Error::Invalid(format!("bad reduction at p = {p}")))
                })
                .collect()
        })
        .collect()
}

/// Univariate polynomial in x3 for one partial, with x0..x2 fixed.
fn in_x3(fld: &Fp2, part: &[(Mono, u64)], x: [E; 3]) -> [E; 3] {
    let mut out = [(0, 0); 3];
    for (m, c) in part {
        let mut t = (*c, 0);
        for k in 0..3 {
            for _ in 0..m[k] {
                t = fld.mul(t, x[k]);
            }
        }
        out[m[3] as usize] = fld.add(out[m[3] as usize], t);
    }
    out
}

fn degree(a: &[E; 3]) -> Option<usize> {
    (0..3).rev().find(|&k| !is_zero(a[k]))
}

/// Euclidean remainder of a by b (b nonzero).
fn rem(fld: &Fp2, mut a: [E; 3], b: &[E; 3]) -> [E; 3] {
    let db = degree(b).expect("nonzero divisor");
    let lead_inv = fld.inv(b[db]);
    while let Some(da) = degree(&a) {
        if da < db {
            break;
        }
        let f = fld.mul(a[da], lead_inv);
        for k in 0..=db {
            a[da - db + k] = fld.add(a[da - db + k], fld.neg(fld.mul(f, b[k])));
        }
    }
    a
}

fn gcd(fld: &Fp2, mut a: [E; 3], mut b: [E; 3]) -> [E; 3] {
    while degree(&b).is_some() {
        let r = rem(fld, a, &b);
        a = b;
        b = r;
    }
    a
}

/// Some root in F_{p^2} of the gcd of the given polynomials of degree <= 2.
fn common_root(fld: &Fp2, polys: &[[E; 3]; 4]) -> Option<E> {
    let mut g = [(0, 0); 3];
    for q in polys {
        g = gcd(fld, g, *q);
        if degree(&g) == Some(0) {
            return None;
        }
    }
    match degree(&g) {
        None => Some((0, 0)),
        Some(0) => None,
        Some(_) => fld.elements().find(|&t| {
            let v = fld.add(fld.add(g[0], fld.mul(g[1], t)), fld.mul(g[2], fld.mul(t, t)));
            is_zero(v)
        }),
    }
}

/// Quadratics in (x2, x3) for the x0 = 1 chart: c[j][k] is the coefficient
/// of x2^j x3^k.
type Biquad = [[E; 3]; 3];

fn chart_polys(fld: &Fp2, parts: &[Vec<(Mono, u64)>], a: E) -> [Biquad; 4] {
    std::array::from_fn(|i| {
        let mut c = [[(0, 0); 3]; 3];
        for (m, coef) in &parts[i] {
            let mut t = (*coef, 0);
            for _ in 0..m[1] {
                t = fld.mul(t, a);
            }
            let (j, k) = (m[2] as usize, m[3] as usize);
            c[j][k] = fld.add(c[j][k], t);
        }
        c
    })
}

fn combine(fld: &Fp2, polys: &[Biquad; 4], w: [u64; 4]) -> Biquad {
    let mut out = [[(0, 0); 3]; 3];
    for (q, &wi) in polys.iter().zip(&w) {
        for j in 0..3 {
            for k in 0..3 {
                out[j][k] = fld.add(out[j][k], fld.mul(q[j][k], (wi, 0)));
            }
        }
    }
    out
}

/// Univariate polynomials in x2 of degree <= 4, low degree first.
type U5 = [E; 5];

fn coeff_in_x3(c: &Biquad, k: usize) -> U5 {
    let mut out = [(0, 0); 5];
    for j in 0..3 {
        out[j] = c[j][k];
    }
    out
}

fn umul(fld: &Fp2, a: &U5, b: &U5) -> U5 {
    let mut out = [(0, 0); 5];
    for i in 0..5 {
        for j in 0..5 - i {
            out[i + j] = fld.add(out[i + j], fld.mul(a[i], b[j]));
        }
    }
    out
}

fn usub(fld: &Fp2, a: &U5, b: &U5) -> U5 {
    std::array::from_fn(|i| fld.add(a[i], fld.neg(b[i])))
}

/// Sylvester resultant in x3 of two formal quadratics, as a polynomial in x2.
/// It vanishes wherever the two have a common root (or both drop degree).
fn resultant_x3(fld: &Fp2, u: &Biquad, v: &Biquad) -> U5 {
    let [u0, u1, u2] = [0, 1, 2].map(|k| coeff_in_x3(u, k));
    let [v0, v1, v2] = [0, 1, 2].map(|k| coeff_in_x3(v, k));
    let d20 = usub(fld, &umul(fld, &u2, &v0), &umul(fld, &u0, &v2));
    let d21 = usub(fld, &umul(fld, &u2, &v1), &umul(fld, &u1, &v2));
    let d10 = usub(fld, &umul(fld, &u1, &v0), &umul(fld, &u0, &v1));
    usub(fld, &umul(fld, &d20, &d20), &umul(fld, &d21, &d10))
}

fn ueval(fld: &Fp2, r: &U5, x: E) -> E {
    r.iter().rev().fold((0, 0), |acc, &c| fld.add(fld.mul(acc, x), c))
}

/// Scans P^3(F_p) and P^3(F_{p^2}) for a common zero of the partials of F
/// reduced at p (zeta24 sent to an element of order 24). Returns one such
/// point as coordinates a + b*t with t^2 = n.
///
/// On the chart x0 = 1 the pair (x1, x2) is only examined in full when a
/// resultant of two fixed combinations of the partials vanishes there.
pub fn singular_point_mod_p(f: &CubicForm, p: u64) -> Result<Option<[E; 4]>> {
    let root = root_of_unity_24(p).ok_or_else(|| Error::Invalid(format!("{p} is not 1 mod 24")))?;
    let n = (2..p).find(|&n| mod_pow(n, (p - 1) / 2, p) == p - 1).expect("non-residue exists");
    let fld = Fp2 { p, n };
    let parts = reduced_partials(f, p, root)?;
    let ext: Vec<E> = fld.elements().collect();
    let one = (1, 0);
    let zero = (0, 0);
    let at = |x: [E; 3]| -> Option<E> {
        let polys: [[E; 3]; 4] = std::array::from_fn(|i| in_x3(&fld, &parts[i], x));
        common_root(&fld, &polys)
    };
    let (wu, wv) = ([1, 2 % p, 5 % p, 11 % p], [3 % p, 1, 7 % p, 2 % p]);
    for &a in &ext {
        let polys = chart_polys(&fld, &parts, a);
        let r = resultant_x3(&fld, &combine(&fld, &polys, wu), &combine(&fld, &polys, wv));
        let identically_zero = r.iter().all(|&c| is_zero(c));
        for &b in &ext {
            if identically_zero || is_zero(ueval(&fld, &r, b)) {
                if let Some(x3) = at([one, a, b]) {
                    return Ok(Some([one, a, b, x3]));
                }
            }
        }
    }
    for &b in &ext {
        if let Some(r) = at([zero, one, b]) {
            return Ok(Some([zero, one, b, r]));
        }
    }
    if let Some(r) = at([zero, zero, one]) {
        return Ok(Some([zero, zero, one, r]));
    }
    let last = parts.iter().all(|q| q.iter().all(|(m, c)| *m != [0, 0, 0, 2] || *c == 0));
    Ok(last.then_some([zero, zero, zero, one]))
}
