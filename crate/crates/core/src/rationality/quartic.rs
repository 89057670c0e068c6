//! A pencil of quadrics in P^4 with a Dic12 action fixing a point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::CycNum;
use crate::matforms::linalg::{identity, inverse, mat_mul, mat_vec, rank, transpose, Matrix};

type M = Matrix<CycNum>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticChecks {
    pub dic12_relations: bool,
    pub pencil_preserved: bool,
    pub point_fixed: bool,
    pub point_on_surface: bool,
}

impl QuarticChecks {
    pub fn all(&self) -> bool {
        self.dic12_relations && self.pencil_preserved && self.point_fixed && self.point_on_surface
    }
}

fn q(n: i64, d: i64) -> CycNum {
    crate::exactnum::rat(n, d)
}

/// Symmetric matrices of the two quadrics.
fn quadrics(alpha: &CycNum) -> [M; 2] {
    let one = CycNum::one();
    let z = CycNum::zero;
    let mut q1 = vec![vec![z(); 5]; 5];
    q1[0][0] = q(1, 1);
    q1[1][1] = q(-8, 1);
    q1[2][2] = q(1, 1);
    q1[3][3] = q(2, 1);
    q1[3][4] = &one - alpha;
    q1[4][3] = &one - alpha;
    q1[4][4] = -&(alpha + &one);
    let mut q2 = vec![vec![z(); 5]; 5];
    q2[0][0] = q(2, 1);
    q2[1][1] = q(-4, 1);
    q2[2][2] = q(-1, 1);
    q2[3][3] = alpha + &one;
    q2[3][4] = q(2, 1);
    q2[4][3] = q(2, 1);
    q2[4][4] = &one - alpha;
    [q1, q2]
}

/// Rows give the images of the coordinates: u -> g u.
fn maps(alpha: &CycNum, beta: &CycNum) -> Result<[M; 2]> {
    let z = CycNum::zero;
    let one = CycNum::one();
    let bi = beta.inv()?;
    let mut g1 = vec![vec![z(); 5]; 5];
    g1[0][2] = q(1, 1);
    g1[1][0] = q(1, 2);
    g1[2][1] = q(2, 1);
    g1[3][4] = q(1, 1);
    g1[4][3] = q(-1, 1);
    g1[4][4] = q(-1, 1);
    let mut g2 = vec![vec![z(); 5]; 5];
    g2[0][1] = q(2, 1);
    g2[1][0] = q(1, 2);
    g2[2][2] = q(1, 1);
    g2[3][3] = &(-&(alpha + &one)) * &bi;
    g2[3][4] = &q(-2, 1) * &bi;
    g2[4][3] = &(alpha - &one) * &bi;
    g2[4][4] = &(alpha + &one) * &bi;
    Ok([g1, g2])
}

fn flat(m: &M) -> Vec<CycNum> {
    m.iter().flatten().cloned().collect()
}

/// a = c b for some nonzero c.
fn proportional(a: &M, b: &M) -> bool {
    let (a, b) = (flat(a), flat(b));
    let Some(k) = b.iter().position(|x| !x.is_zero()) else { return false };
    let Ok(c) = a[k].checked_div(&b[k]) else { return false };
    !c.is_zero() && a.iter().zip(&b).all(|(x, y)| *x == &c * y)
}

fn proj_identity(m: &M) -> bool {
    proportional(m, &identity(5))
}

fn pow(m: &M, e: u32) -> M {
    (0..e).fold(identity(5), |acc, _| mat_mul(&acc, m))
}

fn eval(qm: &M, p: &[CycNum]) -> CycNum {
    let v = mat_vec(qm, p);
    p.iter().zip(&v).fold(CycNum::zero(), |s, (x, y)| &s + &(x * y))
}

/// Needs alpha^2 + beta^2 = -3 with beta nonzero.
pub fn quartic_pencil_checks(alpha: &CycNum, beta: &CycNum) -> Result<QuarticChecks> {
    if &(alpha * alpha) + &(beta * beta) != CycNum::from_int(-3) {
        return Err(Error::Invalid("need alpha^2 + beta^2 = -3".into()));
    }
    let [g1, g2] = maps(alpha, beta)?;
    let [q1, q2] = quadrics(alpha);
    // r = g1 of order 3, s = g2 of order 4, s r s^-1 = r^-1
    let g2i = inverse(&g2)?;
    let dic12_relations = proj_identity(&pow(&g1, 3))
        && !proj_identity(&g1)
        && proj_identity(&pow(&g2, 4))
        && !proj_identity(&pow(&g2, 2))
        && proportional(&mat_mul(&mat_mul(&g2, &g1), &g2i), &inverse(&g1)?);
    let in_pencil = |m: &M| {
        let rows = vec![flat(&q1), flat(&q2), flat(m)];
        rank(&rows) == 2
    };
    let pencil_preserved = [&g1, &g2]
        .iter()
        .all(|g| [&q1, &q2].iter().all(|qm| in_pencil(&mat_mul(&mat_mul(&transpose(g), qm), g))));
    let p: Vec<CycNum> = [2, 1, 2, 0, 0].into_iter().map(CycNum::from_int).collect();
    let point_fixed = [&g1, &g2].iter().all(|g| {
        let gp = mat_vec(g, &p);
        rank(&vec![gp, p.clone()]) == 1
    });
    let point_on_surface = eval(&q1, &p).is_zero() && eval(&q2, &p).is_zero();
    Ok(QuarticChecks { dic12_relations, pencil_preserved, point_fixed, point_on_surface })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::imag_unit;

    #[test]
    fn alpha_one_beta_two_i() {
        let c = quartic_pencil_checks(&CycNum::one(), &(&imag_unit() * &CycNum::from_int(2))).unwrap();
        assert!(c.all(), "{c:?}");
    }

    #[test]
    fn rejects_off_curve_parameters() {
        assert!(quartic_pencil_checks(&CycNum::one(), &CycNum::one()).is_err());
    }
}
