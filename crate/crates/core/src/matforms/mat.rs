use std::collections::HashSet;
use std::fmt;

use super::linalg::{self, Matrix};
use crate::error::{Error, Result};
use crate::exactnum::CycNum;

/// A 4x4 matrix over Q(zeta24), acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4(pub [[CycNum; 4]; 4]);

impl Mat4 {
    pub fn identity() -> Self {
        Mat4::diag([CycNum::one(), CycNum::one(), CycNum::one(), CycNum::one()])
    }

    pub fn diag(d: [CycNum; 4]) -> Self {
        let mut m: [[CycNum; 4]; 4] = Default::default();
        for (i, x) in d.into_iter().enumerate() {
            m[i][i] = x;
        }
        Mat4(m)
    }

    /// The permutation matrix sending e_j to e_{sigma(j)}.
    pub fn permutation(sigma: [usize; 4]) -> Self {
        let mut m: [[CycNum; 4]; 4] = Default::default();
        for (j, &s) in sigma.iter().enumerate() {
            m[s][j] = CycNum::one();
        }
        Mat4(m)
    }

    pub fn from_rows(rows: &[Vec<CycNum>]) -> Result<Self> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(Error::Invalid("expected a 4x4 matrix".into()));
        }
        Ok(Mat4(std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j].clone()))))
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        Mat4(rows.map(|r| r.map(CycNum::from_int)))
    }

    pub fn to_matrix(&self) -> Matrix<CycNum> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let p = linalg::mat_mul(&self.to_matrix(), &other.to_matrix());
        Mat4::from_rows(&p).expect("4x4 product")
    }

    pub fn apply(&self, v: &[CycNum; 4]) -> [CycNum; 4] {
        let w = linalg::mat_vec(&self.to_matrix(), v);
        std::array::from_fn(|i| w[i].clone())
    }

    pub fn det(&self) -> CycNum {
        linalg::determinant(&self.to_matrix())
    }

    pub fn inverse(&self) -> Result<Mat4> {
        Mat4::from_rows(&linalg::inverse(&self.to_matrix())?)
    }

    pub fn transpose(&self) -> Mat4 {
        Mat4(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn scale(&self, c: &CycNum) -> Mat4 {
        Mat4(self.0.clone().map(|r| r.map(|x| &x * c)))
    }

    pub fn galois(&self, a: u32) -> Mat4 {
        Mat4(self.0.clone().map(|r| r.map(|x| x.galois(a))))
    }

    /// Some(c) when the matrix is c times the identity.
    pub fn scalar_value(&self) -> Option<CycNum> {
        let c = &self.0[0][0];
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { c } else { &CycNum::zero() };
                if &self.0[i][j] != want {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = &CycNum> {
        self.0.iter().flatten()
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}, {}]", r[0], r[1], r[2], r[3])?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat4{self}")
    }
}

/// An element of PGL4, represented by the lift whose first nonzero entry
/// (row-major) is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjMat {
    rep: Mat4,
}

impl ProjMat {
    pub fn new(m: Mat4) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let lead = m.entries().find(|x| !x.is_zero()).expect("nonsingular").clone();
        let rep = if lead.is_one() { m } else { m.scale(&lead.inv()?) };
        Ok(ProjMat { rep })
    }

    pub fn identity() -> Self {
        ProjMat { rep: Mat4::identity() }
    }

    pub fn rep(&self) -> &Mat4 {
        &self.rep
    }

    pub fn mul(&self, other: &ProjMat) -> ProjMat {
        ProjMat::new(self.rep.mul(&other.rep)).expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> ProjMat {
        ProjMat::new(self.rep.inverse().expect("invertible")).expect("invertible")
    }

    /// Entrywise Galois action; normalization is preserved.
    pub fn galois(&self, a: u32) -> ProjMat {
        ProjMat { rep: self.rep.galois(a) }
    }

    pub fn is_identity(&self) -> bool {
        self.rep == Mat4::identity()
    }

    pub fn pow(&self, mut e: u64) -> ProjMat {
        let mut base = self.clone();
        let mut acc = ProjMat::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Order in PGL4, searched up to `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=bound {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.mul(self);
        }
        None
    }
}

/// All elements of the group generated by `gens`, in breadth-first order
/// from the identity. Fails once more than `limit` elements appear.
pub fn generate_group(gens: &[ProjMat], limit: usize) -> Result<Vec<ProjMat>> {
    let mut seen: HashSet<ProjMat> = HashSet::new();
    let mut out = vec![ProjMat::identity()];
    seen.insert(ProjMat::identity());
    let mut next = 0;
    while next < out.len() {
        let x = out[next].clone();
        next += 1;
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if out.len() == limit {
                    return Err(Error::Invalid(format!("group has more than {limit} elements")));
                }
                out.push(y);
            }
        }
    }
    Ok(out)
}

impl fmt::Display for ProjMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_normalization() {
        let m = Mat4::diag([2.into(), 4.into(), 2.into(), 2.into()]);
        let p = ProjMat::new(m).unwrap();
        assert_eq!(p.rep().0[1][1], CycNum::from_int(2));
        let q = ProjMat::new(Mat4::diag([1.into(), 2.into(), 1.into(), 1.into()])).unwrap();
        assert_eq!(p, q);
        assert!(ProjMat::new(Mat4::diag([0.into(), 1.into(), 1.into(), 1.into()])).is_err());
    }

    #[test]
    fn permutation_convention() {
        let p = Mat4::permutation([1, 2, 0, 3]);
        let e0 = [CycNum::one(), CycNum::zero(), CycNum::zero(), CycNum::zero()];
        assert_eq!(p.apply(&e0)[1], CycNum::one());
        assert_eq!(ProjMat::new(p).unwrap().order(10), Some(3));
    }
}
