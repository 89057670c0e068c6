//! Lines in P^3, the 27 lines of the Fermat cubic, orbit closures of lines
//! and isomorphisms of incidence graphs.

mod graph;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{e3, CycNum, Scalar};
use crate::matforms::linalg::{kernel, rank, rref, Matrix};
use crate::matforms::{projective_invariance, CubicForm, Mat4, ProjMat};

pub use graph::{graph_isomorphism, IncidenceGraph};

/// A line as the row space of a 2x4 matrix in reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line<F: Scalar = CycNum> {
    basis: [[F; 4]; 2],
}

impl<F: Scalar> Line<F> {
    /// The span of two points; they must be independent.
    pub fn span(p: &[F; 4], q: &[F; 4]) -> Result<Self> {
        let mut m: Matrix<F> = vec![p.to_vec(), q.to_vec()];
        if rref(&mut m).len() != 2 {
            return Err(Error::Invalid("points do not span a line".into()));
        }
        let row = |r: &Vec<F>| -> [F; 4] { std::array::from_fn(|j| r[j].clone()) };
        Ok(Line { basis: [row(&m[0]), row(&m[1])] })
    }

    /// The common zero set of two independent linear forms.
    pub fn from_equations(a: &[F; 4], b: &[F; 4]) -> Result<Self> {
        let k = kernel(&vec![a.to_vec(), b.to_vec()], 4);
        if k.len() != 2 {
            return Err(Error::Invalid("equations do not cut out a line".into()));
        }
        let row = |r: &Vec<F>| -> [F; 4] { std::array::from_fn(|j| r[j].clone()) };
        Line::span(&row(&k[0]), &row(&k[1]))
    }

    pub fn basis(&self) -> &[[F; 4]; 2] {
        &self.basis
    }

    pub fn contains(&self, p: &[F; 4]) -> bool {
        let m: Matrix<F> = vec![self.basis[0].to_vec(), self.basis[1].to_vec(), p.to_vec()];
        rank(&m) == 2
    }

    /// Image under x -> g x.
    pub fn image(&self, g: &Mat4) -> Line<F> {
        let act = |v: &[F; 4]| -> [F; 4] {
            std::array::from_fn(|i| {
                (0..4).fold(F::zero(), |acc, j| {
                    if g.0[i][j].is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc + F::from_cyc(&g.0[i][j]) * v[j].clone()
                    }
                })
            })
        };
        Line::span(&act(&self.basis[0]), &act(&self.basis[1])).expect("invertible matrix")
    }
}

impl Line<CycNum> {
    pub fn galois(&self, unit: u32) -> Line<CycNum> {
        let g = |v: &[CycNum; 4]| -> [CycNum; 4] { std::array::from_fn(|j| v[j].galois(unit)) };
        Line::span(&g(&self.basis[0]), &g(&self.basis[1])).expect("automorphism preserves rank")
    }
}

impl<F: Scalar> fmt::Display for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[F; 4]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "[[{}], [{}]]", row(&self.basis[0]), row(&self.basis[1]))
    }
}

impl<F: Scalar> fmt::Debug for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line{self}")
    }
}

/// Whether two distinct lines share a point.
pub fn lines_meet<F: Scalar>(a: &Line<F>, b: &Line<F>) -> Result<bool> {
    if a == b {
        return Err(Error::IdenticalLines);
    }
    let m: Matrix<F> = a.basis.iter().chain(&b.basis).map(|r| r.to_vec()).collect();
    Ok(rank(&m) <= 3)
}

/// F restricted to the line is a binary cubic, fixed by its values at
/// p, q, p + q and p - q.
pub fn line_on_surface<F: Scalar>(l: &Line<F>, f: &CubicForm) -> bool {
    let [p, q] = &l.basis;
    let sum: [F; 4] = std::array::from_fn(|j| p[j].clone() + q[j].clone());
    let diff: [F; 4] = std::array::from_fn(|j| p[j].clone() - q[j].clone());
    [p, q, &sum, &diff].iter().all(|x| f.poly().eval_generic(x).is_zero())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FermatLineIndex {
    pub i: u8,
    pub n: u8,
    pub m: u8,
}

impl FermatLineIndex {
    pub fn new(i: u8, n: u8, m: u8) -> Result<Self> {
        if i > 2 || n > 2 || m > 2 {
            return Err(Error::Invalid(format!("line index ({i},{n},{m}) outside F3")));
        }
        Ok(FermatLineIndex { i, n, m })
    }

    /// All 27 indices in lexicographic order.
    pub fn all() -> Vec<FermatLineIndex> {
        (0..27u8).map(|k| FermatLineIndex { i: k / 9, n: k / 3 % 3, m: k % 3 }).collect()
    }

    pub fn position(&self) -> usize {
        (9 * self.i + 3 * self.n + self.m) as usize
    }

    /// Image under a Galois unit: indices are fixed when e3 is, else n, m double.
    pub fn galois(&self, unit: u32) -> FermatLineIndex {
        if unit % 3 == 1 {
            *self
        } else {
            FermatLineIndex { i: self.i, n: 2 * self.n % 3, m: 2 * self.m % 3 }
        }
    }
}

impl fmt::Display for FermatLineIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{},{},{}]", self.i, self.n, self.m)
    }
}

impl FromStr for FermatLineIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("bad line index `{s}`"));
        let inner = s.trim().strip_prefix("L[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let v: Vec<u8> = inner.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        match v[..] {
            [i, n, m] => FermatLineIndex::new(i, n, m),
            _ => Err(bad()),
        }
    }
}

/// x_0 + e3^n x_a = x_b + e3^m x_c = 0, with (a | b, c) = (1 | 2, 3),
/// (2 | 1, 3), (3 | 1, 2) for families 0, 1, 2.
pub fn fermat_line(idx: FermatLineIndex) -> Line {
    let (a, b, c) = [(1, 2, 3), (2, 1, 3), (3, 1, 2)][idx.i as usize];
    let mut u: [CycNum; 4] = Default::default();
    let mut v: [CycNum; 4] = Default::default();
    u[0] = CycNum::one();
    u[a] = e3().pow(idx.n as u64);
    v[b] = CycNum::one();
    v[c] = e3().pow(idx.m as u64);
    Line::from_equations(&u, &v).expect("independent equations")
}

/// The intersection rules for Fermat lines, read symmetrically in the two
/// lines.
pub fn fermat_meet_rule(a: FermatLineIndex, b: FermatLineIndex) -> Result<bool> {
    if a == b {
        return Err(Error::IdenticalLines);
    }
    let (a, b) = if a.i <= b.i { (a, b) } else { (b, a) };
    let (n, m, n2, m2) = (a.n as i32, a.m as i32, b.n as i32, b.m as i32);
    let z = |x: i32| x.rem_euclid(3) == 0;
    Ok(match (a.i, b.i) {
        (x, y) if x == y => n == n2 || m == m2,
        (0, 1) => z(m2 - m + n - n2),
        (0, 2) => z(m2 + m + n - n2),
        _ => z(m2 - m + n2 - n),
    })
}

/// Closure of `seeds` under `gens`, sorted. Each seed must lie on `f` and
/// each generator must preserve `f` up to a scalar.
pub fn enumerate_lines_orbit<F: Scalar>(f: &CubicForm, seeds: &[Line<F>], gens: &[ProjMat]) -> Result<Vec<Line<F>>> {
    for s in seeds {
        if !line_on_surface(s, f) {
            return Err(Error::NotOnSurface(s.to_string()));
        }
    }
    for g in gens {
        if projective_invariance(f, g).is_none() {
            return Err(Error::NotAutomorphism(g.to_string()));
        }
    }
    let mut seen: BTreeSet<Line<F>> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Line<F>> = seen.iter().cloned().collect();
    while let Some(l) = queue.pop_front() {
        for g in gens {
            let img = l.image(g.rep());
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    fn idx(i: u8, n: u8, m: u8) -> FermatLineIndex {
        FermatLineIndex::new(i, n, m).unwrap()
    }

    fn ints(rows: [[i64; 4]; 2]) -> Line {
        let r = |k: usize| rows[k].map(CycNum::from_int);
        Line::span(&r(0), &r(1)).unwrap()
    }

    #[test]
    fn fermat_lines_lie_on_fermat() {
        let f = models::fermat();
        let all: BTreeSet<Line> = FermatLineIndex::all().into_iter().map(fermat_line).collect();
        assert_eq!(all.len(), 27);
        assert!(all.iter().all(|l| line_on_surface(l, &f)));
        // L[0,0,0] is (a:-a:b:-b), which the Clebsch surface also contains
        assert!(line_on_surface(&fermat_line(idx(0, 0, 0)), &models::clebsch()));
        assert!(!line_on_surface(&fermat_line(idx(0, 1, 0)), &models::clebsch()));
    }

    #[test]
    fn family_two_equations() {
        let l = fermat_line(idx(2, 1, 2));
        let p = [CycNum::one(), CycNum::zero(), CycNum::zero(), -e3().pow(2)];
        assert!(l.contains(&p));
    }

    #[test]
    fn meeting_lines() {
        let a = fermat_line(idx(0, 0, 0));
        let b = fermat_line(idx(0, 0, 1));
        assert!(lines_meet(&a, &b).unwrap());
        assert!(lines_meet(&a, &fermat_line(idx(1, 0, 0))).unwrap());
        assert!(!lines_meet(&a, &fermat_line(idx(0, 1, 1))).unwrap());
        assert_eq!(lines_meet(&a, &a), Err(Error::IdenticalLines));
    }

    #[test]
    fn rule_examples() {
        assert!(fermat_meet_rule(idx(0, 0, 0), idx(0, 0, 1)).unwrap());
        assert!(fermat_meet_rule(idx(0, 0, 0), idx(1, 1, 1)).unwrap());
        assert!(fermat_meet_rule(idx(1, 0, 0), idx(2, 1, 2)).unwrap());
        assert!(fermat_meet_rule(idx(1, 0, 0), idx(1, 0, 0)).is_err());
    }

    #[test]
    fn clebsch_seed_is_on_surface() {
        let l1 = ints([[1, -1, 0, 0], [0, 0, 1, -1]]);
        assert!(line_on_surface(&l1, &models::clebsch()));
    }

    #[test]
    fn index_text_round_trip() {
        for a in FermatLineIndex::all() {
            assert_eq!(a.to_string().parse::<FermatLineIndex>().unwrap(), a);
        }
        assert!("L[3,0,0]".parse::<FermatLineIndex>().is_err());
    }

    #[test]
    fn empty_seed_orbit() {
        let out: Vec<Line> = enumerate_lines_orbit(&models::fermat(), &[], &[]).unwrap();
        assert!(out.is_empty());
    }
}
