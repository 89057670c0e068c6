//! The concrete surfaces and matrix groups the verifier works with, and the
//! `[a1,a2,a3,a4](1234)` notation for automorphisms of the Fermat cubic.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{e3, imag_unit, rat, sqrt3, CycNum, Quad5, Scalar};
use crate::lines::{enumerate_lines_orbit, fermat_line, FermatLineIndex, Line};
use crate::matforms::{generate_group, parse_poly, CubicForm, Mat4, ProjMat};

fn cubic(text: &str) -> CubicForm {
    CubicForm::parse(text).expect("built-in surface")
}

fn proj(m: Mat4) -> ProjMat {
    ProjMat::new(m).expect("built-in matrix is invertible")
}

fn z(k: i64) -> CycNum {
    CycNum::zeta_pow(k)
}

/// sum_{i != j} x_i^2 x_j + 2 sum_{i<j<k} x_i x_j x_k
pub fn clebsch() -> CubicForm {
    let mut terms = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                terms.push(format!("x{i}^2*x{j}"));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        terms.push(format!("2*x{i}*x{j}*x{k}"));
    }
    cubic(&terms.join(" + "))
}

/// A 5-cycle and a transposition generating S5 on the Clebsch surface.
pub fn clebsch_generators() -> Vec<ProjMat> {
    vec![
        proj(Mat4::from_ints([[-1, -1, -1, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])),
        proj(Mat4::permutation([1, 0, 2, 3])),
    ]
}

/// Lines spanned by the two rows, as integer points.
pub fn clebsch_skew_pair() -> [[[i64; 4]; 2]; 2] {
    [[[1, -1, 0, 0], [0, 0, 1, -1]], [[0, 1, 0, -1], [0, 0, 1, 0]]]
}

/// All 27 Clebsch lines: the orbit of the two rational seed lines and of
/// one line defined over Q(sqrt5).
pub fn clebsch_lines() -> Vec<Line<Quad5>> {
    let q = |x: i64| Quad5::from_cyc(&CycNum::from_int(x));
    let golden = Quad5::new(rat(-1, 2), rat(1, 2));
    let mut seeds: Vec<Line<Quad5>> = clebsch_skew_pair()
        .iter()
        .map(|[a, b]| Line::span(&a.map(q), &b.map(q)).expect("independent"))
        .collect();
    seeds.push(Line::span(&[q(1), q(0), q(-1), golden.clone()], &[q(0), q(1), golden, q(-1)]).expect("independent"));
    enumerate_lines_orbit(&clebsch(), &seeds, &clebsch_generators()).expect("seeds lie on the surface")
}

/// The Fermat lines in index order L[0,0,0], L[0,0,1], ..., L[2,2,2].
pub fn fermat_lines() -> Vec<Line> {
    FermatLineIndex::all().into_iter().map(fermat_line).collect()
}

pub fn fermat() -> CubicForm {
    cubic("x0^3 + x1^3 + x2^3 + x3^3")
}

pub fn eight_a_surface() -> CubicForm {
    cubic("x0^3 + x0*x3^2 - x1*x2^2 + x1^2*x3")
}

/// diag(1, e8^6, e8, e8^4)
pub fn eight_a_generator() -> ProjMat {
    proj(Mat4::diag([CycNum::one(), z(18), z(3), z(12)]))
}

pub fn twelve_a_surface() -> CubicForm {
    cubic("x0^3 + x1^3 + x2^3 + x3^3 + 3*(s3-1)*x0*x1*x2")
}

pub fn twelve_a_generators() -> Vec<ProjMat> {
    let (w, w2) = (e3(), e3().pow(2));
    let (o, n) = (CycNum::one(), CycNum::zero());
    vec![
        proj(Mat4::diag([o.clone(), o.clone(), o.clone(), w.clone()])),
        proj(Mat4::permutation([2, 0, 1, 3])),
        proj(Mat4::diag([w.clone(), w2.clone(), o.clone(), o.clone()])),
        proj(Mat4([
            [o.clone(), o.clone(), o.clone(), n.clone()],
            [o.clone(), w.clone(), w2.clone(), n.clone()],
            [o.clone(), w2, w, n.clone()],
            [n.clone(), n.clone(), n, sqrt3()],
        ])),
    ]
}

/// The pencil member x0^3+x1^3+x2^3+x3^3 + lambda x0 x1 x2 used for the
/// order-54 subgroup when only e3 is available.
pub fn three_a_surface(lambda: &CycNum) -> CubicForm {
    let base = parse_poly("x0^3 + x1^3 + x2^3 + x3^3").expect("literal");
    let mixed = parse_poly("x0*x1*x2").expect("literal").scale(lambda);
    CubicForm::new(&base + &mixed).expect("cubic")
}

/// The first three generators of the 12A group plus the swap of x0 and x1.
pub fn three_a_generators() -> Vec<ProjMat> {
    let mut g = twelve_a_generators();
    g.truncate(3);
    g.push(proj(Mat4::permutation([1, 0, 2, 3])));
    g
}

pub fn c32d8_surface() -> CubicForm {
    cubic("2*(x0^3 + x1^3 + x2^3 + x3^3) - 3*(x0^2*x1 + x0*x1^2 + x2^2*x3 + x2*x3^2)")
}

pub fn c32d8_generators() -> Vec<ProjMat> {
    [
        [[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]],
        [[0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0]],
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    ]
    .into_iter()
    .map(|m| proj(Mat4::from_ints(m)))
    .collect()
}

/// T with c32d8_surface(x) = fermat(T x): the binary form
/// 2(u^3+v^3) - 3(u^2 v + u v^2) equals (e3 u + e3^2 v)^3 + (e3^2 u + e3 v)^3.
pub fn c32d8_to_fermat() -> Mat4 {
    let (w, w2, n) = (e3(), e3().pow(2), CycNum::zero());
    Mat4([
        [w.clone(), w2.clone(), n.clone(), n.clone()],
        [w2.clone(), w.clone(), n.clone(), n.clone()],
        [n.clone(), n.clone(), w.clone(), w2.clone()],
        [n.clone(), n, w2, w],
    ])
}

pub fn dic12_surface(alpha: &CycNum, beta: &CycNum) -> Result<CubicForm> {
    if !(&(alpha * alpha) + &(beta * beta) + CycNum::from_int(3)).is_zero() {
        return Err(Error::Invalid(format!("alpha^2 + beta^2 != -3 for ({alpha}, {beta})")));
    }
    let p = |s: &str| parse_poly(s).expect("literal");
    let one = CycNum::one();
    let f = &(&p("8*x0^3 + 8*x1^3 - 12*x0^2*x1 - 12*x0*x1^2 + 4*x1*x2*x3 + 2*x0*x3^2")
        + &p("x0*x2^2 + x1*x3^2").scale(&(alpha - &one)))
        - &p("x1*x2^2 + 2*x0*x2*x3").scale(&(alpha + &one));
    CubicForm::new(f)
}

/// (r, s) with r^3 = s^4 = 1 and s r s^-1 = r^-1.
pub fn dic12_generators(alpha: &CycNum, beta: &CycNum) -> Result<(Mat4, Mat4)> {
    let bi = beta.inv()?;
    let one = CycNum::one();
    let r = Mat4::from_ints([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]]);
    let mut s = Mat4::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0; 4], [0; 4]]);
    s.0[2][2] = &(alpha - &one) * &bi;
    s.0[2][3] = &(-&(alpha + &one)) * &bi;
    s.0[3][2] = &CycNum::from_int(-2) * &bi;
    s.0[3][3] = &(&one - alpha) * &bi;
    Ok((r, s))
}

pub fn four_a_family(alpha: &CycNum) -> CubicForm {
    let p = |s: &str| parse_poly(s).expect("literal");
    let one = CycNum::one();
    let f = &(&p("x0^2*x1 + x1^2*x3 + x2^3") - &p("x2^2*x3").scale(&(&one + alpha)))
        + &p("x2*x3^2").scale(alpha);
    CubicForm::new(f).expect("cubic")
}

/// diag(i, -1, 1, 1)
pub fn four_a_generator() -> ProjMat {
    proj(Mat4::diag([imag_unit(), CycNum::from_int(-1), CycNum::one(), CycNum::one()]))
}

/// The two lines of the four_a family at alpha = 9, each spanned by two points.
pub fn four_a_lines_at_nine() -> [[[CycNum; 4]; 2]; 2] {
    let i = |n: i64| CycNum::from_int(n);
    [
        [[i(1), i(0), i(0), i(0)], [i(0), i(0), i(1), i(1)]],
        [[i(1), i(0), i(0), rat(2, 3)], [i(0), i(1), rat(-1, 4), rat(1, 12)]],
    ]
}

/// Representative matrices used for the element-level obstructions.
pub fn class_matrix(name: &str) -> Option<ProjMat> {
    let o = CycNum::one;
    let m = match name {
        "3A" => Mat4::diag([e3(), o(), o(), o()]),
        "6C" => Mat4::diag([o(), o(), z(16), z(4)]),
        "4A" => Mat4::diag([imag_unit(), CycNum::from_int(-1), o(), o()]),
        "8A" => Mat4::diag([o(), z(18), z(3), z(12)]),
        "12A" => {
            let g = generate_group(&twelve_a_generators(), 108).expect("order 108");
            return g.into_iter().find(|m| m.order(12) == Some(12));
        }
        _ => return None,
    };
    Some(proj(m))
}

/// An element of C3^3 x| S4 acting on the Fermat cubic: the matrix
/// diag(e3^a1, ..., e3^a4) times the permutation matrix of `perm`, where
/// `perm[j]` is the image of coordinate j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FermatAut {
    pub diag: [u8; 4],
    pub perm: [u8; 4],
}

impl FermatAut {
    pub fn identity() -> Self {
        FermatAut { diag: [0; 4], perm: [0, 1, 2, 3] }
    }

    pub fn new(diag: [u8; 4], perm: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &p in &perm {
            if p > 3 || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
        }
        if diag.iter().any(|&a| a > 2) || diag.iter().map(|&a| a as u32).sum::<u32>() % 3 != 0 {
            return Err(Error::Invalid(format!("{diag:?} is not a sum-zero vector over F3")));
        }
        Ok(FermatAut { diag, perm })
    }

    pub fn diagonal(diag: [u8; 4]) -> Result<Self> {
        Self::new(diag, [0, 1, 2, 3])
    }

    pub fn permutation(perm: [u8; 4]) -> Result<Self> {
        Self::new([0; 4], perm)
    }

    /// All 648 elements, sorted.
    pub fn all() -> Vec<FermatAut> {
        let mut out = Vec::with_capacity(648);
        for code in 0..81u32 {
            let d: [u8; 4] = std::array::from_fn(|k| (code / 3u32.pow(k as u32) % 3) as u8);
            if d.iter().map(|&a| a as u32).sum::<u32>() % 3 != 0 {
                continue;
            }
            for perm in permutations4() {
                out.push(FermatAut { diag: d, perm });
            }
        }
        out.sort();
        out
    }

    /// (a, s)(b, t) = (a + s.b, s t) where (s.b)[s(j)] = b[j].
    pub fn mul(&self, o: &FermatAut) -> FermatAut {
        let mut diag = self.diag;
        for j in 0..4 {
            let k = self.perm[j] as usize;
            diag[k] = (diag[k] + o.diag[j]) % 3;
        }
        FermatAut { diag, perm: std::array::from_fn(|j| self.perm[o.perm[j] as usize]) }
    }

    pub fn inverse(&self) -> FermatAut {
        let mut inv = [0u8; 4];
        for j in 0..4 {
            inv[self.perm[j] as usize] = j as u8;
        }
        // -(s^-1 . a)
        let diag = std::array::from_fn(|j| (3 - self.diag[self.perm[j] as usize]) % 3);
        FermatAut { diag, perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        *self == FermatAut::identity()
    }

    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.mul(self);
            n += 1;
        }
        n
    }

    /// Entrywise action of zeta24 -> zeta24^unit on the matrix.
    pub fn galois(&self, unit: u32) -> FermatAut {
        let u = (unit % 3) as u8;
        FermatAut { diag: self.diag.map(|a| a * u % 3), perm: self.perm }
    }

    pub fn to_mat(&self) -> Mat4 {
        let d = self.diag.map(|a| e3().pow(a as u64));
        let perm = self.perm.map(|p| p as usize);
        Mat4::diag(d).mul(&Mat4::permutation(perm))
    }

    pub fn to_projmat(&self) -> ProjMat {
        proj(self.to_mat())
    }

    /// Parses products such as `[1,2,1,2]`, `(1234)`, `(12)(34)`,
    /// `[1,2,0,0](12)` or `id`, multiplied left to right.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let t = text.trim();
        if t == "id" {
            return Ok(FermatAut::identity());
        }
        let bytes = t.as_bytes();
        let mut acc = FermatAut::identity();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'*' => i += 1,
                b'[' => {
                    let close = t[i..].find(']').ok_or_else(|| err(i, "unclosed `[`"))? + i;
                    let parts: Vec<&str> = t[i + 1..close].split(',').map(str::trim).collect();
                    if parts.len() != 4 {
                        return Err(err(i, "expected four entries"));
                    }
                    let mut d = [0u8; 4];
                    for (k, s) in parts.iter().enumerate() {
                        d[k] = s.parse::<u8>().ok().filter(|&a| a < 3).ok_or_else(|| err(i, "entries must be 0, 1 or 2"))?;
                    }
                    acc = acc.mul(&FermatAut::diagonal(d).map_err(|_| err(i, "entries must sum to 0 mod 3"))?);
                    i = close + 1;
                }
                b'(' => {
                    let close = t[i..].find(')').ok_or_else(|| err(i, "unclosed `(`"))? + i;
                    let pts: Vec<u8> = t[i + 1..close]
                        .chars()
                        .filter(|c| !c.is_whitespace())
                        .map(|c| c.to_digit(10).filter(|d| (1..=4).contains(d)).map(|d| d as u8 - 1))
                        .collect::<Option<_>>()
                        .ok_or_else(|| err(i, "cycle entries must be 1..4"))?;
                    let mut perm = [0, 1, 2, 3];
                    for k in 0..pts.len() {
                        perm[pts[k] as usize] = pts[(k + 1) % pts.len()];
                    }
                    acc = acc.mul(&FermatAut::permutation(perm).map_err(|_| err(i, "repeated cycle entry"))?);
                    i = close + 1;
                }
                _ => return Err(err(i, "expected `[`, `(` or `id`")),
            }
        }
        Ok(acc)
    }
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Cycle notation on 1..4, `id` for the identity permutation.
pub fn cycle_string(perm: &[u8; 4]) -> String {
    let mut seen = [false; 4];
    let mut out = String::new();
    for s in 0..4 {
        if seen[s] || perm[s] as usize == s {
            continue;
        }
        out.push('(');
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            out.push(char::from(b'1' + j as u8));
            j = perm[j] as usize;
        }
        out.push(')');
    }
    out
}

impl fmt::Display for FermatAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        if self.diag != [0; 4] {
            let d = self.diag;
            write!(f, "[{},{},{},{}]", d[0], d[1], d[2], d[3])?;
        }
        write!(f, "{}", cycle_string(&self.perm))
    }
}
