//! The lattice Z H + Z E1 + ... + Z E6 with (H,H) = 1, (Ei,Ei) = -1, and
//! the standard 27 lines in it.

use std::fmt;

use crate::lines::IncidenceGraph;

/// d H - sum m_i E_i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PicVector {
    pub d: i32,
    pub m: [i32; 6],
}

impl PicVector {
    pub const fn new(d: i32, m: [i32; 6]) -> Self {
        PicVector { d, m }
    }

    pub fn h() -> Self {
        PicVector::new(1, [0; 6])
    }

    pub fn e(i: usize) -> Self {
        let mut m = [0; 6];
        m[i] = -1;
        PicVector::new(0, m)
    }

    /// K = -3H + E1 + ... + E6.
    pub fn canonical() -> Self {
        PicVector::new(-3, [-1; 6])
    }

    pub fn pairing(&self, o: &PicVector) -> i32 {
        self.d * o.d - (0..6).map(|i| self.m[i] * o.m[i]).sum::<i32>()
    }

    pub fn add(&self, o: &PicVector) -> PicVector {
        PicVector::new(self.d + o.d, std::array::from_fn(|i| self.m[i] + o.m[i]))
    }

    pub fn scale(&self, k: i32) -> PicVector {
        PicVector::new(k * self.d, self.m.map(|x| k * x))
    }

    /// Coordinates in the basis H, E1, ..., E6.
    pub fn coords(&self) -> [i64; 7] {
        let mut c = [0; 7];
        c[0] = self.d as i64;
        for i in 0..6 {
            c[i + 1] = -self.m[i] as i64;
        }
        c
    }

    /// s_r(v) = v + (v, r) r, the reflection in a root r with (r, r) = -2.
    pub fn reflect(&self, r: &PicVector) -> PicVector {
        self.add(&r.scale(self.pairing(r)))
    }
}

impl fmt::Display for PicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H", self.d)?;
        for (i, m) in self.m.iter().enumerate() {
            if *m != 0 {
                write!(f, "{:+}E{}", -m, i + 1)?;
            }
        }
        Ok(())
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j)))
}

/// E1..E6, then H - Ei - Ej in lexicographic order of (i, j), then
/// 2H - sum E + Ei.
pub fn standard_lines() -> [PicVector; 27] {
    let mut out = Vec::with_capacity(27);
    out.extend((0..6).map(PicVector::e));
    for (i, j) in pairs() {
        let mut m = [0; 6];
        m[i] = 1;
        m[j] = 1;
        out.push(PicVector::new(1, m));
    }
    for i in 0..6 {
        let mut m = [1; 6];
        m[i] = 0;
        out.push(PicVector::new(2, m));
    }
    out.try_into().expect("27 lines")
}

/// E1..E6, F12..F56, G1..G6.
pub fn line_label(k: usize) -> String {
    match k {
        0..=5 => format!("E{}", k + 1),
        6..=20 => {
            let (i, j) = pairs().nth(k - 6).expect("in range");
            format!("F{}{}", i + 1, j + 1)
        }
        _ => format!("G{}", k - 20),
    }
}

pub fn line_index(label: &str) -> Option<usize> {
    (0..27).find(|&k| line_label(k) == label)
}

/// Vectors r with (r, K) = 0 and (r, r) = -2.
pub fn roots() -> Vec<PicVector> {
    let k = PicVector::canonical();
    let mut out = Vec::new();
    for code in 0..7i32.pow(7) {
        let mut c = code;
        let mut digit = || {
            let x = c % 7 - 3;
            c /= 7;
            x
        };
        let d = digit();
        let m = std::array::from_fn(|_| digit());
        let v = PicVector::new(d, m);
        if v.pairing(&k) == 0 && v.pairing(&v) == -2 {
            out.push(v);
        }
    }
    out.sort();
    out
}

/// E1 - E2, ..., E5 - E6 and H - E1 - E2 - E3.
pub fn simple_roots() -> [PicVector; 6] {
    let mut out = [PicVector::h(); 6];
    for (i, r) in out.iter_mut().take(5).enumerate() {
        *r = PicVector::e(i).add(&PicVector::e(i + 1).scale(-1));
    }
    out[5] = PicVector::new(1, [1, 1, 1, 0, 0, 0]);
    out
}

/// The permutation of the standard lines induced by a reflection.
pub fn reflection_permutation(r: &PicVector) -> [u8; 27] {
    let lines = standard_lines();
    std::array::from_fn(|k| {
        let img = lines[k].reflect(r);
        lines.iter().position(|l| *l == img).expect("reflections permute lines") as u8
    })
}

pub fn standard_graph() -> IncidenceGraph {
    let lines = standard_lines();
    let adj = (0..27).map(|a| (0..27).map(|b| a != b && lines[a].pairing(&lines[b]) == 1).collect()).collect();
    IncidenceGraph::new((0..27).map(line_label).collect(), adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_exceptional() {
        let k = PicVector::canonical();
        for l in standard_lines() {
            assert_eq!(l.pairing(&l), -1);
            assert_eq!(l.pairing(&k), -1);
        }
    }

    #[test]
    fn seventy_two_roots() {
        let r = roots();
        assert_eq!(r.len(), 72);
        assert!(simple_roots().iter().all(|s| r.contains(s)));
    }

    #[test]
    fn labels() {
        assert_eq!(line_label(0), "E1");
        assert_eq!(line_label(6), "F12");
        assert_eq!(line_label(20), "F56");
        assert_eq!(line_label(26), "G6");
        assert_eq!(line_index("F34"), Some(15));
    }

    #[test]
    fn graph_is_schlafli() {
        assert!(standard_graph().is_schlafli());
    }
}
