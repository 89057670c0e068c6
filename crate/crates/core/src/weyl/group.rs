//! W(E6) as the group of permutations of the 27 standard lines generated by
//! the simple reflections, with its conjugacy classes.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::pic::{line_label, reflection_permutation, simple_roots, standard_lines, PicVector};

pub const ORDER: usize = 51840;

/// A permutation of the 27 standard lines; `p[k]` is the image of line k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub [u8; 27]);

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement(std::array::from_fn(|k| k as u8))
    }

    /// self after other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement(std::array::from_fn(|k| self.0[other.0[k] as usize]))
    }

    pub fn inverse(&self) -> WeylElement {
        let mut out = [0u8; 27];
        for (k, &v) in self.0.iter().enumerate() {
            out[v as usize] = k as u8;
        }
        WeylElement(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn pow(&self, e: u32) -> WeylElement {
        (0..e).fold(WeylElement::identity(), |acc, _| acc.compose(self))
    }

    /// Cycle lengths on the 27 lines, sorted.
    pub fn cycle_type(&self) -> Vec<u8> {
        let mut seen = [false; 27];
        let mut out = Vec::new();
        for s in 0..27 {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.0[k] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u32 {
        self.cycle_type().iter().fold(1u32, |acc, &l| num_integer::lcm(acc, l as u32))
    }

    /// The induced map on Pic in the basis H, E1..E6 (columns are images),
    /// using H = F12 + E1 + E2.
    pub fn pic_matrix(&self) -> [[i64; 7]; 7] {
        let lines = standard_lines();
        let img = |k: usize| lines[self.0[k] as usize];
        let mut cols = [[0i64; 7]; 7];
        cols[0] = img(6).add(&img(0)).add(&img(1)).coords();
        for i in 0..6 {
            cols[i + 1] = img(i).coords();
        }
        std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r]))
    }

    /// Coefficients c_0..c_7 of det(x I - M) on Pic, constant term first.
    pub fn pic_charpoly(&self) -> Vec<i64> {
        charpoly7(&self.pic_matrix())
    }

    /// The image of an arbitrary Pic vector.
    pub fn act_on_pic(&self, v: &PicVector) -> PicVector {
        let m = self.pic_matrix();
        let c = v.coords();
        let out: [i64; 7] = std::array::from_fn(|r| (0..7).map(|k| m[r][k] * c[k]).sum());
        PicVector::new(out[0] as i32, std::array::from_fn(|i| -out[i + 1] as i32))
    }

    pub fn cycle_string(&self) -> String {
        let mut seen = [false; 27];
        let mut out = String::new();
        for s in 0..27 {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                cyc.push(line_label(k));
                k = self.0[k] as usize;
            }
            out.push_str(&format!("({})", cyc.join(",")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{}", self.cycle_string())
    }
}

/// Newton's identities on traces of powers.
fn charpoly7(m: &[[i64; 7]; 7]) -> Vec<i64> {
    let mul = |a: &[[i64; 7]; 7], b: &[[i64; 7]; 7]| -> [[i64; 7]; 7] {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..7).map(|k| a[i][k] * b[k][j]).sum()))
    };
    let mut p = [0i64; 8];
    let mut pw = *m;
    for k in 1..=7 {
        p[k] = (0..7).map(|i| pw[i][i]).sum();
        pw = mul(&pw, m);
    }
    let mut e = [0i64; 8];
    e[0] = 1;
    for k in 1..=7 {
        let s: i64 = (1..=k).map(|i| if i % 2 == 1 { e[k - i] * p[i] } else { -e[k - i] * p[i] }).sum();
        e[k] = s / k as i64;
    }
    // det(xI - M) = sum (-1)^k e_k x^(7-k)
    (0..=7).map(|j| if (7 - j) % 2 == 0 { e[7 - j] } else { -e[7 - j] }).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Signature {
    pub order: u32,
    pub cycles: Vec<u8>,
    pub charpoly: Vec<i64>,
}

impl Signature {
    pub fn of(g: &WeylElement) -> Self {
        Signature { order: g.order(), cycles: g.cycle_type(), charpoly: g.pic_charpoly() }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: Vec<(u8, usize)> = Vec::new();
        for &c in &self.cycles {
            match counts.last_mut() {
                Some((l, n)) if *l == c => *n += 1,
                _ => counts.push((c, 1)),
            }
        }
        let cyc: Vec<String> = counts.iter().map(|(l, n)| format!("{l}^{n}")).collect();
        let chi: Vec<String> = self.charpoly.iter().map(i64::to_string).collect();
        write!(f, "o{}/{}/[{}]", self.order, cyc.join("."), chi.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: u32,
    pub size: usize,
    pub signature: Signature,
}

pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, u32>,
    generators: Vec<WeylElement>,
    class_id: Vec<u16>,
    classes: Vec<ClassInfo>,
}

impl WeylGroup {
    fn build() -> Self {
        let generators: Vec<WeylElement> =
            simple_roots().iter().map(|r| WeylElement(reflection_permutation(r))).collect();
        let mut elements = vec![WeylElement::identity()];
        let mut index = HashMap::from([(WeylElement::identity(), 0u32)]);
        let mut k = 0;
        while k < elements.len() {
            let g = elements[k];
            for s in &generators {
                let h = g.compose(s);
                if !index.contains_key(&h) {
                    index.insert(h, elements.len() as u32);
                    elements.push(h);
                }
            }
            k += 1;
        }
        let mut w = WeylGroup { elements, index, generators, class_id: Vec::new(), classes: Vec::new() };
        w.build_classes();
        w
    }

    fn build_classes(&mut self) {
        let n = self.elements.len();
        let mut class_id = vec![u16::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_id[start] != u16::MAX {
                continue;
            }
            let c = classes.len() as u16;
            class_id[start] = c;
            let mut q = VecDeque::from([start]);
            let mut size = 0;
            while let Some(x) = q.pop_front() {
                size += 1;
                for s in &self.generators {
                    // reflections are involutions
                    let y = self.index[&s.compose(&self.elements[x]).compose(s)] as usize;
                    if class_id[y] == u16::MAX {
                        class_id[y] = c;
                        q.push_back(y);
                    }
                }
            }
            classes.push(ClassInfo { rep: start as u32, size, signature: Signature::of(&self.elements[start]) });
        }
        self.class_id = class_id;
        self.classes = classes;
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &WeylElement {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &WeylElement) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.elements[a as usize].compose(&self.elements[b as usize])]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.index[&self.elements[a as usize].inverse()]
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_id(&self, i: u32) -> usize {
        self.class_id[i as usize] as usize
    }

    pub fn class_of_element(&self, g: &WeylElement) -> Option<usize> {
        self.index_of(g).map(|i| self.class_id(i))
    }

    /// Whether (order, cycle type, Pic charpoly) tells all classes apart.
    pub fn signatures_separate_classes(&self) -> bool {
        let mut sigs: Vec<&Signature> = self.classes.iter().map(|c| &c.signature).collect();
        sigs.sort();
        sigs.dedup();
        sigs.len() == self.classes.len()
    }
}

/// The full group, built once.
pub fn build_w_e6() -> &'static WeylGroup {
    static W: OnceLock<WeylGroup> = OnceLock::new();
    W.get_or_init(WeylGroup::build)
}
