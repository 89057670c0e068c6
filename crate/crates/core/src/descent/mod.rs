//! Finite Galois quotients, cocycles valued in Aut of the Fermat cubic,
//! twisted automorphism groups and twisted actions on the 27 lines.
//!
//! A quotient element g acts on Q(zeta24) by zeta -> zeta^char24(g). The
//! twisted action of g is x -> c_g * g(x).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactnum::UNITS;
use crate::lines::{FermatLineIndex, Line};
use crate::models::{fermat_lines, FermatAut};
use crate::weyl::{fermat_embedding, SubgroupHandle};

/// A finite group given by its multiplication table (element 0 is the
/// identity) with a homomorphism to (Z/24)^x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisQuotient {
    table: Vec<Vec<usize>>,
    char24: Vec<u32>,
}

impl GaloisQuotient {
    pub fn new(table: Vec<Vec<usize>>, char24: Vec<u32>) -> Result<Self> {
        let n = table.len();
        let bad = |m: &str| Err(Error::Invalid(format!("Galois quotient: {m}")));
        if n == 0 || char24.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table must be square with entries below its size");
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return bad("element 0 must be the identity");
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == 0) {
                return bad("missing inverse");
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        if char24.iter().any(|u| !UNITS.contains(u)) {
            return bad("char24 values must be units mod 24");
        }
        for a in 0..n {
            for b in 0..n {
                if char24[table[a][b]] != char24[a] * char24[b] % 24 {
                    return bad("char24 is not a homomorphism");
                }
            }
        }
        Ok(GaloisQuotient { table, char24 })
    }

    /// C_n with generator 1 sent to `unit` (powers g^k are element k).
    pub fn cyclic(n: usize, unit: u32) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let char24 = (0..n).map(|k| (0..k).fold(1, |acc, _| acc * unit % 24)).collect();
        Self::new(table, char24)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn char24(&self, a: usize) -> u32 {
        self.char24[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// c_g for every element g of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle(pub Vec<FermatAut>);

impl Cocycle {
    pub fn trivial(gamma: &GaloisQuotient) -> Self {
        Cocycle(vec![FermatAut::identity(); gamma.order()])
    }

    pub fn from_names(names: &[&str]) -> Result<Self> {
        Ok(Cocycle(names.iter().map(|s| FermatAut::parse(s)).collect::<Result<_>>()?))
    }

    /// The cohomologous cocycle g -> a^-1 c_g g(a).
    pub fn twist_by(&self, gamma: &GaloisQuotient, a: &FermatAut) -> Cocycle {
        Cocycle(
            (0..gamma.order())
                .map(|g| a.inverse().mul(&self.0[g]).mul(&a.galois(gamma.char24(g))))
                .collect(),
        )
    }
}

/// First pair (g, h) with c_gh != c_g g(c_h), if any.
pub fn cocycle_violation(gamma: &GaloisQuotient, c: &Cocycle) -> Option<(usize, usize)> {
    if c.0.len() != gamma.order() {
        return Some((0, 0));
    }
    let n = gamma.order();
    (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .find(|&(g, h)| c.0[gamma.mul(g, h)] != c.0[g].mul(&c.0[h].galois(gamma.char24(g))))
}

pub fn validate_cocycle(gamma: &GaloisQuotient, c: &Cocycle) -> bool {
    cocycle_violation(gamma, c).is_none()
}

fn check(gamma: &GaloisQuotient, c: &Cocycle) -> Result<()> {
    match cocycle_violation(gamma, c) {
        Some((g, h)) => Err(Error::CocycleViolation(g, h)),
        None => Ok(()),
    }
}

/// Whether c_g g(x) c_g^-1 = x for every g.
fn fixed_by(gamma: &GaloisQuotient, c: &Cocycle, x: &FermatAut) -> bool {
    (0..gamma.order()).all(|g| c.0[g].mul(&x.galois(gamma.char24(g))).mul(&c.0[g].inverse()) == *x)
}

#[derive(Clone, Debug)]
pub struct TwistedAutGroup {
    pub elements: Vec<FermatAut>,
    pub weyl: SubgroupHandle,
}

/// The automorphisms of the Fermat cubic fixed by the twisted action.
pub fn twisted_aut_group(gamma: &GaloisQuotient, c: &Cocycle) -> Result<TwistedAutGroup> {
    check(gamma, c)?;
    let elements: Vec<FermatAut> = FermatAut::all().into_iter().filter(|x| fixed_by(gamma, c, x)).collect();
    let weyl = fermat_embedding()?.subgroup(&elements);
    Ok(TwistedAutGroup { elements, weyl })
}

/// Whether the element acts on roots of unity like a unit fixing e3.
pub fn fixes_e3(unit: u32) -> bool {
    unit % 3 == 1
}

/// For c_g of each kind (g fixing e3, g moving e3): the automorphisms c
/// with c g(x) c^-1 = x for every x in the group generated by `gens`.
pub fn cocycle_constraints_for(gens: &[FermatAut]) -> BTreeMap<&'static str, Vec<FermatAut>> {
    let group = close(gens);
    let mut out = BTreeMap::new();
    for (kind, unit) in [("e3-fixing", 1), ("e3-moving", 17)] {
        let ok: Vec<FermatAut> = FermatAut::all()
            .into_iter()
            .filter(|c| group.iter().all(|x| c.mul(&x.galois(unit)).mul(&c.inverse()) == *x))
            .collect();
        out.insert(kind, ok);
    }
    out
}

/// The subgroup generated by `gens`, sorted.
pub fn close(gens: &[FermatAut]) -> Vec<FermatAut> {
    let mut seen = BTreeSet::from([FermatAut::identity()]);
    let mut queue = vec![FermatAut::identity()];
    while let Some(a) = queue.pop() {
        for g in gens {
            let b = a.mul(g);
            if seen.insert(b) {
                queue.push(b);
            }
        }
    }
    seen.into_iter().collect()
}

/// The permutation of the Fermat lines (by index position) for each
/// quotient element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedLineAction {
    pub perms: Vec<[u8; 27]>,
}

impl TwistedLineAction {
    pub fn identity(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(k, &v)| k == v as usize))
    }
}

/// g acts on a line by conjugating its coefficients and then applying the
/// matrix of c_g.
pub fn twisted_line_action(gamma: &GaloisQuotient, c: &Cocycle) -> Result<TwistedLineAction> {
    check(gamma, c)?;
    let lines = fermat_lines();
    let index: BTreeMap<&Line, usize> = lines.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let perms: Vec<[u8; 27]> = (0..gamma.order())
        .map(|g| {
            let m = c.0[g].to_mat();
            let u = gamma.char24(g);
            let mut p = [0u8; 27];
            for (k, l) in lines.iter().enumerate() {
                p[k] = index[&l.galois(u).image(&m)] as u8;
            }
            p
        })
        .collect();
    let n = gamma.order();
    for g in 0..n {
        for h in 0..n {
            let gh = gamma.mul(g, h);
            if (0..27).any(|k| perms[gh][k] != perms[g][perms[h][k] as usize]) {
                return Err(Error::CocycleViolation(g, h));
            }
        }
    }
    Ok(TwistedLineAction { perms })
}

/// Orbits as sorted lists of indices, ordered by their least element.
pub fn orbits(action: &TwistedLineAction) -> Vec<Vec<FermatLineIndex>> {
    let all = FermatLineIndex::all();
    let mut seen = [false; 27];
    let mut out = Vec::new();
    for s in 0..27 {
        if seen[s] {
            continue;
        }
        let mut orbit = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(k) = stack.pop() {
            for p in &action.perms {
                let j = p[k] as usize;
                if orbit.insert(j) {
                    stack.push(j);
                }
            }
        }
        for &k in &orbit {
            seen[k] = true;
        }
        out.push(orbit.into_iter().map(|k| all[k]).collect());
    }
    out
}

/// C2 acting through an e3-moving unit, with c = (12)(34) on the generator.
pub fn c3c1_twist() -> (GaloisQuotient, Cocycle) {
    let g = GaloisQuotient::cyclic(2, 17).expect("valid");
    let c = Cocycle::from_names(&["id", "(12)(34)"]).expect("valid");
    (g, c)
}

/// C4 whose generator moves e3 (so its square acts trivially on roots of
/// unity), with c the homomorphism onto <(1234)>.
pub fn dic12_twist() -> (GaloisQuotient, Cocycle) {
    let g = GaloisQuotient::cyclic(4, 17).expect("valid");
    let c = Cocycle::from_names(&["id", "(1234)", "(13)(24)", "(1432)"]).expect("valid");
    (g, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(i: u8, n: u8, m: u8) -> FermatLineIndex {
        FermatLineIndex::new(i, n, m).unwrap()
    }

    #[test]
    fn trivial_cocycle_is_valid() {
        let g = GaloisQuotient::cyclic(2, 17).unwrap();
        assert!(validate_cocycle(&g, &Cocycle::trivial(&g)));
    }

    #[test]
    fn non_involution_on_c2_fails() {
        let g = GaloisQuotient::cyclic(2, 1).unwrap();
        assert!(validate_cocycle(&g, &Cocycle::from_names(&["id", "(12)"]).unwrap()));
        assert!(!validate_cocycle(&g, &Cocycle::from_names(&["id", "(123)"]).unwrap()));
    }

    #[test]
    fn char24_must_be_a_homomorphism() {
        let table = vec![vec![0, 1], vec![1, 0]];
        assert!(GaloisQuotient::new(table, vec![1, 5]).is_ok());
        assert!(GaloisQuotient::new(vec![vec![0, 1], vec![1, 0]], vec![5, 5]).is_err());
    }

    #[test]
    fn bare_galois_action_doubles_indices() {
        let g = GaloisQuotient::cyclic(2, 17).unwrap();
        let act = twisted_line_action(&g, &Cocycle::trivial(&g)).unwrap();
        for a in FermatLineIndex::all() {
            assert_eq!(act.perms[1][a.position()] as usize, a.galois(17).position());
        }
    }

    #[test]
    fn swap_twist() {
        let (g, c) = c3c1_twist();
        assert!(validate_cocycle(&g, &c));
        let t = twisted_aut_group(&g, &c).unwrap();
        assert_eq!(t.elements.len(), 72);
        let orb = orbits(&twisted_line_action(&g, &c).unwrap());
        assert!(orb.contains(&vec![idx(0, 0, 0)]));
        assert!(orb.contains(&vec![idx(0, 1, 2)]));
    }

    #[test]
    fn dic12_orbits() {
        let (g, c) = dic12_twist();
        let orb = orbits(&twisted_line_action(&g, &c).unwrap());
        let mut sizes: Vec<usize> = orb.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 2, 4, 4, 4, 4, 4]);
        assert!(orb.contains(&vec![idx(1, 0, 0)]));
    }
}
