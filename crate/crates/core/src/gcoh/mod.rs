//! H^1 of finite groups with coefficients in F3-modules.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};

pub const ORACLE_BOUND: u128 = 10_000_000;

/// A finite group as a multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn trivial() -> Self {
        FiniteGroup { table: vec![vec![0]] }
    }

    pub fn cyclic(n: usize) -> Self {
        FiniteGroup { table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect() }
    }
}

pub type Perm4 = [u8; 4];

fn pmul(a: &Perm4, b: &Perm4) -> Perm4 {
    std::array::from_fn(|j| a[b[j] as usize])
}

fn pinv(a: &Perm4) -> Perm4 {
    let mut out = [0; 4];
    for j in 0..4 {
        out[a[j] as usize] = j as u8;
    }
    out
}

const ID4: Perm4 = [0, 1, 2, 3];

pub fn s4_elements() -> Vec<Perm4> {
    let mut out = Vec::new();
    for code in 0..256u32 {
        let p: Perm4 = std::array::from_fn(|k| (code >> (2 * k) & 3) as u8);
        if p.iter().collect::<BTreeSet<_>>().len() == 4 {
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Elements of the subgroup generated by `gens`, identity first, then sorted.
pub fn perm_closure(gens: &[Perm4]) -> Vec<Perm4> {
    let mut seen = BTreeSet::from([ID4]);
    let mut stack = vec![ID4];
    while let Some(a) = stack.pop() {
        for g in gens {
            let b = pmul(&a, g);
            if seen.insert(b) {
                stack.push(b);
            }
        }
    }
    seen.remove(&ID4);
    std::iter::once(ID4).chain(seen).collect()
}

/// All 30 subgroups of S4 (each is generated by two elements).
pub fn s4_subgroups() -> Vec<Vec<Perm4>> {
    let all = s4_elements();
    let mut found: BTreeSet<Vec<Perm4>> = BTreeSet::new();
    for a in &all {
        for b in &all {
            found.insert(perm_closure(&[*a, *b]));
        }
    }
    let mut out: Vec<Vec<Perm4>> = found.into_iter().collect();
    out.sort_by_key(|h| (h.len(), h.clone()));
    out
}

/// One subgroup from each conjugacy class, smallest order first.
pub fn s4_subgroup_classes() -> Vec<Vec<Perm4>> {
    let all = s4_elements();
    let mut reps: Vec<Vec<Perm4>> = Vec::new();
    let mut covered: HashSet<Vec<Perm4>> = HashSet::new();
    for h in s4_subgroups() {
        if covered.contains(&h) {
            continue;
        }
        for g in &all {
            let mut conj: Vec<Perm4> = h.iter().map(|x| pmul(&pmul(g, x), &pinv(g))).collect();
            conj.sort();
            conj.retain(|x| *x != ID4);
            conj.insert(0, ID4);
            covered.insert(conj);
        }
        reps.push(h);
    }
    reps
}

/// The group structure on a list of permutations closed under composition.
pub fn perm_group(elements: &[Perm4]) -> Result<FiniteGroup> {
    let pos: HashMap<Perm4, usize> = elements.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    if elements.first() != Some(&ID4) {
        return Err(Error::Invalid("identity must come first".into()));
    }
    let table = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| pos.get(&pmul(a, b)).copied().ok_or_else(|| Error::Invalid("not closed".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteGroup { table })
}

/// Matrices over F3 (entries 0..3), row-major.
pub type F3Mat = Vec<Vec<u8>>;

fn f3_mat_mul(a: &F3Mat, b: &F3Mat) -> F3Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| ((0..n).map(|k| a[i][k] as u32 * b[k][j] as u32).sum::<u32>() % 3) as u8).collect()).collect()
}

fn f3_apply(a: &F3Mat, v: &[u8]) -> Vec<u8> {
    a.iter().map(|row| (row.iter().zip(v).map(|(&x, &y)| x as u32 * y as u32).sum::<u32>() % 3) as u8).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Module {
    pub dim: usize,
    /// One matrix per group element.
    pub action: Vec<F3Mat>,
}

impl F3Module {
    /// Checks that `action` is a homomorphism on the full table.
    pub fn new(group: &FiniteGroup, dim: usize, action: Vec<F3Mat>) -> Result<Self> {
        if action.len() != group.order() || action.iter().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim || r.iter().any(|&x| x > 2))) {
            return Err(Error::Invalid("module matrices have the wrong shape".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if action[group.mul(a, b)] != f3_mat_mul(&action[a], &action[b]) {
                    return Err(Error::Invalid(format!("action is not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(F3Module { dim, action })
    }

    /// Extends matrices given on generators to the group by breadth-first
    /// search; `gens[k]` is the element index of the k-th generator.
    pub fn from_generators(group: &FiniteGroup, dim: usize, gens: &[(usize, F3Mat)]) -> Result<Self> {
        let ident: F3Mat = (0..dim).map(|i| (0..dim).map(|j| (i == j) as u8).collect()).collect();
        let mut action: Vec<Option<F3Mat>> = vec![None; group.order()];
        action[0] = Some(ident);
        let mut queue = vec![0];
        while let Some(a) = queue.pop() {
            for (g, m) in gens {
                let b = group.mul(a, *g);
                if action[b].is_none() {
                    action[b] = Some(f3_mat_mul(action[a].as_ref().expect("set"), m));
                    queue.push(b);
                }
            }
        }
        let action = action.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::Invalid("generators do not generate".into()))?;
        F3Module::new(group, dim, action)
    }

    pub fn trivial(group: &FiniteGroup, dim: usize) -> Self {
        let ident: F3Mat = (0..dim).map(|i| (0..dim).map(|j| (i == j) as u8).collect()).collect();
        F3Module { dim, action: vec![ident; group.order()] }
    }

    /// {v in F3^4 : sum v = 0} with the permutation action, in the
    /// coordinates v0, v1, v2 (v3 is determined).
    pub fn sum_zero(elements: &[Perm4]) -> Self {
        let action = elements
            .iter()
            .map(|p| {
                // column j = image of e_j - e_3
                let mut m = vec![vec![0u8; 3]; 3];
                for j in 0..3 {
                    let mut v = [0i32; 4];
                    v[p[j] as usize] += 1;
                    v[p[3] as usize] -= 1;
                    for i in 0..3 {
                        m[i][j] = v[i].rem_euclid(3) as u8;
                    }
                }
                m
            })
            .collect();
        F3Module { dim: 3, action }
    }
}

/// Rank over F3.
pub fn f3_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c]; // 1 and 2 are their own inverses mod 3
        for x in rows[r].iter_mut() {
            *x = *x * inv % 3;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + 3 * 3 - f * rows[r][j] % 3) % 3;
                }
            }
        }
        r += 1;
    }
    r
}

/// dim Z^1 - dim B^1, with cocycles as value tables on all of H.
pub fn h1_dim(h: &FiniteGroup, m: &F3Module) -> usize {
    let (n, d) = (h.order(), m.dim);
    let var = |g: usize, i: usize| g * d + i;
    let mut rows = Vec::new();
    // c(gh) - c(g) - g c(h) = 0
    for g in 0..n {
        for k in 0..n {
            for i in 0..d {
                let mut row = vec![0u8; n * d];
                let gk = h.mul(g, k);
                row[var(gk, i)] = (row[var(gk, i)] + 1) % 3;
                row[var(g, i)] = (row[var(g, i)] + 2) % 3;
                for j in 0..d {
                    row[var(k, j)] = (row[var(k, j)] + 2 * m.action[g][i][j]) % 3;
                }
                rows.push(row);
            }
        }
    }
    let z1 = n * d - f3_rank(rows);
    // image of a -> (g a - a)_g
    let b_rows: Vec<Vec<u8>> = (0..d)
        .map(|j| {
            (0..n)
                .flat_map(|g| (0..d).map(move |i| (g, i)))
                .map(|(g, i)| (m.action[g][i][j] + 3 - (i == j) as u8) % 3)
                .collect()
        })
        .collect();
    z1 - f3_rank(b_rows)
}

fn vectors(d: usize) -> Vec<Vec<u8>> {
    (0..3usize.pow(d as u32)).map(|c| (0..d).map(|i| (c / 3usize.pow(i as u32) % 3) as u8).collect()).collect()
}

/// log_3 |Z^1| / |B^1| by enumerating every map H -> M.
pub fn h1_bruteforce_oracle(h: &FiniteGroup, m: &F3Module) -> Result<usize> {
    let (n, d) = (h.order(), m.dim);
    let size = 3u128.checked_pow((n * d) as u32).unwrap_or(u128::MAX);
    if size > ORACLE_BOUND {
        return Err(Error::OracleTooLarge(size));
    }
    let vs = vectors(d);
    let add = |a: &[u8], b: &[u8]| -> Vec<u8> { a.iter().zip(b).map(|(x, y)| (x + y) % 3).collect() };
    let mut z = 0u64;
    let mut choice = vec![0usize; n];
    loop {
        let c = |g: usize| &vs[choice[g]];
        let ok = (0..n).all(|g| (0..n).all(|k| *c(h.mul(g, k)) == add(c(g), &f3_apply(&m.action[g], c(k)))));
        if ok {
            z += 1;
        }
        let mut k = 0;
        while k < n {
            choice[k] += 1;
            if choice[k] < vs.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    let b: BTreeSet<Vec<Vec<u8>>> = vs
        .iter()
        .map(|a| (0..n).map(|g| add(&f3_apply(&m.action[g], a), &a.iter().map(|x| (3 - x) % 3).collect::<Vec<_>>())).collect())
        .collect();
    let ratio = z / b.len() as u64;
    let mut e = 0;
    let mut r = ratio;
    while r > 1 {
        r /= 3;
        e += 1;
    }
    if 3u64.pow(e) != ratio {
        return Err(Error::Invalid(format!("|Z1|/|B1| = {ratio} is not a power of 3")));
    }
    Ok(e as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_has_eleven_classes() {
        assert_eq!(s4_subgroups().len(), 30);
        assert_eq!(s4_subgroup_classes().len(), 11);
    }

    #[test]
    fn control_case() {
        let c3 = FiniteGroup::cyclic(3);
        let m = F3Module::trivial(&c3, 1);
        assert_eq!(h1_dim(&c3, &m), 1);
        assert_eq!(h1_bruteforce_oracle(&c3, &m).unwrap(), 1);
    }

    #[test]
    fn full_s4_vanishes() {
        let s4 = perm_closure(&[[1, 2, 3, 0], [1, 0, 2, 3]]);
        let g = perm_group(&s4).unwrap();
        let m = F3Module::sum_zero(&s4);
        assert!(F3Module::new(&g, 3, m.action.clone()).is_ok());
        assert_eq!(h1_dim(&g, &m), 0);
        assert!(matches!(h1_bruteforce_oracle(&g, &m), Err(Error::OracleTooLarge(_))));
    }

    #[test]
    fn three_cycle_vanishes() {
        let c = perm_closure(&[[1, 2, 0, 3]]);
        let g = perm_group(&c).unwrap();
        let m = F3Module::sum_zero(&c);
        assert_eq!(h1_dim(&g, &m), 0);
        assert_eq!(h1_bruteforce_oracle(&g, &m).unwrap(), 0);
    }
}
