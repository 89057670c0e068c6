//! Buchberger's algorithm in grevlex order over Q(zeta24).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::poly::{grevlex, Mono, Poly};
use crate::error::{Error, Result};
use crate::exactnum::CycNum;

pub const DEFAULT_BUDGET: usize = 50_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Key(Mono);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms in decreasing order; the first term is the leading one.
type Terms = Vec<(Mono, CycNum)>;

fn divides(a: &Mono, b: &Mono) -> bool {
    (0..4).all(|k| a[k] <= b[k])
}

fn lcm(a: &Mono, b: &Mono) -> Mono {
    std::array::from_fn(|k| a[k].max(b[k]))
}

fn div(a: &Mono, b: &Mono) -> Mono {
    std::array::from_fn(|k| a[k] - b[k])
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    std::array::from_fn(|k| a[k] + b[k])
}

fn monic(mut t: Terms) -> Terms {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (_, c) in t.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    t
}

fn to_terms(p: &Poly) -> Terms {
    p.sorted_terms()
}

fn to_poly(t: &Terms) -> Poly {
    Poly::from_terms(t.iter().cloned())
}

/// Full reduction of `p` modulo `basis`.
fn reduce_terms(p: &Terms, basis: &[Terms]) -> Terms {
    let mut work: BTreeMap<Key, CycNum> = p.iter().map(|(m, c)| (Key(*m), c.clone())).collect();
    let mut rem: Terms = Vec::new();
    while let Some((Key(m), c)) = work.pop_last() {
        match basis.iter().find(|g| divides(&g[0].0, &m)) {
            Some(g) => {
                let shift = div(&m, &g[0].0);
                let f = &c * &g[0].1.inv().expect("nonzero");
                for (gm, gc) in &g[1..] {
                    let k = Key(mono_mul(gm, &shift));
                    let delta = &f * gc;
                    let e = work.entry(k).or_default();
                    *e -= &delta;
                    if e.is_zero() {
                        work.remove(&k);
                    }
                }
            }
            None => rem.push((m, c)),
        }
    }
    rem
}

fn s_poly(f: &Terms, g: &Terms) -> Terms {
    let l = lcm(&f[0].0, &g[0].0);
    let (sf, sg) = (div(&l, &f[0].0), div(&l, &g[0].0));
    let mut acc: BTreeMap<Key, CycNum> = BTreeMap::new();
    let fi = f[0].1.inv().expect("nonzero");
    let gi = g[0].1.inv().expect("nonzero");
    for (m, c) in &f[1..] {
        *acc.entry(Key(mono_mul(m, &sf))).or_default() += &(c * &fi);
    }
    for (m, c) in &g[1..] {
        *acc.entry(Key(mono_mul(m, &sg))).or_default() -= &(c * &gi);
    }
    acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.0, c)).collect()
}

/// Remainder of `p` on division by `basis` (assumed a Groebner basis for a
/// canonical answer).
pub fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let b: Vec<Terms> = basis.iter().filter(|g| !g.is_zero()).map(to_terms).collect();
    to_poly(&reduce_terms(&to_terms(p), &b))
}

pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    to_poly(&s_poly(&to_terms(f), &to_terms(g)))
}

pub fn leading_monomial(p: &Poly) -> Option<Mono> {
    p.sorted_terms().first().map(|(m, _)| *m)
}

pub fn groebner(gens: &[Poly]) -> Result<Vec<Poly>> {
    groebner_with_budget(gens, DEFAULT_BUDGET)
}

/// Reduced Groebner basis; `budget` bounds the number of S-pair reductions.
pub fn groebner_with_budget(gens: &[Poly], budget: usize) -> Result<Vec<Poly>> {
    let mut g: Vec<Terms> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for p in gens.iter().filter(|p| !p.is_zero()) {
        let r = reduce_terms(&to_terms(p), &g);
        if !r.is_empty() {
            let n = g.len();
            pairs.extend((0..n).map(|k| (k, n)));
            g.push(monic(r));
        }
    }
    let mut steps = 0;
    while !pairs.is_empty() {
        // normal selection strategy, ties broken deterministically
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (la, lb) = (pair_lcm(&g, pairs[a]), pair_lcm(&g, pairs[b]));
                grevlex(&la, &lb).then(pairs[a].cmp(&pairs[b]))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (g[i][0].0, g[j][0].0);
        if (0..4).all(|k| li[k] == 0 || lj[k] == 0) {
            continue;
        }
        let l = lcm(&li, &lj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(&g[k][0].0, &l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        let r = reduce_terms(&s_poly(&g[i], &g[j]), &g);
        if !r.is_empty() {
            let n = g.len();
            pairs.extend((0..n).map(|k| (k, n)));
            g.push(monic(r));
        }
    }
    Ok(interreduce(g))
}

fn pair_lcm(g: &[Terms], (i, j): (usize, usize)) -> Mono {
    lcm(&g[i][0].0, &g[j][0].0)
}

fn interreduce(g: Vec<Terms>) -> Vec<Poly> {
    let mut minimal: Vec<Terms> = Vec::new();
    for (i, f) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, h)| {
            j != i && divides(&h[0].0, &f[0].0) && (h[0].0 != f[0].0 || j < i)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut out: Vec<Terms> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| t.clone()).collect();
        let lead = vec![minimal[i][0].clone()];
        let mut tail = reduce_terms(&minimal[i][1..].to_vec(), &others);
        let mut t = lead;
        t.append(&mut tail);
        out.push(monic(t));
    }
    out.sort_by(|a, b| grevlex(&a[0].0, &b[0].0));
    out.iter().map(to_poly).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matforms::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn leads(b: &[Poly]) -> Vec<Mono> {
        b.iter().map(|x| leading_monomial(x).unwrap()).collect()
    }

    #[test]
    fn single_generator() {
        assert_eq!(groebner(&[p("x0")]).unwrap(), vec![p("x0")]);
    }

    #[test]
    fn linear_chain() {
        let b = groebner(&[p("x0-x1"), p("x1-x2")]).unwrap();
        let mut l = leads(&b);
        l.sort();
        assert_eq!(l, vec![[0, 1, 0, 0], [1, 0, 0, 0]]);
    }

    #[test]
    fn budget_is_enforced() {
        let gens = [p("x0^2 - x1*x2"), p("x1^2 - x0*x3"), p("x2^2 - x0*x1 + x3^2")];
        assert!(matches!(groebner_with_budget(&gens, 0), Err(Error::BudgetExhausted(0))));
    }

    #[test]
    fn s_pairs_reduce_to_zero() {
        let gens = [p("x0^2 - x1*x2"), p("x1^2 - x0*x3"), p("x2^2 - x0*x1 + e3*x3^2")];
        let b = groebner(&gens).unwrap();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                assert!(reduce(&s_polynomial(&b[i], &b[j]), &b).is_zero());
            }
        }
        for g in &gens {
            assert!(reduce(g, &b).is_zero());
        }
    }
}
