//! Rationality bookkeeping for twisted line actions: fixed lines, skew
//! orbits and how far they blow down.

mod quartic;

use serde::Serialize;

use crate::descent::{orbits, TwistedLineAction};
use crate::error::Result;
use crate::exactnum::{field_contains, CycNum, FieldHandle};
use crate::lines::{line_on_surface, lines_meet, IncidenceGraph, Line};
use crate::models;

pub use quartic::{quartic_pencil_checks, QuarticChecks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rationality {
    Rational,
    NotRationalEvidence,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Unirational {
    Yes,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    FixedLines { lines: Vec<String>, reason: String },
    SkewPair { lines: [String; 2], reason: String },
    SkewOrbit { lines: Vec<String>, reason: String },
    BlowDown { degree: usize, lines: Vec<String>, reason: String },
    NoSkewOrbit { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub rationality: Rationality,
    pub unirational: Unirational,
    pub evidence: Vec<Evidence>,
}

/// Orbits (as vertex sets of `graph`) that are singletons, and those whose
/// lines are pairwise disjoint.
pub fn fixed_and_skew_orbits(orbits: &[Vec<usize>], graph: &IncidenceGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let fixed = orbits.iter().filter(|o| o.len() == 1).map(|o| o[0]).collect();
    let skew = orbits.iter().filter(|o| pairwise_skew(o, graph)).cloned().collect();
    (fixed, skew)
}

fn pairwise_skew(set: &[usize], graph: &IncidenceGraph) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| !graph.adj[a][b]))
}

/// The largest union of skew orbits whose lines are pairwise disjoint.
fn best_blow_down(skew: &[Vec<usize>], graph: &IncidenceGraph) -> Vec<usize> {
    fn go(k: usize, skew: &[Vec<usize>], graph: &IncidenceGraph, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if best.len() == 6 {
            return;
        }
        for j in k..skew.len() {
            let o = &skew[j];
            if cur.len() + o.len() > 6 || !o.iter().all(|&a| cur.iter().all(|&b| !graph.adj[a][b])) {
                continue;
            }
            let n = cur.len();
            cur.extend(o);
            go(j + 1, skew, graph, cur, best);
            cur.truncate(n);
        }
    }
    let mut best = Vec::new();
    go(0, skew, graph, &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

/// Applies, in order: two disjoint lines over k (fixed pair or orbit of
/// size 2) blow down to a quintic del Pezzo surface; a skew orbit of size
/// 3, 4 or 6 plus a k-point from a fixed line gives a del Pezzo surface of
/// degree at least 6 with a point; no skew orbit at all means minimal.
pub fn assess(orbits: &[Vec<usize>], graph: &IncidenceGraph) -> Verdict {
    let name = |k: usize| graph.labels[k].clone();
    let names = |v: &[usize]| v.iter().map(|&k| name(k)).collect::<Vec<_>>();
    let (fixed, skew) = fixed_and_skew_orbits(orbits, graph);
    let mut evidence = Vec::new();
    let unirational = if fixed.is_empty() {
        Unirational::Unknown
    } else {
        evidence.push(Evidence::FixedLines {
            lines: names(&fixed),
            reason: "a line over k carries k-points, and a cubic surface with a k-point is k-unirational".into(),
        });
        Unirational::Yes
    };
    let verdict = |r, evidence| Verdict { rationality: r, unirational, evidence };
    let pair = fixed.iter().enumerate().find_map(|(i, &a)| fixed[i + 1..].iter().find(|&&b| !graph.adj[a][b]).map(|&b| (a, b)));
    if let Some((a, b)) = pair {
        evidence.push(Evidence::SkewPair {
            lines: [name(a), name(b)],
            reason: "two disjoint lines over k blow down to a del Pezzo surface of degree 5, which is k-rational".into(),
        });
        return verdict(Rationality::Rational, evidence);
    }
    if let Some(o) = skew.iter().find(|o| o.len() == 2) {
        evidence.push(Evidence::SkewOrbit {
            lines: names(o),
            reason: "a Galois orbit of two disjoint lines blows down to a del Pezzo surface of degree 5, which is k-rational".into(),
        });
        return verdict(Rationality::Rational, evidence);
    }
    if !fixed.is_empty() {
        if let Some(o) = skew.iter().find(|o| [3, 4, 6].contains(&o.len())) {
            evidence.push(Evidence::SkewOrbit {
                lines: names(o),
                reason: format!(
                    "blowing down {} disjoint lines gives a del Pezzo surface of degree {} with a k-point, hence k-rational",
                    o.len(),
                    3 + o.len()
                ),
            });
            return verdict(Rationality::Rational, evidence);
        }
    }
    if skew.is_empty() {
        evidence.push(Evidence::NoSkewOrbit {
            reason: "no Galois orbit of disjoint lines: the surface is minimal, and minimal cubic surfaces are not k-rational".into(),
        });
        return verdict(Rationality::NotRationalEvidence, evidence);
    }
    let best = best_blow_down(&skew, graph);
    evidence.push(Evidence::BlowDown {
        degree: 3 + best.len(),
        lines: names(&best),
        reason: format!("the largest blow-down along skew orbits reaches a del Pezzo surface of degree {}", 3 + best.len()),
    });
    verdict(Rationality::Undetermined, evidence)
}

/// `assess` for a twisted action on the Fermat lines.
pub fn assess_twist(action: &TwistedLineAction) -> Verdict {
    let orb: Vec<Vec<usize>> = orbits(action).iter().map(|o| o.iter().map(|i| i.position()).collect()).collect();
    assess(&orb, &IncidenceGraph::fermat_rules())
}

/// Two lines, checked to lie on `f`, to be disjoint and to have
/// coefficients in k.
fn skew_pair_verdict(f: &crate::matforms::CubicForm, a: &Line, b: &Line, k: &FieldHandle) -> Result<Option<Verdict>> {
    let over_k = |l: &Line| l.basis().iter().flatten().all(|c| field_contains(k, c));
    if !line_on_surface(a, f) || !line_on_surface(b, f) || lines_meet(a, b)? || !over_k(a) || !over_k(b) {
        return Ok(None);
    }
    Ok(Some(Verdict {
        rationality: Rationality::Rational,
        unirational: Unirational::Yes,
        evidence: vec![Evidence::SkewPair {
            lines: [a.to_string(), b.to_string()],
            reason: "two disjoint lines over k blow down to a del Pezzo surface of degree 5, which is k-rational".into(),
        }],
    }))
}

fn int_line(rows: [[i64; 4]; 2]) -> Line {
    Line::span(&rows[0].map(CycNum::from_int), &rows[1].map(CycNum::from_int)).expect("independent rows")
}

/// The Clebsch surface with its two rational disjoint lines.
pub fn clebsch_certificate(k: &FieldHandle) -> Result<Option<Verdict>> {
    let [a, b] = models::clebsch_skew_pair();
    skew_pair_verdict(&models::clebsch(), &int_line(a), &int_line(b), k)
}

/// The C4 family at alpha = 9 with its two disjoint lines.
pub fn four_a_certificate(k: &FieldHandle) -> Result<Option<Verdict>> {
    let [a, b] = models::four_a_lines_at_nine();
    let la = Line::span(&a[0], &a[1])?;
    let lb = Line::span(&b[0], &b[1])?;
    skew_pair_verdict(&models::four_a_family(&CycNum::from_int(9)), &la, &lb, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{c3c1_twist, dic12_twist, twisted_line_action, Cocycle, GaloisQuotient};

    #[test]
    fn trivial_action_is_rational() {
        let g = GaloisQuotient::cyclic(1, 1).unwrap();
        let v = assess_twist(&twisted_line_action(&g, &Cocycle::trivial(&g)).unwrap());
        assert_eq!(v.rationality, Rationality::Rational);
        assert_eq!(v.unirational, Unirational::Yes);
    }

    #[test]
    fn dic12_twist_is_undetermined_at_degree_four() {
        let (g, c) = dic12_twist();
        let v = assess_twist(&twisted_line_action(&g, &c).unwrap());
        assert_eq!(v.rationality, Rationality::Undetermined);
        assert_eq!(v.unirational, Unirational::Yes);
        assert!(v.evidence.iter().any(|e| matches!(e, Evidence::BlowDown { degree: 4, .. })));
    }

    #[test]
    fn swap_twist_is_rational() {
        let (g, c) = c3c1_twist();
        let v = assess_twist(&twisted_line_action(&g, &c).unwrap());
        assert_eq!(v.rationality, Rationality::Rational);
    }

    #[test]
    fn clebsch_and_four_a_over_q() {
        let q = FieldHandle::by_name("Q").unwrap();
        assert_eq!(clebsch_certificate(&q).unwrap().unwrap().rationality, Rationality::Rational);
        assert_eq!(four_a_certificate(&q).unwrap().unwrap().rationality, Rationality::Rational);
    }

    #[test]
    fn minimal_when_no_skew_orbit() {
        let g = IncidenceGraph::fermat_rules();
        // one orbit of everything
        let v = assess(&[(0..27).collect()], &g);
        assert_eq!(v.rationality, Rationality::NotRationalEvidence);
        assert_eq!(v.unirational, Unirational::Unknown);
    }
}
