use std::collections::VecDeque;

use super::{fermat_meet_rule, lines_meet, FermatLineIndex, Line};
use crate::error::Result;
use crate::exactnum::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub labels: Vec<String>,
    pub adj: Vec<Vec<bool>>,
}

impl IncidenceGraph {
    pub fn new(labels: Vec<String>, adj: Vec<Vec<bool>>) -> Self {
        IncidenceGraph { labels, adj }
    }

    pub fn from_lines<F: Scalar>(lines: &[Line<F>]) -> Result<Self> {
        let n = lines.len();
        let mut adj = vec![vec![false; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let m = lines_meet(&lines[a], &lines[b])?;
                adj[a][b] = m;
                adj[b][a] = m;
            }
        }
        Ok(IncidenceGraph { labels: (0..n).map(|k| format!("l{k}")).collect(), adj })
    }

    /// The Fermat lines joined by the combinatorial rules, in index order.
    pub fn fermat_rules() -> Self {
        let idx = FermatLineIndex::all();
        let adj = idx
            .iter()
            .map(|&a| idx.iter().map(|&b| a != b && fermat_meet_rule(a, b).expect("distinct")).collect())
            .collect();
        IncidenceGraph { labels: idx.iter().map(ToString::to_string).collect(), adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&w| self.adj[v][w])
    }

    /// (n, k, lambda, mu) when the graph is strongly regular.
    pub fn srg_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.len();
        let k = self.neighbours(0).count();
        let (mut lambda, mut mu) = (None, None);
        for a in 0..n {
            if self.adj[a][a] || self.neighbours(a).count() != k {
                return None;
            }
            for b in a + 1..n {
                let common = (0..n).filter(|&c| self.adj[a][c] && self.adj[b][c]).count();
                let slot = if self.adj[a][b] { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(common),
                    Some(x) if x != common => return None,
                    _ => {}
                }
            }
        }
        Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    pub fn is_schlafli(&self) -> bool {
        self.srg_parameters() == Some((27, 10, 1, 5))
    }
}

/// A bijection `p` with adj1[a][b] = adj2[p[a]][p[b]], if one exists.
/// Vertices of `g1` are placed in breadth-first order and candidates tried in
/// increasing order, so the answer is deterministic.
pub fn graph_isomorphism(g1: &IncidenceGraph, g2: &IncidenceGraph) -> Option<Vec<usize>> {
    let n = g1.len();
    if g2.len() != n {
        return None;
    }
    let (s1, s2) = (g1.srg_parameters(), g2.srg_parameters());
    if s1 != s2 {
        return None;
    }
    let deg1: Vec<usize> = (0..n).map(|v| g1.neighbours(v).count()).collect();
    let deg2: Vec<usize> = (0..n).map(|v| g2.neighbours(v).count()).collect();
    let mut sorted1 = deg1.clone();
    let mut sorted2 = deg2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }
    let order = bfs_order(g1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g1, g2, &deg1, &deg2, &order, 0, &mut map, &mut used).then_some(map)
}

fn bfs_order(g: &IncidenceGraph) -> Vec<usize> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(v) = q.pop_front() {
            out.push(v);
            for w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &IncidenceGraph,
    g2: &IncidenceGraph,
    deg1: &[usize],
    deg2: &[usize],
    order: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for c in 0..g2.len() {
        if used[c] || deg1[v] != deg2[c] {
            continue;
        }
        if order[..k].iter().any(|&u| g1.adj[v][u] != g2.adj[c][map[u]]) {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g1, g2, deg1, deg2, order, k + 1, map, used) {
            return true;
        }
        used[c] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(n: usize, steps: &[usize]) -> IncidenceGraph {
        let adj = (0..n)
            .map(|a| (0..n).map(|b| a != b && steps.iter().any(|&s| (a + s) % n == b || (b + s) % n == a)).collect())
            .collect();
        IncidenceGraph::new((0..n).map(|k| k.to_string()).collect(), adj)
    }

    #[test]
    fn fermat_rule_graph_is_schlafli() {
        assert!(IncidenceGraph::fermat_rules().is_schlafli());
    }

    #[test]
    fn self_isomorphism() {
        let g = IncidenceGraph::fermat_rules();
        let p = graph_isomorphism(&g, &g).unwrap();
        assert!((0..27).all(|a| (0..27).all(|b| g.adj[a][b] == g.adj[p[a]][p[b]])));
    }

    #[test]
    fn circulant_is_rejected() {
        let c = circulant(27, &[1, 2, 3, 4, 5]);
        assert_eq!(c.neighbours(0).count(), 10);
        assert!(c.srg_parameters().is_none());
        assert!(graph_isomorphism(&IncidenceGraph::fermat_rules(), &c).is_none());
    }
}
