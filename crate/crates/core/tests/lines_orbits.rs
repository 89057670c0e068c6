use std::collections::BTreeSet;

use cubic_core::exactnum::{rat, CycNum, Quad5, Scalar};
use cubic_core::lines::*;
use cubic_core::matforms::{Mat4, ProjMat};
use cubic_core::models;
use proptest::prelude::*;

fn int_line(rows: [[i64; 4]; 2]) -> Line {
    Line::span(&rows[0].map(CycNum::from_int), &rows[1].map(CycNum::from_int)).unwrap()
}

fn golden() -> Quad5 {
    // (-1 + sqrt5) / 2
    Quad5::new(rat(-1, 2), rat(1, 2))
}

#[test]
fn rules_agree_with_geometry_on_all_pairs() {
    let idx = FermatLineIndex::all();
    let mut count = 0;
    for (k, &a) in idx.iter().enumerate() {
        for &b in &idx[k + 1..] {
            assert_eq!(fermat_meet_rule(a, b).unwrap(), lines_meet(&fermat_line(a), &fermat_line(b)).unwrap(), "{a} {b}");
            count += 1;
        }
    }
    assert_eq!(count, 351);
}

#[test]
fn fermat_geometric_graph_is_schlafli() {
    let lines: Vec<Line> = FermatLineIndex::all().into_iter().map(fermat_line).collect();
    let g = IncidenceGraph::from_lines(&lines).unwrap();
    assert!(g.is_schlafli());
    assert_eq!(g.adj, IncidenceGraph::fermat_rules().adj);
}

#[test]
fn fermat_orbit_of_one_line() {
    let f = models::fermat();
    let d = ProjMat::new(Mat4::diag([1.into(), 1.into(), 1.into(), cubic_core::exactnum::e3()])).unwrap();
    let c = ProjMat::new(Mat4::permutation([1, 2, 0, 3])).unwrap();
    let orbit = enumerate_lines_orbit(&f, &[fermat_line(FermatLineIndex::new(0, 0, 0).unwrap())], &[d, c]).unwrap();
    let all: BTreeSet<Line> = FermatLineIndex::all().into_iter().map(fermat_line).collect();
    assert!(orbit.iter().all(|l| all.contains(l)));
    assert_eq!(orbit.len(), 9);
}

#[test]
fn clebsch_rational_seeds_give_fifteen() {
    let [a, b] = models::clebsch_skew_pair();
    let orbit = enumerate_lines_orbit(&models::clebsch(), &[int_line(a), int_line(b)], &models::clebsch_generators()).unwrap();
    assert_eq!(orbit.len(), 15);
}

#[test]
fn clebsch_all_27_with_sqrt5_seed() {
    let f = models::clebsch();
    let [a, b] = models::clebsch_skew_pair();
    let q = |x: i64| Quad5::from_cyc(&CycNum::from_int(x));
    let lift = |r: [i64; 4]| r.map(|x| q(x));
    let rational = [Line::span(&lift(a[0]), &lift(a[1])).unwrap(), Line::span(&lift(b[0]), &lift(b[1])).unwrap()];
    let irr = Line::span(&[q(1), q(0), q(-1), golden()], &[q(0), q(1), golden(), q(-1)]).unwrap();
    let mut seeds = rational.to_vec();
    seeds.push(irr);
    let orbit = enumerate_lines_orbit(&f, &seeds, &models::clebsch_generators()).unwrap();
    assert_eq!(orbit.len(), 27);
    assert!(orbit.iter().all(|l| line_on_surface(l, &f)));
    let g = IncidenceGraph::from_lines(&orbit).unwrap();
    assert!(g.is_schlafli());
    assert!(graph_isomorphism(&g, &IncidenceGraph::fermat_rules()).is_some());
}

#[test]
fn orbit_rejects_bad_input() {
    let off = fermat_line(FermatLineIndex::new(0, 1, 0).unwrap());
    assert!(enumerate_lines_orbit(&models::clebsch(), &[off], &[]).is_err());
    let g = ProjMat::new(Mat4::diag([2.into(), 1.into(), 1.into(), 1.into()])).unwrap();
    assert!(enumerate_lines_orbit::<CycNum>(&models::fermat(), &[], &[g]).is_err());
}

fn permuted(g: &IncidenceGraph, p: &[usize]) -> IncidenceGraph {
    let n = g.len();
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            adj[p[a]][p[b]] = g.adj[a][b];
        }
    }
    IncidenceGraph::new(g.labels.clone(), adj)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isomorphism_maps_adjacency(perm in Just((0..27usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = IncidenceGraph::fermat_rules();
        let h = permuted(&g, &perm);
        let p = graph_isomorphism(&g, &h).expect("isomorphic");
        for a in 0..27 {
            for b in 0..27 {
                prop_assert_eq!(g.adj[a][b], h.adj[p[a]][p[b]]);
            }
        }
    }

    #[test]
    fn fermat_lines_stay_on_surface_under_automorphisms(k in 0usize..648, l in 0usize..27) {
        let g = models::FermatAut::all()[k].to_mat();
        let line = fermat_line(FermatLineIndex::all()[l]);
        prop_assert!(line_on_surface(&line.image(&g), &models::fermat()));
    }
}

