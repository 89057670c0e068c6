use std::collections::{BTreeMap, BTreeSet};

use cubic_core::matforms::generate_group;
use cubic_core::models::{self, FermatAut};
use cubic_core::weyl::*;

fn census(h: &SubgroupHandle) -> BTreeMap<String, usize> {
    class_census(h).unwrap()
}

fn matrix_order_stats(gens: &[cubic_core::matforms::ProjMat], limit: usize) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for g in generate_group(gens, limit).unwrap() {
        *out.entry(g.order(60).unwrap()).or_insert(0) += 1;
    }
    out
}

#[test]
fn sylow3_of_twelve_a() {
    let h = named_subgroup("12A").unwrap();
    let c = census(&h.p_part(3));
    assert_eq!(c, BTreeMap::from([("1A".to_string(), 1), ("3A".to_string(), 2), ("3D".to_string(), 24)]));
}

#[test]
fn order_six_in_twelve_a_is_6a() {
    let w = build_w_e6();
    let h = named_subgroup("12A").unwrap();
    let six = h.elements_of_order(6);
    assert!(!six.is_empty());
    for e in six {
        assert_eq!(class_of(w.element(e)).unwrap(), "6A");
    }
}

fn is_dic12(h: &SubgroupHandle) -> bool {
    h.order() == 12 && !h.is_abelian() && h.elements_of_order(3).len() == 2 && h.elements_of_order(2).len() == 1
}

#[test]
fn three_c_two_is_dicyclic() {
    assert!(is_dic12(&named_subgroup("3C2").unwrap()));
}

#[test]
fn twelve_a_has_no_dicyclic_subgroup() {
    // a Dic12 is generated by an element of order 3 and one of order 4
    let w = build_w_e6();
    let h = named_subgroup("12A").unwrap();
    for &a in &h.elements_of_order(3) {
        for &b in &h.elements_of_order(4) {
            let g = SubgroupHandle::bounded(vec![a, b], 108).unwrap();
            assert!(!is_dic12(&g), "{} {}", w.element(a), w.element(b));
        }
    }
}

#[test]
fn abstract_and_matrix_twelve_a_agree() {
    let h = named_subgroup("12A").unwrap();
    assert_eq!(h.order_statistics(), matrix_order_stats(&models::twelve_a_generators(), 108));
}

#[test]
fn fermat_images_respect_products() {
    let fe = fermat_embedding().unwrap();
    let all = FermatAut::all();
    for a in all.iter().step_by(37) {
        for b in all.iter().step_by(41) {
            assert_eq!(fe.image(&a.mul(b)), fe.image(a).compose(&fe.image(b)));
        }
    }
}

#[test]
fn census_edge_cases() {
    assert_eq!(census(&SubgroupHandle::trivial()), BTreeMap::from([("1A".to_string(), 1)]));
    assert!(named_subgroup("3C").unwrap().elements_of_order(5).is_empty());
    assert!(named_subgroup("nope").is_err());
}

#[test]
fn clebsch_group_is_s5() {
    let h = named_subgroup("5A").unwrap();
    let stats = h.order_statistics();
    let s5 = BTreeMap::from([(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)]);
    assert_eq!(stats, s5);
    assert_eq!(census(&h).get("5A"), Some(&24));
}

#[test]
fn eight_a_chain() {
    let w = build_w_e6();
    let h = named_subgroup("8A").unwrap();
    let g = w.element(h.generator_indices()[0]);
    assert_eq!(class_of(g).unwrap(), "8A");
    assert_eq!(class_of(&g.pow(2)).unwrap(), "4A");
    assert_eq!(class_of(&g.pow(4)).unwrap(), "2A");
    assert!(named_subgroup("4A").unwrap().is_subgroup_of(&h));
}

fn conj(p: &FermatAut, a: &FermatAut) -> FermatAut {
    p.mul(a).mul(&p.inverse())
}

fn span(gens: &[FermatAut]) -> BTreeSet<FermatAut> {
    cubic_core::descent::close(gens).into_iter().collect()
}

#[test]
fn order_three_subgroups_of_the_diagonal() {
    let diag: Vec<FermatAut> = FermatAut::all().into_iter().filter(|a| a.perm == [0, 1, 2, 3]).collect();
    assert_eq!(diag.len(), 27);
    let perms: Vec<FermatAut> = FermatAut::all().into_iter().filter(|a| a.diag == [0; 4]).collect();
    let subgroups: BTreeSet<BTreeSet<FermatAut>> =
        diag.iter().filter(|a| !a.is_identity()).map(|a| span(&[*a])).collect();
    assert_eq!(subgroups.len(), 13);
    let mut orbits: Vec<BTreeSet<BTreeSet<FermatAut>>> = Vec::new();
    for s in &subgroups {
        if orbits.iter().any(|o| o.contains(s)) {
            continue;
        }
        orbits.push(perms.iter().map(|p| s.iter().map(|a| conj(p, a)).collect()).collect());
    }
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 4, 6]);
    for r in ["[1,2,0,0]", "[1,1,1,0]", "[1,2,1,2]"] {
        let s = span(&[FermatAut::parse(r).unwrap()]);
        assert!(orbits.iter().any(|o| o.contains(&s)), "{r}");
    }
}

#[test]
fn stabilizer_of_a_plane_is_d8() {
    let perms: Vec<FermatAut> = FermatAut::all().into_iter().filter(|a| a.diag == [0; 4]).collect();
    let plane = span(&[FermatAut::parse("[1,2,0,0]").unwrap(), FermatAut::parse("[0,0,1,2]").unwrap()]);
    let stab: BTreeSet<FermatAut> =
        perms.into_iter().filter(|p| plane.iter().all(|a| plane.contains(&conj(p, a)))).collect();
    let d8 = span(&["(12)", "(34)", "(13)(24)"].map(|s| FermatAut::parse(s).unwrap()));
    assert_eq!(stab, d8);
    assert_eq!(stab.len(), 8);
}

#[test]
fn four_b_is_the_split_s4() {
    let fe = fermat_embedding().unwrap();
    let h = named_subgroup("4B").unwrap();
    assert_eq!(h.order(), 24);
    assert!(h.is_subgroup_of(&named_subgroup("3C").unwrap()));
    let w = build_w_e6();
    let c = class_of(&fe.image(&FermatAut::parse("(1234)").unwrap())).unwrap();
    assert_eq!(c, "4B");
    assert_ne!(w.classes()[anchor_class_table().unwrap().class_named("4B").unwrap()].size, 540);
}

#[test]
fn swap_twist_group_is_conjugate_to_three_c_one() {
    let a = named_subgroup("3C1").unwrap();
    let fe = fermat_embedding().unwrap();
    let b = fe.subgroup_named(&["[1,2,0,0]", "[0,0,1,2]", "(12)", "(34)", "(13)(24)"]).unwrap();
    assert_eq!(b.order(), 72);
    assert!(subgroup_conjugate(&a, &b).is_some());
}
