use cubic_core::gcoh::*;

#[test]
fn all_eleven_classes_vanish() {
    let reps = s4_subgroup_classes();
    assert_eq!(reps.len(), 11);
    for h in reps {
        let g = perm_group(&h).unwrap();
        assert_eq!(h1_dim(&g, &F3Module::sum_zero(&h)), 0, "{h:?}");
    }
}

#[test]
fn oracle_agrees_on_small_subgroups() {
    let mut checked = 0;
    for h in s4_subgroups().into_iter().filter(|h| h.len() <= 4) {
        let g = perm_group(&h).unwrap();
        let m = F3Module::sum_zero(&h);
        assert_eq!(h1_dim(&g, &m), h1_bruteforce_oracle(&g, &m).unwrap(), "{h:?}");
        checked += 1;
    }
    // 1 + 9 + 4 + 7 subgroups of orders 1, 2, 3, 4
    assert_eq!(checked, 21);
}

#[test]
fn two_groups_have_no_cohomology() {
    for h in s4_subgroups().into_iter().filter(|h| h.len().is_power_of_two()) {
        let g = perm_group(&h).unwrap();
        assert_eq!(h1_dim(&g, &F3Module::sum_zero(&h)), 0);
    }
}

#[test]
fn trivial_group_oracle() {
    let g = FiniteGroup::trivial();
    assert_eq!(h1_bruteforce_oracle(&g, &F3Module::trivial(&g, 3)).unwrap(), 0);
}

#[test]
fn module_from_generators() {
    let c3 = FiniteGroup::cyclic(3);
    let rot = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
    let m = F3Module::from_generators(&c3, 3, &[(1, rot)]).unwrap();
    // permutation module F3[C3]: H^1 = 0
    assert_eq!(h1_dim(&c3, &m), 0);
    assert_eq!(h1_bruteforce_oracle(&c3, &m).unwrap(), 0);
    let bad = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
    assert!(F3Module::from_generators(&c3, 3, &[(1, bad)]).is_err());
}
