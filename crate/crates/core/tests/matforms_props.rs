use cubic_core::exactnum::{e3, imag_unit, CycNum, FieldHandle};
use cubic_core::matforms::*;
use cubic_core::models;
use proptest::prelude::*;

fn field(n: &str) -> FieldHandle {
    FieldHandle::by_name(n).unwrap()
}

fn named_surfaces() -> Vec<(&'static str, CubicForm)> {
    let two_i = &imag_unit() * &CycNum::from_int(2);
    vec![
        ("clebsch", models::clebsch()),
        ("fermat", models::fermat()),
        ("eight_a", models::eight_a_surface()),
        ("twelve_a", models::twelve_a_surface()),
        ("three_a", models::three_a_surface(&CycNum::one())),
        ("c32d8", models::c32d8_surface()),
        ("dic12", models::dic12_surface(&CycNum::one(), &two_i).unwrap()),
        ("four_a", models::four_a_family(&CycNum::from_int(9))),
    ]
}

#[test]
fn smooth_and_no_point_mod_73() {
    for (name, f) in named_surfaces() {
        assert!(is_smooth(&f).unwrap(), "{name}");
        assert_eq!(singular_point_mod_p(&f, 73).unwrap(), None, "{name}");
    }
}

#[test]
fn singular_surfaces_agree_with_the_scan() {
    for text in ["x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", "x0^3 + x1^3 + x2^3", "x0^2*x3 + x1^3 + x2^3"] {
        let f = CubicForm::parse(text).unwrap();
        assert!(!is_smooth(&f).unwrap(), "{text}");
        assert!(singular_point_mod_p(&f, 73).unwrap().is_some(), "{text}");
    }
}

#[test]
fn named_generators_preserve_their_surfaces() {
    let two_i = &imag_unit() * &CycNum::from_int(2);
    let (r, s) = models::dic12_generators(&CycNum::one(), &two_i).unwrap();
    let cases: Vec<(CubicForm, Vec<ProjMat>)> = vec![
        (models::clebsch(), models::clebsch_generators()),
        (models::eight_a_surface(), vec![models::eight_a_generator()]),
        (models::twelve_a_surface(), models::twelve_a_generators()),
        (models::three_a_surface(&CycNum::from_int(5)), models::three_a_generators()),
        (models::c32d8_surface(), models::c32d8_generators()),
        (models::dic12_surface(&CycNum::one(), &two_i).unwrap(), vec![ProjMat::new(r).unwrap(), ProjMat::new(s).unwrap()]),
        (models::four_a_family(&CycNum::from_int(2)), vec![models::four_a_generator()]),
    ];
    for (f, gens) in cases {
        for g in gens {
            assert!(projective_invariance(&f, &g).is_some(), "{g}");
        }
    }
}

#[test]
fn displayed_rational_canonical_forms() {
    let o = CycNum::one;
    let m = Mat4::diag([e3(), o(), o(), o()]);
    let blocks: Vec<_> = rcf(&m).iter().map(companion).collect();
    let full = block_diagonal(&blocks);
    let z = CycNum::zero;
    let expect_m = vec![
        vec![o(), z(), z(), z()],
        vec![z(), o(), z(), z()],
        vec![z(), z(), z(), -e3()],
        vec![z(), z(), o(), &e3() + &o()],
    ];
    assert_eq!(full, expect_m);

    let e6 = CycNum::zeta_pow(4);
    let n = Mat4::diag([o(), o(), e6.pow(4), e6.clone()]);
    let full = block_diagonal(&rcf(&n).iter().map(companion).collect::<Vec<_>>());
    let e62 = e6.pow(2);
    let expect_n = vec![
        vec![o(), z(), z(), z()],
        vec![z(), z(), z(), -e62.clone()],
        vec![z(), o(), z(), e62],
        vec![z(), z(), o(), o()],
    ];
    assert_eq!(full, expect_n);
}

#[test]
fn definability_clauses() {
    let cm = |n: &str| models::class_matrix(n).unwrap();
    let def = |n: &str, k: &str| projectively_definable_over(&cm(n), &field(k)).unwrap();
    for (class, good) in [("3A", "Q(zeta3)"), ("6C", "Q(zeta3)"), ("4A", "Q(i)"), ("8A", "Q(zeta8)"), ("12A", "Q(zeta12)")] {
        assert!(!def(class, "Q"), "{class} over Q");
        assert!(def(class, good), "{class} over {good}");
    }
    assert!(!def("8A", "Q(i)"));
    assert!(!def("12A", "Q(i)"));
    assert!(!def("12A", "Q(zeta3)"));
    assert!(def("4A", "Q(zeta8)"));
}

fn small_mat() -> impl Strategy<Value = Mat4> {
    prop::array::uniform4(prop::array::uniform4(-2i64..=2)).prop_map(Mat4::from_ints)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn substitution_composes(a in small_mat(), b in small_mat()) {
        let f = models::clebsch().poly().clone();
        prop_assert_eq!(substitute(&substitute(&f, &a), &b), substitute(&f, &a.mul(&b)));
    }

    #[test]
    fn invariance_scalar_is_multiplicative(i in 0usize..4, j in 0usize..4) {
        let gens = models::twelve_a_generators();
        let f = models::twelve_a_surface();
        let (g, h) = (&gens[i], &gens[j]);
        let lg = projective_invariance(&f, g).unwrap();
        let lh = projective_invariance(&f, h).unwrap();
        let lhs = substitute(f.poly(), &g.rep().mul(h.rep()));
        prop_assert_eq!(lhs, f.poly().scale(&(&lg * &lh)));
    }

    #[test]
    fn definability_is_conjugation_invariant(k in 0usize..5, p in 0usize..24) {
        let names = ["3A", "6C", "4A", "8A", "12A"];
        let g = models::class_matrix(names[k]).unwrap();
        let perm = models::FermatAut::all().into_iter().filter(|a| a.diag == [0; 4]).nth(p).unwrap().to_projmat();
        let c = perm.mul(&g).mul(&perm.inverse());
        for f in FieldHandle::all() {
            prop_assert_eq!(projectively_definable_over(&g, &f).unwrap(), projectively_definable_over(&c, &f).unwrap());
        }
    }
}
