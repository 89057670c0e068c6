use cubic_core::exactnum::{
    cyc_arith, e3, field_contains, galois_apply, imag_unit, sqrt3, zeta, ArithOp, CycNum, FieldHandle,
    GaloisAut, Rational, UNITS,
};
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = CycNum> {
    (proptest::array::uniform8(-5i64..=5), 1i64..=4).prop_map(|(c, d)| {
        let coords = c.map(|n| Rational::new(n.into(), d.into()));
        CycNum::from_coords(&coords)
    })
}

fn aut() -> impl Strategy<Value = GaloisAut> {
    proptest::sample::select(UNITS.to_vec()).prop_map(|u| GaloisAut::new(u).unwrap())
}

proptest! {
    #[test]
    fn associativity(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn distributivity(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverse(x in cyc()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.inv().unwrap() * &x == CycNum::one());
    }

    #[test]
    fn galois_is_a_ring_hom(s in aut(), x in cyc(), y in cyc()) {
        prop_assert_eq!(galois_apply(s, &(&x * &y)), galois_apply(s, &x) * galois_apply(s, &y));
        prop_assert_eq!(galois_apply(s, &(&x + &y)), galois_apply(s, &x) + galois_apply(s, &y));
    }

    #[test]
    fn galois_composition(s in aut(), t in aut(), x in cyc()) {
        prop_assert_eq!(galois_apply(s.compose(t), &x), galois_apply(s, &galois_apply(t, &x)));
    }

    #[test]
    fn printing_round_trips(x in cyc()) {
        let back: CycNum = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn containment_is_monotone(x in cyc()) {
        let fields = FieldHandle::all();
        for k in &fields {
            for l in &fields {
                if l.contains_field(k) && field_contains(k, &x) {
                    prop_assert!(field_contains(l, &x));
                }
            }
        }
    }
}

#[test]
fn arithmetic_examples() {
    let one = CycNum::one();
    assert!((&(&e3() * &e3()) + &e3() + one.clone()).is_zero());
    assert_eq!(&imag_unit() * &imag_unit(), CycNum::from_int(-1));
    let a = &one + &(&CycNum::from_int(2) * &e3());
    assert_eq!(&a * &a, CycNum::from_int(-3));
    assert_eq!(cyc_arith(ArithOp::Inv, &CycNum::zero(), &one), Err(cubic_core::Error::DivisionByZero));
}

#[test]
fn roots_of_unity() {
    let w = zeta(24).unwrap();
    let phi = &(&w.pow(8) - &w.pow(4)) + &CycNum::one();
    assert!(phi.is_zero());
    for n in [1, 2, 3, 4, 6, 8, 12, 24] {
        let z = zeta(n).unwrap();
        assert_eq!(z.order(), Some(n));
        for d in 1..n {
            assert!(!z.pow(d as u64).is_one());
        }
        assert!(z.pow(n as u64).is_one());
    }
    assert!(zeta(5).is_err());
    assert_eq!(zeta(8).unwrap(), CycNum::zeta_pow(3));
    assert_eq!(zeta(8).unwrap().pow(4), CycNum::from_int(-1));
}

#[test]
fn galois_examples() {
    let s5 = GaloisAut::new(5).unwrap();
    assert_eq!(galois_apply(s5, &CycNum::zeta_pow(1)), CycNum::zeta_pow(5));
    let s17 = GaloisAut::new(17).unwrap();
    assert_eq!(galois_apply(s17, &e3()), &e3() * &e3());
    let q: CycNum = "7/3".parse().unwrap();
    for s in GaloisAut::all() {
        assert_eq!(galois_apply(s, &q), q);
    }
}

#[test]
fn containment_examples() {
    let q = FieldHandle::rationals();
    let qz3 = FieldHandle::by_name("Q(zeta3)").unwrap();
    let qi = FieldHandle::by_name("Q(i)").unwrap();
    assert!(!field_contains(&q, &e3()));
    assert!(field_contains(&qz3, &e3()));
    assert!(!field_contains(&qi, &sqrt3()));
    assert_eq!(&sqrt3() * &sqrt3(), CycNum::from_int(3));
}
