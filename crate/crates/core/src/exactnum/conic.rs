use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::cyc::{CycNum, Rational, DEG};
use super::galois::FieldHandle;

const HEIGHT: i64 = 8;

/// Offline-derived solvability of x^2 + y^2 = -3 in each subfield.
///
/// Real fields have no solution. Q(sqrt-2) has none because 3 splits there and
/// x^2 + y^2 + 3z^2 has no primitive zero over Q3 (checked mod 9 in the tests).
/// Every other subfield contains i, sqrt-3 or sqrt-6, each of which gives a
/// witness below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicTableEntry {
    /// (1, 2i)
    ViaI,
    /// (sqrt-3, 0)
    ViaSqrtMinus3,
    /// (sqrt-6/2, sqrt-6/2)
    ViaSqrtMinus6,
    Unsolvable,
}

const TABLE: [(&str, ConicTableEntry); 16] = {
    use ConicTableEntry::*;
    [
        ("Q", Unsolvable),
        ("Q(i)", ViaI),
        ("Q(zeta3)", ViaSqrtMinus3),
        ("Q(sqrt2)", Unsolvable),
        ("Q(sqrt-2)", Unsolvable),
        ("Q(sqrt3)", Unsolvable),
        ("Q(sqrt6)", Unsolvable),
        ("Q(sqrt-6)", ViaSqrtMinus6),
        ("Q(zeta8)", ViaI),
        ("Q(zeta12)", ViaI),
        ("Q(i,sqrt6)", ViaI),
        ("Q(sqrt2,sqrt3)", Unsolvable),
        ("Q(sqrt2,sqrt-3)", ViaSqrtMinus3),
        ("Q(sqrt-2,sqrt3)", ViaSqrtMinus6),
        ("Q(sqrt-2,sqrt-3)", ViaSqrtMinus3),
        ("Q(zeta24)", ViaI),
    ]
};

pub fn conic_table_entry(k: &FieldHandle) -> ConicTableEntry {
    let name = k.name();
    TABLE.iter().find(|(n, _)| *n == name).map(|(_, e)| *e).expect("all 16 subfields tabulated")
}

fn table_witness(entry: ConicTableEntry) -> Option<(CycNum, CycNum)> {
    let z = CycNum::zeta_pow;
    let two = CycNum::from_int(2);
    match entry {
        ConicTableEntry::ViaI => Some((CycNum::one(), &two * &z(6))),
        ConicTableEntry::ViaSqrtMinus3 => Some((&CycNum::one() + &(&two * &z(8)), CycNum::zero())),
        ConicTableEntry::ViaSqrtMinus6 => {
            let s = &(&z(3) + &z(9)) * &(&z(2) + &z(22));
            let half = s.scale(&Rational::new(1.into(), 2.into()));
            Some((half.clone(), half))
        }
        ConicTableEntry::Unsolvable => None,
    }
}

/// A solution of x^2 + y^2 = -3 with x, y in k, if one exists.
pub fn solve_conic_neg3(k: &FieldHandle) -> Option<(CycNum, CycNum)> {
    search(k).or_else(|| table_witness(conic_table_entry(k)))
}

fn small_rationals() -> Vec<Rational> {
    let mut v: Vec<Rational> = Vec::new();
    for q in 1..=HEIGHT {
        for p in 0..=HEIGHT {
            let r = Rational::new(p.into(), q.into());
            if !v.contains(&r) {
                v.push(r);
            }
        }
    }
    v.sort_by(|a, b| {
        let h = |r: &Rational| r.numer().clone().max(r.denom().clone());
        h(a).cmp(&h(b)).then(a.cmp(b))
    });
    v
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    let r = Rational::new(n, d);
    (&r * &r == *q && r.numer() <= &BigInt::from(HEIGHT) && r.denom() <= &BigInt::from(HEIGHT)).then_some(r)
}

/// Integral spanning set of k: traces of the powers of zeta24, made primitive.
fn generators(k: &FieldHandle) -> Vec<CycNum> {
    let mut out: Vec<CycNum> = Vec::new();
    for j in 0..24 {
        let t = k.trace(&CycNum::zeta_pow(j));
        if t.is_zero() {
            continue;
        }
        let nums = t.numerators();
        let mut g = BigInt::zero();
        for c in nums {
            g = g.gcd(c);
        }
        let lead_neg = nums.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let mut s = Rational::new(t.denominator().clone(), g);
        if lead_neg {
            s = -s;
        }
        let p = t.scale(&s);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn candidates(k: &FieldHandle) -> Vec<CycNum> {
    let g = generators(k);
    let mut out = g.clone();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            for c in [1, -1, 2, -2] {
                let b = &g[i] + &(&CycNum::from_int(c) * &g[j]);
                if !b.is_zero() && !out.contains(&b) {
                    out.push(b);
                }
            }
        }
    }
    out
}

/// Solves u*p + s*q = t over Q for coordinate vectors p, q, t.
enum Lin {
    Unique(Rational, Rational),
    /// q = lambda * p.
    Proportional(Rational),
    None,
}

fn solve2(p: &[Rational; DEG], q: &[Rational; DEG], t: &[Rational; DEG]) -> Lin {
    for a in 0..DEG {
        for b in a + 1..DEG {
            let det = &p[a] * &q[b] - &p[b] * &q[a];
            if det.is_zero() {
                continue;
            }
            let u = (&t[a] * &q[b] - &t[b] * &q[a]) / &det;
            let s = (&p[a] * &t[b] - &p[b] * &t[a]) / &det;
            let ok = (0..DEG).all(|c| &u * &p[c] + &s * &q[c] == t[c]);
            return if ok { Lin::Unique(u, s) } else { Lin::None };
        }
    }
    match (0..DEG).find(|&c| !p[c].is_zero()) {
        Some(c) => Lin::Proportional(&q[c] / &p[c]),
        None => Lin::None,
    }
}

fn search(k: &FieldHandle) -> Option<(CycNum, CycNum)> {
    let cands = candidates(k);
    let target = CycNum::from_int(-3);
    let tc = target.coords();
    let small = small_rationals();
    let squares: Vec<(CycNum, [Rational; DEG])> =
        cands.iter().map(|b| (b * b, (b * b).coords())).collect();
    for (bi, b) in cands.iter().enumerate() {
        // y = 0: b^2 a rational multiple of -3 with square quotient.
        if let Some(beta) = squares[bi].0.as_rational() {
            if let Some(r) = rational_sqrt(&(Rational::from_integer((-3).into()) / beta)) {
                return Some((b.scale(&r), CycNum::zero()));
            }
        }
    }
    for (bi, b) in cands.iter().enumerate() {
        for (ci, c) in cands.iter().enumerate().skip(bi) {
            let (pb, pc) = (&squares[bi].1, &squares[ci].1);
            match solve2(pb, pc, &tc) {
                Lin::Unique(u, s) => {
                    if let (Some(r), Some(t)) = (rational_sqrt(&u), rational_sqrt(&s)) {
                        return Some((b.scale(&r), c.scale(&t)));
                    }
                }
                Lin::Proportional(lambda) => {
                    let Some(beta) = squares[bi].0.as_rational() else { continue };
                    // r^2 + lambda s^2 = -3 / beta
                    let w = Rational::from_integer((-3).into()) / beta;
                    for r in &small {
                        let rest = &w - r * r;
                        if lambda.is_zero() {
                            if rest.is_zero() {
                                return Some((b.scale(r), CycNum::zero()));
                            }
                            continue;
                        }
                        if let Some(s) = rational_sqrt(&(rest / &lambda)) {
                            return Some((b.scale(r), c.scale(&s)));
                        }
                    }
                }
                Lin::None => {}
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(k: &FieldHandle, x: &CycNum, y: &CycNum) {
        assert_eq!(&(x * x) + &(y * y), CycNum::from_int(-3), "over {k}");
        assert!(k.contains(x) && k.contains(y));
    }

    #[test]
    fn examples() {
        assert_eq!(solve_conic_neg3(&FieldHandle::rationals()), None);
        for name in ["Q(zeta3)", "Q(i)", "Q(sqrt-6)", "Q(zeta24)"] {
            let k = FieldHandle::by_name(name).unwrap();
            let (x, y) = solve_conic_neg3(&k).unwrap();
            check(&k, &x, &y);
        }
    }

    #[test]
    fn search_agrees_with_table_on_every_subfield() {
        for k in FieldHandle::all() {
            let entry = conic_table_entry(&k);
            match (search(&k), table_witness(entry)) {
                (Some((x, y)), Some((tx, ty))) => {
                    check(&k, &x, &y);
                    check(&k, &tx, &ty);
                }
                (None, None) => {}
                (s, t) => panic!("{k}: search {s:?} vs table {t:?}"),
            }
        }
    }

    /// Independent local obstructions for the unsolvable rows.
    #[test]
    fn unsolvable_rows_are_obstructed() {
        let mut no_primitive_mod9 = true;
        for x in 0..9i64 {
            for y in 0..9i64 {
                for z in 0..9i64 {
                    let primitive = x % 3 != 0 || y % 3 != 0 || z % 3 != 0;
                    if primitive && (x * x + y * y + 3 * z * z) % 9 == 0 {
                        no_primitive_mod9 = false;
                    }
                }
            }
        }
        assert!(no_primitive_mod9);
        for k in FieldHandle::all() {
            if conic_table_entry(&k) != ConicTableEntry::Unsolvable {
                continue;
            }
            if k.is_real() {
                continue;
            }
            // The only non-real unsolvable field: 3 splits since -2 is a square mod 3.
            assert_eq!(k.name(), "Q(sqrt-2)");
            assert_eq!((-2i64).rem_euclid(3), 1);
        }
    }
}
