use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyc::CycNum;
use crate::error::{Error, Result};

/// The unit group (Z/24)^x, which is Gal(Q(zeta24)/Q).
pub const UNITS: [u32; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

/// zeta24 -> zeta24^unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaloisAut {
    unit: u32,
}

impl GaloisAut {
    pub fn new(unit: u32) -> Result<Self> {
        let u = unit % 24;
        if UNITS.contains(&u) {
            Ok(GaloisAut { unit: u })
        } else {
            Err(Error::Invalid(format!("{unit} is not a unit mod 24")))
        }
    }

    pub fn identity() -> Self {
        GaloisAut { unit: 1 }
    }

    pub fn unit(self) -> u32 {
        self.unit
    }

    pub fn compose(self, other: GaloisAut) -> GaloisAut {
        GaloisAut { unit: self.unit * other.unit % 24 }
    }

    pub fn all() -> impl Iterator<Item = GaloisAut> {
        UNITS.iter().map(|&unit| GaloisAut { unit })
    }
}

pub fn galois_apply(sigma: GaloisAut, x: &CycNum) -> CycNum {
    x.galois(sigma.unit)
}

/// A subfield of Q(zeta24), given by the subgroup of units fixing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldHandle {
    fixer: Vec<u32>,
}

/// Square roots used to name the quadratic subfields.
fn named_root(tag: &str) -> CycNum {
    let z = CycNum::zeta_pow;
    match tag {
        "i" => z(6),
        "sqrt-3" => &CycNum::one() + &(&CycNum::from_int(2) * &z(8)),
        "sqrt2" => &z(3) + &z(21),
        "sqrt-2" => &z(3) + &z(9),
        "sqrt3" => &z(2) + &z(22),
        "sqrt6" => &(&z(3) + &z(21)) * &(&z(2) + &z(22)),
        "sqrt-6" => &(&z(3) + &z(9)) * &(&z(2) + &z(22)),
        _ => unreachable!("unknown root tag {tag}"),
    }
}

/// All sixteen subfields with display names and the roots generating them.
const FIELD_NAMES: [(&str, &[&str]); 16] = [
    ("Q", &[]),
    ("Q(i)", &["i"]),
    ("Q(zeta3)", &["sqrt-3"]),
    ("Q(sqrt2)", &["sqrt2"]),
    ("Q(sqrt-2)", &["sqrt-2"]),
    ("Q(sqrt3)", &["sqrt3"]),
    ("Q(sqrt6)", &["sqrt6"]),
    ("Q(sqrt-6)", &["sqrt-6"]),
    ("Q(zeta8)", &["i", "sqrt2"]),
    ("Q(zeta12)", &["i", "sqrt3"]),
    ("Q(i,sqrt6)", &["i", "sqrt6"]),
    ("Q(sqrt2,sqrt3)", &["sqrt2", "sqrt3"]),
    ("Q(sqrt2,sqrt-3)", &["sqrt2", "sqrt-3"]),
    ("Q(sqrt-2,sqrt3)", &["sqrt-2", "sqrt3"]),
    ("Q(sqrt-2,sqrt-3)", &["sqrt-2", "sqrt-3"]),
    ("Q(zeta24)", &["i", "sqrt2", "sqrt3"]),
];

const ALIASES: [(&str, &str); 6] = [
    ("Q(sqrt-3)", "Q(zeta3)"),
    ("Q(e3)", "Q(zeta3)"),
    ("Q(zeta4)", "Q(i)"),
    ("Q(s3)", "Q(sqrt3)"),
    ("Q(zeta6)", "Q(zeta3)"),
    ("Q(w)", "Q(zeta24)"),
];

impl FieldHandle {
    pub fn from_fixer(units: &[u32]) -> Result<Self> {
        let mut fixer: Vec<u32> = units.iter().map(|u| u % 24).collect();
        fixer.sort_unstable();
        fixer.dedup();
        if fixer.iter().any(|u| !UNITS.contains(u)) || !fixer.contains(&1) {
            return Err(Error::Invalid(format!("{units:?} is not a subgroup of (Z/24)^x")));
        }
        for &a in &fixer {
            for &b in &fixer {
                if !fixer.contains(&(a * b % 24)) {
                    return Err(Error::Invalid(format!("{units:?} is not closed")));
                }
            }
        }
        Ok(FieldHandle { fixer })
    }

    /// The subfield generated over Q by the given elements.
    pub fn generated_by(elems: &[CycNum]) -> Self {
        let fixer = UNITS
            .iter()
            .copied()
            .filter(|&a| elems.iter().all(|x| &x.galois(a) == x))
            .collect();
        FieldHandle { fixer }
    }

    pub fn rationals() -> Self {
        FieldHandle { fixer: UNITS.to_vec() }
    }

    pub fn full() -> Self {
        FieldHandle { fixer: vec![1] }
    }

    /// Resolves a display name, an alias, or raw `fixer:1,5,...` syntax.
    pub fn by_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("fixer:") {
            let units = rest
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Invalid(format!("bad fixer list `{rest}`: {e}")))?;
            return Self::from_fixer(&units);
        }
        let canonical = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, c)| c);
        FIELD_NAMES
            .iter()
            .find(|(n, _)| *n == canonical)
            .map(|(_, roots)| Self::generated_by(&roots.iter().map(|r| named_root(r)).collect::<Vec<_>>()))
            .ok_or_else(|| Error::Invalid(format!("unknown field `{name}`")))
    }

    pub fn all() -> Vec<FieldHandle> {
        FIELD_NAMES.iter().map(|(n, _)| Self::by_name(n).expect("table name")).collect()
    }

    pub fn name(&self) -> String {
        FIELD_NAMES
            .iter()
            .map(|(n, _)| *n)
            .find(|n| Self::by_name(n).as_ref() == Ok(self))
            .map(str::to_string)
            .unwrap_or_else(|| format!("fixer:{}", self.fixer.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
    }

    pub fn fixer(&self) -> &[u32] {
        &self.fixer
    }

    pub fn fixer_auts(&self) -> impl Iterator<Item = GaloisAut> + '_ {
        self.fixer.iter().map(|&unit| GaloisAut { unit })
    }

    pub fn degree(&self) -> usize {
        8 / self.fixer.len()
    }

    pub fn is_real(&self) -> bool {
        self.fixer.contains(&23)
    }

    /// True when `other` is a subfield of `self`.
    pub fn contains_field(&self, other: &FieldHandle) -> bool {
        self.fixer.iter().all(|u| other.fixer.contains(u))
    }

    pub fn contains(&self, x: &CycNum) -> bool {
        self.fixer.iter().all(|&a| a == 1 || &x.galois(a) == x)
    }

    /// Trace from Q(zeta24) down to this field.
    pub fn trace(&self, x: &CycNum) -> CycNum {
        self.fixer.iter().fold(CycNum::zero(), |acc, &a| &acc + &x.galois(a))
    }
}

impl fmt::Display for FieldHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn field_contains(k: &FieldHandle, x: &CycNum) -> bool {
    k.contains(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_distinct_subgroups() {
        let all = FieldHandle::all();
        assert_eq!(all.len(), 16);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
            assert_eq!(FieldHandle::by_name(&a.name()).unwrap(), *a);
        }
        let degrees: Vec<usize> = all.iter().map(FieldHandle::degree).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 7);
        assert_eq!(degrees.iter().filter(|&&d| d == 4).count(), 7);
    }

    #[test]
    fn named_fixers() {
        let f = |n: &str| FieldHandle::by_name(n).unwrap().fixer().to_vec();
        assert_eq!(f("Q(i)"), vec![1, 5, 13, 17]);
        assert_eq!(f("Q(zeta3)"), vec![1, 7, 13, 19]);
        assert_eq!(f("Q(zeta8)"), vec![1, 17]);
        assert_eq!(f("Q(zeta12)"), vec![1, 13]);
        assert_eq!(f("Q(sqrt3)"), vec![1, 11, 13, 23]);
        assert_eq!(f("Q"), UNITS.to_vec());
        assert_eq!(f("Q(zeta24)"), vec![1]);
        assert_eq!(f("fixer:1,13"), vec![1, 13]);
        assert_eq!(f("fixer:1,5"), vec![1, 5]);
        assert!(FieldHandle::by_name("fixer:1,5,7").is_err());
    }

    #[test]
    fn group_is_elementary_abelian() {
        for a in GaloisAut::all() {
            assert_eq!(a.compose(a), GaloisAut::identity());
        }
    }
}
