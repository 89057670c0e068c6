//! Which of the seven maximal groups, and which element classes, act on a
//! smooth cubic surface over a given subfield of Q(zeta24).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use cubic_core::exactnum::{conic_table_entry, field_contains, solve_conic_neg3, zeta, ConicTableEntry, CycNum, FieldHandle};
use cubic_core::matforms::{generate_group, is_smooth, projective_invariance, projectively_definable_over, CubicForm, ProjMat};
use cubic_core::models::{self, FermatAut};
use cubic_core::weyl::{anchor_class_table, build_w_e6, class_census, named_subgroup, FERMAT_GENERATORS};
use cubic_core::Result;

pub const ROWS: [&str; 7] = ["5A", "3C", "12A", "8A", "4A", "3C1", "3C2"];

pub const FIELDS: [&str; 6] = ["Q", "Q(i)", "Q(zeta3)", "Q(zeta8)", "Q(zeta12)", "Q(sqrt3)"];

fn has_root(k: &FieldHandle, n: u32) -> bool {
    field_contains(k, &zeta(n).expect("n divides 24"))
}

/// The condition on k from the classification table, evaluated directly.
pub fn table_condition(row: &str, k: &FieldHandle) -> bool {
    match row {
        "5A" | "3C1" => true,
        "3C" => has_root(k, 3),
        "12A" => has_root(k, 12),
        "8A" => has_root(k, 8),
        "4A" => has_root(k, 4),
        "3C2" => conic_table_entry(k) != ConicTableEntry::Unsolvable,
        _ => false,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Realized { surface: String, generators: Vec<String>, group_order: usize },
    NotDefinable { class: String, matrix: String },
    ConicInsolvable,
    /// Neither a construction nor an obstruction was found.
    Unresolved { reason: String },
}

impl Outcome {
    pub fn realized(&self) -> bool {
        matches!(self, Outcome::Realized { .. })
    }

    pub fn obstructed(&self) -> bool {
        matches!(self, Outcome::NotDefinable { .. } | Outcome::ConicInsolvable)
    }
}

fn over_k_poly(f: &CubicForm, k: &FieldHandle) -> bool {
    f.poly().terms().all(|(_, c)| field_contains(k, c))
}

fn over_k_mat(g: &ProjMat, k: &FieldHandle) -> bool {
    g.rep().entries().all(|c| field_contains(k, c))
}

struct Model {
    surface: CubicForm,
    gens: Vec<ProjMat>,
    /// Group order, or None when the generators fail to preserve a smooth surface.
    order: Option<usize>,
}

fn certify(surface: CubicForm, gens: Vec<ProjMat>) -> Result<Model> {
    let ok = is_smooth(&surface)? && gens.iter().all(|g| projective_invariance(&surface, g).is_some());
    let order = if ok { Some(generate_group(&gens, 648)?.len()) } else { None };
    Ok(Model { surface, gens, order })
}

fn fixed_model(row: &str) -> Result<&'static Model> {
    static CELLS: [OnceLock<std::result::Result<Model, cubic_core::Error>>; 6] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = ROWS.iter().position(|r| *r == row).expect("fixed row");
    CELLS[i]
        .get_or_init(|| {
            let (f, g) = match row {
                "5A" => (models::clebsch(), models::clebsch_generators()),
                "3C" => {
                    let gens = FERMAT_GENERATORS.iter().map(|s| FermatAut::parse(s).map(|a| a.to_projmat())).collect::<Result<_>>()?;
                    (models::fermat(), gens)
                }
                "12A" => (models::twelve_a_surface(), models::twelve_a_generators()),
                "8A" => (models::eight_a_surface(), vec![models::eight_a_generator()]),
                "4A" => (models::eight_a_surface(), vec![models::eight_a_generator().pow(2)]),
                _ => (models::c32d8_surface(), models::c32d8_generators()),
            };
            certify(f, g)
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// (alpha, beta) with alpha^2 + beta^2 = -3 over k and beta nonzero.
pub fn conic_parameters(k: &FieldHandle) -> Option<(CycNum, CycNum)> {
    let (a, b) = solve_conic_neg3(k)?;
    Some(if b.is_zero() { (b, a) } else { (a, b) })
}

fn dic12_model(alpha: &CycNum, beta: &CycNum) -> Result<Model> {
    let (r, s) = models::dic12_generators(alpha, beta)?;
    certify(models::dic12_surface(alpha, beta)?, vec![ProjMat::new(r)?, ProjMat::new(s)?])
}

/// Class whose matrix must be definable over k for the row to be realized.
fn witness_class(row: &str) -> Option<&'static str> {
    match row {
        "3C" => Some("3A"),
        "12A" => Some("12A"),
        "8A" => Some("8A"),
        "4A" => Some("4A"),
        _ => None,
    }
}

pub fn realize(row: &str, k: &FieldHandle) -> Result<Outcome> {
    let owned;
    let model = if row == "3C2" {
        let Some((a, b)) = conic_parameters(k) else { return Ok(Outcome::ConicInsolvable) };
        owned = dic12_model(&a, &b)?;
        &owned
    } else {
        fixed_model(row)?
    };
    let Some(order) = model.order else {
        return Ok(Outcome::Unresolved { reason: "construction does not give a smooth invariant surface".into() });
    };
    if over_k_poly(&model.surface, k) && model.gens.iter().all(|g| over_k_mat(g, k)) {
        return Ok(Outcome::Realized {
            surface: model.surface.to_string(),
            generators: model.gens.iter().map(ToString::to_string).collect(),
            group_order: order,
        });
    }
    if let Some(class) = witness_class(row) {
        let m = models::class_matrix(class).expect("witness matrix");
        if !projectively_definable_over(&m, k)? {
            return Ok(Outcome::NotDefinable { class: class.into(), matrix: m.to_string() });
        }
    }
    Ok(Outcome::Unresolved { reason: "construction is not over k and no obstruction was found".into() })
}

/// Root of unity that the element table attaches to each class.
pub const ELEMENT_ROOTS: [(&str, Option<u32>); 16] = [
    ("1A", None),
    ("2A", None),
    ("2B", None),
    ("3A", Some(3)),
    ("3C", None),
    ("3D", None),
    ("4A", Some(4)),
    ("4B", None),
    ("5A", None),
    ("6A", Some(3)),
    ("6C", Some(3)),
    ("6E", None),
    ("6F", None),
    ("8A", Some(8)),
    ("9A", Some(3)),
    ("12A", Some(12)),
];

pub const ANCHORED: [&str; 12] = ["1A", "2A", "3A", "3C", "3D", "4A", "4B", "5A", "6A", "8A", "9A", "12A"];

#[derive(Clone, Debug, Serialize)]
pub struct ElementRow {
    pub class: String,
    /// From the table: the class needs this root of unity in k.
    pub expected: bool,
    /// Lies in a maximal group realized over k.
    pub regime: bool,
    /// For classes not realized: a power whose matrix is not definable.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub exponent: u32,
    pub power_class: String,
    pub matrix: String,
}

fn witness_power(class: usize, k: &FieldHandle) -> Result<Option<Witness>> {
    let w = build_w_e6();
    let t = anchor_class_table()?;
    let rep = w.element(w.classes()[class].rep);
    for e in 1..rep.order() {
        if rep.order() % e != 0 {
            continue;
        }
        let c = w.class_of_element(&rep.pow(e)).expect("in W");
        let label = t.label(c);
        if let Some(m) = models::class_matrix(label) {
            if !projectively_definable_over(&m, k)? {
                return Ok(Some(Witness { exponent: e, power_class: label.into(), matrix: m.to_string() }));
            }
        }
    }
    Ok(None)
}

/// Classes contained in some maximal group realized over k.
pub fn realized_classes(k: &FieldHandle) -> Result<BTreeSet<String>> {
    let mut out = BTreeSet::new();
    for row in ROWS {
        if realize(row, k)?.realized() {
            out.extend(class_census(&named_subgroup(row)?)?.into_keys());
        }
    }
    Ok(out)
}

/// Anchored rows of the element table, then the unanchored classes by
/// signature (their expectation cannot be read off the table).
pub fn element_realization(k: &FieldHandle) -> Result<(Vec<ElementRow>, Vec<(String, bool)>)> {
    let t = anchor_class_table()?;
    let realized = realized_classes(k)?;
    let mut rows = Vec::new();
    for label in ANCHORED {
        let root = ELEMENT_ROOTS.iter().find(|(l, _)| *l == label).expect("listed").1;
        let expected = root.is_none_or(|n| has_root(k, n));
        let regime = realized.contains(label);
        let witness = if regime { None } else { witness_power(t.class_named(label).expect("anchored"), k)? };
        rows.push(ElementRow { class: label.into(), expected, regime, witness });
    }
    let unanchored = t
        .labels()
        .iter()
        .filter(|l| l.starts_with("unanchored:"))
        .map(|l| (l.clone(), realized.contains(l)))
        .collect();
    Ok((rows, unanchored))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_parameters_have_nonzero_beta() {
        let k = FieldHandle::by_name("Q(zeta3)").unwrap();
        let (a, b) = conic_parameters(&k).unwrap();
        assert!(!b.is_zero());
        assert_eq!(&(&a * &a) + &(&b * &b), CycNum::from_int(-3));
        assert!(conic_parameters(&FieldHandle::by_name("Q").unwrap()).is_none());
    }

    #[test]
    fn over_q_only_two_rows() {
        let q = FieldHandle::by_name("Q").unwrap();
        let got: Vec<&str> = ROWS.into_iter().filter(|r| realize(r, &q).unwrap().realized()).collect();
        assert_eq!(got, ["5A", "3C1"]);
    }
}
