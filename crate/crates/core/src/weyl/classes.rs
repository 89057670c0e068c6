//! Names for conjugacy classes and the named subgroups.
//!
//! Only classes with a concrete anchor get a name; everything else is
//! reported by its signature.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::group::{build_w_e6, WeylElement};
use super::subgroup::{embed_matrix_group, Embedding, SubgroupHandle};
use crate::error::{Error, Result};
use crate::models::{self, FermatAut};

/// The Fermat group C3^3 x| S4 inside W(E6).
pub struct FermatEmbedding {
    map: BTreeMap<FermatAut, u32>,
    pub embedding: Embedding,
}

impl FermatEmbedding {
    pub fn image_index(&self, a: &FermatAut) -> u32 {
        self.map[a]
    }

    pub fn image(&self, a: &FermatAut) -> WeylElement {
        *build_w_e6().element(self.map[a])
    }

    pub fn subgroup(&self, gens: &[FermatAut]) -> SubgroupHandle {
        SubgroupHandle::from_indices(gens.iter().map(|a| self.map[a]).collect())
    }

    pub fn subgroup_named(&self, gens: &[&str]) -> Result<SubgroupHandle> {
        let g = gens.iter().map(|s| FermatAut::parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&g))
    }

    /// Fermat line with position k goes to standard line `line_map()[k]`.
    pub fn line_map(&self) -> &[usize] {
        &self.embedding.line_map
    }

    /// Inverse image of a W(E6) element, if it comes from the Fermat group.
    pub fn preimage(&self, i: u32) -> Option<FermatAut> {
        self.map.iter().find(|(_, &v)| v == i).map(|(a, _)| *a)
    }
}

pub const FERMAT_GENERATORS: [&str; 5] = ["[1,2,0,0]", "[0,1,2,0]", "[0,0,1,2]", "(12)", "(1234)"];

fn build_fermat() -> Result<FermatEmbedding> {
    let gens = FERMAT_GENERATORS.iter().map(|s| FermatAut::parse(s)).collect::<Result<Vec<_>>>()?;
    let mats: Vec<_> = gens.iter().map(FermatAut::to_projmat).collect();
    let embedding = embed_matrix_group(&models::fermat(), &mats, &models::fermat_lines(), 648)?;
    let w = build_w_e6();
    let img: Vec<u32> = embedding.images.iter().map(|g| w.index_of(g).expect("in W")).collect();
    let mut map = BTreeMap::from([(FermatAut::identity(), w.index_of(&WeylElement::identity()).expect("identity"))]);
    let mut queue = vec![FermatAut::identity()];
    while let Some(a) = queue.pop() {
        let ia = map[&a];
        for (g, &ig) in gens.iter().zip(&img) {
            let b = a.mul(g);
            let ib = w.mul(ia, ig);
            match map.get(&b) {
                Some(&x) if x != ib => return Err(Error::Anchor(format!("Fermat action is not a homomorphism at {b}"))),
                Some(_) => {}
                None => {
                    map.insert(b, ib);
                    queue.push(b);
                }
            }
        }
    }
    if map.len() != 648 {
        return Err(Error::Anchor(format!("Fermat group has {} elements", map.len())));
    }
    Ok(FermatEmbedding { map, embedding })
}

pub fn fermat_embedding() -> Result<&'static FermatEmbedding> {
    static F: OnceLock<Result<FermatEmbedding>> = OnceLock::new();
    F.get_or_init(build_fermat).as_ref().map_err(Clone::clone)
}

/// S5 on the Clebsch surface inside W(E6).
pub fn clebsch_embedding() -> Result<&'static Embedding> {
    static C: OnceLock<Result<Embedding>> = OnceLock::new();
    C.get_or_init(|| embed_matrix_group(&models::clebsch(), &models::clebsch_generators(), &models::clebsch_lines(), 120))
        .as_ref()
        .map_err(Clone::clone)
}

pub struct ClassTable {
    labels: Vec<String>,
    twelve_a: SubgroupHandle,
    twelve_a_element: u32,
}

impl ClassTable {
    pub fn label(&self, class: usize) -> &str {
        &self.labels[class]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn class_named(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn twelve_a_subgroup(&self) -> &SubgroupHandle {
        &self.twelve_a
    }
}

fn unique_class(pred: impl Fn(usize) -> bool, what: &str) -> Result<usize> {
    let w = build_w_e6();
    let found: Vec<usize> = (0..w.classes().len()).filter(|&c| pred(c)).collect();
    match found[..] {
        [c] => Ok(c),
        _ => Err(Error::Anchor(format!("{} classes match {what}", found.len()))),
    }
}

fn class_of_index(i: u32) -> usize {
    build_w_e6().class_id(i)
}

fn power_class(i: u32, e: u32) -> usize {
    let w = build_w_e6();
    w.class_of_element(&w.element(i).pow(e)).expect("in W")
}

/// H3(3) x| C4 as <x, y> for the least 12A element x and the first element
/// y of order 3 giving a group of order 108 with a nonabelian normal
/// subgroup of order 27 and exponent 3.
fn find_twelve_a(x: u32) -> Result<SubgroupHandle> {
    let w = build_w_e6();
    for y in 0..w.order() as u32 {
        if w.element(y).order() != 3 {
            continue;
        }
        let Some(h) = SubgroupHandle::bounded(vec![x, y], 108) else { continue };
        if h.order() != 108 {
            continue;
        }
        let p = h.p_part(3);
        let exp3 = p.elements().iter().all(|&e| w.element(e).order() <= 3);
        let nonabelian = p.elements().iter().any(|&a| p.elements().iter().any(|&b| w.mul(a, b) != w.mul(b, a)));
        if p.order() == 27 && exp3 && nonabelian && !h.elements_of_order(4).is_empty() {
            return Ok(h);
        }
    }
    Err(Error::SearchFailed("no subgroup H3(3) x| C4 through the 12A element".into()))
}

fn set(c: usize, name: &str, labels: &mut [Option<String>]) -> Result<()> {
    match &labels[c] {
        Some(old) if old != name => Err(Error::Anchor(format!("class {c} is both {old} and {name}"))),
        _ => {
            labels[c] = Some(name.to_string());
            Ok(())
        }
    }
}

fn build_table() -> Result<ClassTable> {
    let w = build_w_e6();
    let n = w.classes().len();
    let fe = fermat_embedding()?;
    let mut labels: Vec<Option<String>> = vec![None; n];
    let id = w.index_of(&WeylElement::identity()).expect("identity");
    set(class_of_index(id), "1A", &mut labels)?;
    for (name, v) in [("3A", "[1,1,1,0]"), ("3C", "[1,2,1,2]"), ("3D", "[1,2,0,0]")] {
        let c = class_of_index(fe.image_index(&FermatAut::parse(v)?));
        set(c, name, &mut labels)?;
    }
    let of_order = |o: u32| move |c: usize| w.classes()[c].signature.order == o;
    for (name, o) in [("5A", 5), ("8A", 8), ("9A", 9)] {
        set(unique_class(of_order(o), &format!("order {o}"))?, name, &mut labels)?;
    }
    let c8 = labels.iter().position(|l| l.as_deref() == Some("8A")).expect("set");
    let r8 = w.classes()[c8].rep;
    let c4a = power_class(r8, 2);
    set(c4a, "4A", &mut labels)?;
    set(power_class(r8, 4), "2A", &mut labels)?;
    let c3a = labels.iter().position(|l| l.as_deref() == Some("3A")).expect("set");
    let c12 = unique_class(
        |c| {
            let r = w.classes()[c].rep;
            w.classes()[c].signature.order == 12 && power_class(r, 4) == c3a && power_class(r, 3) == c4a
        },
        "order 12 with 4th power 3A and cube 4A",
    )?;
    set(c12, "12A", &mut labels)?;
    let x = (0..w.order() as u32).find(|&i| class_of_index(i) == c12).expect("nonempty class");
    let twelve_a = find_twelve_a(x)?;
    let six: Vec<usize> = twelve_a.elements_of_order(6).iter().map(|&e| class_of_index(e)).collect();
    match six.first() {
        Some(&c) if six.iter().all(|&d| d == c) => set(c, "6A", &mut labels)?,
        _ => return Err(Error::Anchor("order-6 elements of 12A are not in one class".into())),
    }
    let s4 = fe.subgroup_named(&["(1234)", "(123)"])?;
    let four: Vec<usize> = s4.elements_of_order(4).iter().map(|&e| class_of_index(e)).collect();
    match four.first() {
        Some(&c) if four.iter().all(|&d| d == c) && c != c4a => set(c, "4B", &mut labels)?,
        _ => return Err(Error::Anchor("4-cycles of S4 do not give a class distinct from 4A".into())),
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(c, l)| l.unwrap_or_else(|| format!("unanchored:{}", w.classes()[c].signature)))
        .collect();
    Ok(ClassTable { labels, twelve_a, twelve_a_element: x })
}

pub fn anchor_class_table() -> Result<&'static ClassTable> {
    static T: OnceLock<Result<ClassTable>> = OnceLock::new();
    T.get_or_init(build_table).as_ref().map_err(Clone::clone)
}

pub fn class_of(g: &WeylElement) -> Result<String> {
    let w = build_w_e6();
    let c = w.class_of_element(g).ok_or_else(|| Error::Invalid(format!("{g} is not in W(E6)")))?;
    Ok(anchor_class_table()?.label(c).to_string())
}

pub fn class_census(h: &SubgroupHandle) -> Result<BTreeMap<String, usize>> {
    let t = anchor_class_table()?;
    let mut out = BTreeMap::new();
    for &e in h.elements() {
        *out.entry(t.label(class_of_index(e)).to_string()).or_insert(0) += 1;
    }
    Ok(out)
}

pub const NAMED: [&str; 10] = ["5A", "3C", "12A", "8A", "4A", "4B", "3D", "3A", "3C1", "3C2"];

/// A representative subgroup for a row name of the classification table
/// (plus 4B, 3D and 3A).
pub fn named_subgroup(name: &str) -> Result<SubgroupHandle> {
    let w = build_w_e6();
    let fe = fermat_embedding()?;
    let t = anchor_class_table()?;
    let least_in = |label: &str| -> Result<u32> {
        let c = t.class_named(label).ok_or_else(|| Error::Anchor(format!("no class {label}")))?;
        Ok((0..w.order() as u32).find(|&i| class_of_index(i) == c).expect("nonempty"))
    };
    Ok(match name {
        "5A" => clebsch_embedding()?.group.clone(),
        "3C" => fe.subgroup_named(&FERMAT_GENERATORS)?,
        "3C1" => fe.subgroup_named(&["[1,2,0,0]", "[0,0,1,2]", "(1324)", "(12)"])?,
        "3C2" => fe.subgroup_named(&["[1,2,1,2]", "(1234)"])?,
        "4B" => fe.subgroup_named(&["(1234)", "(123)"])?,
        "3D" => fe.subgroup_named(&["[1,2,0,0]", "(12)"])?,
        "8A" => SubgroupHandle::from_indices(vec![least_in("8A")?]),
        "4A" => {
            let g = least_in("8A")?;
            SubgroupHandle::from_indices(vec![w.mul(g, g)])
        }
        "12A" => t.twelve_a.clone(),
        "3A" => {
            let x = t.twelve_a_element;
            let inv = w.index_of(&w.element(x).pow(6)).expect("in W");
            let mut gens = t.twelve_a.p_part(3).elements().to_vec();
            gens.push(inv);
            SubgroupHandle::from_indices(gens)
        }
        _ => return Err(Error::Invalid(format!("unknown subgroup name `{name}`"))),
    })
}
