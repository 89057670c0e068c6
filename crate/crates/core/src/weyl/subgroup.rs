use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::group::{build_w_e6, WeylElement};
use super::pic::standard_graph;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::lines::{graph_isomorphism, line_on_surface, IncidenceGraph, Line};
use crate::matforms::{generate_group, projective_invariance, CubicForm, ProjMat};

/// A subgroup of W(E6) stored as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHandle {
    generators: Vec<u32>,
    elements: Vec<u32>,
}

impl SubgroupHandle {
    pub fn generate(gens: &[WeylElement]) -> Result<Self> {
        let w = build_w_e6();
        let idx = gens
            .iter()
            .map(|g| w.index_of(g).ok_or_else(|| Error::Invalid(format!("{g} does not preserve incidence"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indices(idx))
    }

    pub fn from_indices(gens: Vec<u32>) -> Self {
        Self::bounded(gens, usize::MAX).expect("unbounded")
    }

    /// None once the closure exceeds `limit` elements.
    pub fn bounded(gens: Vec<u32>, limit: usize) -> Option<Self> {
        let w = build_w_e6();
        let id = w.index_of(&WeylElement::identity()).expect("identity");
        let mut seen: HashSet<u32> = HashSet::from([id]);
        let mut list = vec![id];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in &gens {
                let y = w.mul(x, g);
                if seen.insert(y) {
                    if seen.len() > limit {
                        return None;
                    }
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        Some(SubgroupHandle { generators: gens, elements: list })
    }

    pub fn trivial() -> Self {
        Self::from_indices(Vec::new())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<WeylElement> {
        let w = build_w_e6();
        self.generators.iter().map(|&g| *w.element(g)).collect()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn contains_element(&self, g: &WeylElement) -> bool {
        build_w_e6().index_of(g).is_some_and(|i| self.contains(i))
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let w = build_w_e6();
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| w.mul(a, b) == w.mul(b, a)))
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<u32, usize> {
        let w = build_w_e6();
        let mut out = BTreeMap::new();
        for &x in &self.elements {
            *out.entry(w.element(x).order()).or_insert(0) += 1;
        }
        out
    }

    pub fn elements_of_order(&self, n: u32) -> Vec<u32> {
        let w = build_w_e6();
        self.elements.iter().copied().filter(|&x| w.element(x).order() == n).collect()
    }

    /// The elements whose order is a power of p, as a group (this is the
    /// Sylow p-subgroup when that subgroup is normal).
    pub fn p_part(&self, p: u32) -> SubgroupHandle {
        let w = build_w_e6();
        let gens: Vec<u32> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| {
                let mut o = w.element(x).order();
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect();
        SubgroupHandle::from_indices(gens)
    }

    /// Elements of W(E6) commuting with every generator.
    pub fn centralizer(&self) -> SubgroupHandle {
        let w = build_w_e6();
        let elements: Vec<u32> = (0..w.order() as u32)
            .filter(|&x| self.generators.iter().all(|&g| w.mul(x, g) == w.mul(g, x)))
            .collect();
        SubgroupHandle { generators: elements.clone(), elements }
    }

    /// g H g^-1.
    pub fn conjugate_by(&self, g: u32) -> SubgroupHandle {
        let w = build_w_e6();
        let gi = w.inv(g);
        let conj = |x: u32| w.mul(w.mul(g, x), gi);
        let mut elements: Vec<u32> = self.elements.iter().map(|&x| conj(x)).collect();
        elements.sort_unstable();
        SubgroupHandle { generators: self.generators.iter().map(|&x| conj(x)).collect(), elements }
    }
}

/// Some g with g H g^-1 = K, scanning W(E6) in index order.
pub fn subgroup_conjugate(h: &SubgroupHandle, k: &SubgroupHandle) -> Option<WeylElement> {
    if h.order() != k.order() || h.order_statistics() != k.order_statistics() {
        return None;
    }
    let w = build_w_e6();
    let gens: Vec<u32> = if h.generators.is_empty() { h.elements.clone() } else { h.generators.clone() };
    (0..w.order() as u32)
        .find(|&g| {
            let gi = w.inv(g);
            gens.iter().all(|&x| k.contains(w.mul(w.mul(g, x), gi)))
        })
        .map(|g| *w.element(g))
}

/// A matrix group acting on 27 lines, transported to the standard labels.
#[derive(Clone, Debug)]
pub struct Embedding {
    /// Image of each matrix generator.
    pub images: Vec<WeylElement>,
    pub group: SubgroupHandle,
    /// Given line k goes to standard line `line_map[k]`.
    pub line_map: Vec<usize>,
}

impl Embedding {
    /// The image of any matrix preserving the same line set.
    pub fn image_of<F: Scalar>(&self, g: &ProjMat, lines: &[Line<F>]) -> Result<WeylElement> {
        let index: BTreeMap<&Line<F>, usize> = lines.iter().enumerate().map(|(k, l)| (l, k)).collect();
        let sigma = line_permutation(g, lines, &index)?;
        Ok(transport(&sigma, &self.line_map))
    }
}

fn line_permutation<F: Scalar>(g: &ProjMat, lines: &[Line<F>], index: &BTreeMap<&Line<F>, usize>) -> Result<Vec<usize>> {
    lines
        .iter()
        .map(|l| {
            let img = l.image(g.rep());
            index.get(&img).copied().ok_or_else(|| Error::NotAutomorphism(format!("{g} sends {l} off the line set")))
        })
        .collect()
}

fn transport(sigma: &[usize], p: &[usize]) -> WeylElement {
    let mut out = [0u8; 27];
    for a in 0..27 {
        out[p[a]] = p[sigma[a]] as u8;
    }
    WeylElement(out)
}

/// The homomorphism from a matrix group preserving `f` into W(E6), via the
/// action on `lines` (27 lines of `f`) and a fixed isomorphism of their
/// incidence graph with the standard one. `max_order` bounds the check that
/// the matrix group and its image have the same order.
pub fn embed_matrix_group<F: Scalar>(f: &CubicForm, gens: &[ProjMat], lines: &[Line<F>], max_order: usize) -> Result<Embedding> {
    if lines.len() != 27 || lines.iter().collect::<BTreeSet<_>>().len() != 27 {
        return Err(Error::Invalid("need 27 distinct lines".into()));
    }
    if let Some(l) = lines.iter().find(|l| !line_on_surface(l, f)) {
        return Err(Error::NotOnSurface(l.to_string()));
    }
    for g in gens {
        if projective_invariance(f, g).is_none() {
            return Err(Error::NotAutomorphism(g.to_string()));
        }
    }
    let graph = IncidenceGraph::from_lines(lines)?;
    if !graph.is_schlafli() {
        return Err(Error::NotSchlafli);
    }
    let line_map = graph_isomorphism(&graph, &standard_graph()).ok_or(Error::NotSchlafli)?;
    let index: BTreeMap<&Line<F>, usize> = lines.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let images = gens
        .iter()
        .map(|g| Ok(transport(&line_permutation(g, lines, &index)?, &line_map)))
        .collect::<Result<Vec<_>>>()?;
    let group = SubgroupHandle::generate(&images)?;
    let matrices = generate_group(gens, max_order)?;
    if matrices.len() != group.order() {
        return Err(Error::Invalid(format!(
            "action on lines is not faithful: {} matrices, {} permutations",
            matrices.len(),
            group.order()
        )));
    }
    Ok(Embedding { images, group, line_map })
}
