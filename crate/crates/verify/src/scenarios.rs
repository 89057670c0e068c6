//! The registered scenarios. Each one recomputes a set of facts about the
//! groups, surfaces and twists from scratch and reports a check per fact.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use cubic_core::descent::{
    c3c1_twist, close, cocycle_constraints_for, dic12_twist, orbits, twisted_aut_group, twisted_line_action, validate_cocycle,
    Cocycle, GaloisQuotient,
};
use cubic_core::exactnum::{e3, field_contains, imag_unit, CycNum, FieldHandle};
use cubic_core::gcoh::{h1_bruteforce_oracle, h1_dim, perm_group, s4_subgroup_classes, s4_subgroups, F3Module, FiniteGroup};
use cubic_core::lines::{fermat_meet_rule, lines_meet, FermatLineIndex, IncidenceGraph};
use cubic_core::matforms::{
    block_diagonal, companion, generate_group, is_smooth, projective_invariance, projectively_definable_over, rcf, substitute, Mat4,
    ProjMat,
};
use cubic_core::models::{self, FermatAut};
use cubic_core::rationality::{
    assess_twist, clebsch_certificate, four_a_certificate, quartic_pencil_checks, Evidence, Rationality, Unirational,
};
use cubic_core::weyl::{
    anchor_class_table, build_w_e6, class_census, class_of, fermat_embedding, named_subgroup, roots, standard_graph,
    subgroup_conjugate, SubgroupHandle,
};
use cubic_core::Result;

use crate::realization::{self, ELEMENT_ROOTS, FIELDS, ROWS};
use crate::report::{Check, ScenarioResult, EXTERNAL, UNANCHORED};

type Run = Box<dyn Fn() -> Result<Vec<Check>> + Send + Sync>;

pub struct Scenario {
    pub id: String,
    run: Run,
}

impl Scenario {
    fn new(id: &str, run: impl Fn() -> Result<Vec<Check>> + Send + Sync + 'static) -> Self {
        Scenario { id: id.into(), run: Box::new(run) }
    }

    pub fn run(&self) -> ScenarioResult {
        match (self.run)() {
            Ok(checks) => ScenarioResult::from_checks(&self.id, checks),
            Err(e) => ScenarioResult::tool_failure(&self.id, e.to_string()),
        }
    }
}

fn chk(name: &str, basis: &str, ok: bool) -> Check {
    Check::new(name, basis, ok, Value::Null)
}

fn chk_d(name: &str, basis: &str, ok: bool, detail: Value) -> Check {
    Check::new(name, basis, ok, detail)
}

fn field(name: &str) -> FieldHandle {
    FieldHandle::by_name(name).expect("built-in field name")
}

fn aut(s: &str) -> Result<FermatAut> {
    FermatAut::parse(s)
}

fn auts(names: &[&str]) -> Result<Vec<FermatAut>> {
    names.iter().map(|s| aut(s)).collect()
}

/// Every scenario, with the field-dependent ones instantiated for `only`
/// when given and for the six standard fields otherwise.
pub fn registry(only: Option<&FieldHandle>) -> Vec<Scenario> {
    let mut out = vec![
        Scenario::new("weyl-group", weyl_group),
        Scenario::new("rcf-definability", rcf_definability),
        Scenario::new("clebsch", clebsch),
        Scenario::new("eight-a-chain", eight_a_chain),
        Scenario::new("twelve-a", twelve_a),
        Scenario::new("c3c1-surface", c3c1_surface),
        Scenario::new("c3c1-twist", c3c1_twist_scenario),
        Scenario::new("dic12-surface", dic12_surface),
        Scenario::new("cocycle-constraints", cocycle_constraints),
        Scenario::new("h1-vanishing", h1_vanishing),
        Scenario::new("fermat-subgroups", fermat_subgroups),
        Scenario::new("line-rules", line_rules),
        Scenario::new("trivial-twist", trivial_twist),
        Scenario::new("dic12-twist", dic12_twist_scenario),
        Scenario::new("dic12-unirational", dic12_unirational),
        Scenario::new("quartic-pencil", quartic_pencil),
        Scenario::new("rational-models", rational_models),
    ];
    let fields: Vec<FieldHandle> = match only {
        Some(k) => vec![k.clone()],
        None => FIELDS.iter().map(|n| field(n)).collect(),
    };
    for k in fields {
        let name = k.name();
        let k2 = k.clone();
        out.push(Scenario::new(&format!("realization/{name}"), move || realization_matrix(&k)));
        out.push(Scenario::new(&format!("element-classes/{name}"), move || element_classes(&k2)));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

fn weyl_group() -> Result<Vec<Check>> {
    let w = build_w_e6();
    let t = anchor_class_table()?;
    let sizes: BTreeMap<String, usize> = w.classes().iter().enumerate().map(|(c, i)| (t.label(c).to_string(), i.size)).collect();
    let expect = [
        ("1A", 1),
        ("2A", 45),
        ("3A", 80),
        ("3C", 240),
        ("3D", 480),
        ("4A", 540),
        ("4B", 3240),
        ("5A", 5184),
        ("6A", 720),
        ("8A", 6480),
        ("9A", 5760),
        ("12A", 4320),
    ];
    let anchored_ok = expect.iter().all(|(l, n)| sizes.get(*l) == Some(n));
    let srg = standard_graph().srg_parameters();
    Ok(vec![
        chk_d("order", "W(E6) generated by the six simple reflections has order 51840", w.order() == 51840, json!(w.order())),
        chk_d("classes", "W(E6) has 25 conjugacy classes", w.classes().len() == 25, json!(w.classes().len())),
        chk("class-sizes-sum", "class sizes add up to the group order", w.classes().iter().map(|c| c.size).sum::<usize>() == 51840),
        chk("signatures", "order, cycle type on lines and Picard characteristic polynomial separate the classes", w.signatures_separate_classes()),
        chk_d("roots", "there are 72 classes r with r.r = -2 and r.K = 0", roots().len() == 72, json!(roots().len())),
        chk_d("schlafli", "the 27 lines form the strongly regular graph srg(27,10,1,5)", srg == Some((27, 10, 1, 5)), json!(srg)),
        chk_d("anchored-sizes", "the anchored classes have their standard sizes", anchored_ok, json!(sizes)),
    ])
}

fn displayed_blocks() -> (bool, bool) {
    let o = CycNum::one;
    let z = CycNum::zero;
    let m = Mat4::diag([e3(), o(), o(), o()]);
    let full_m = block_diagonal(&rcf(&m).iter().map(companion).collect::<Vec<_>>());
    let expect_m = vec![
        vec![o(), z(), z(), z()],
        vec![z(), o(), z(), z()],
        vec![z(), z(), z(), -e3()],
        vec![z(), z(), o(), &e3() + &o()],
    ];
    let e6 = CycNum::zeta_pow(4);
    let n = Mat4::diag([o(), o(), e6.pow(4), e6.clone()]);
    let full_n = block_diagonal(&rcf(&n).iter().map(companion).collect::<Vec<_>>());
    let e62 = e6.pow(2);
    let expect_n = vec![
        vec![o(), z(), z(), z()],
        vec![z(), z(), z(), -e62.clone()],
        vec![z(), o(), z(), e62],
        vec![z(), z(), o(), o()],
    ];
    (full_m == expect_m, full_n == expect_n)
}

/// Class, field where it must fail, field where it must succeed.
pub const DEFINABILITY_CLAUSES: [(&str, &str, &str); 5] = [
    ("3A", "Q", "Q(zeta3)"),
    ("6C", "Q", "Q(zeta3)"),
    ("4A", "Q", "Q(i)"),
    ("8A", "Q(i)", "Q(zeta8)"),
    ("12A", "Q(zeta3)", "Q(zeta12)"),
];

fn rcf_definability() -> Result<Vec<Check>> {
    let (m, n) = displayed_blocks();
    let mut out = vec![
        chk("rcf-3A", "diag(e3,1,1,1) has invariant factors x-1, x-1, (x-1)(x-e3), giving the block [[0,-e3],[1,e3+1]]", m),
        chk("rcf-6C", "diag(1,1,e6^4,e6) has invariant factors x-1, (x-1)(x-e6^4)(x-e6), giving the block with -e6^2, e6^2, 1", n),
    ];
    for (class, bad, good) in DEFINABILITY_CLAUSES {
        let g = models::class_matrix(class).expect("class matrix");
        let over_q = projectively_definable_over(&g, &field("Q"))?;
        let over_bad = projectively_definable_over(&g, &field(bad))?;
        let over_good = projectively_definable_over(&g, &field(good))?;
        out.push(chk_d(
            &format!("definable-{class}"),
            &format!("a {class} element is similar to an element of PGL4(k) for k = {good} but not for k = {bad} or Q"),
            !over_q && !over_bad && over_good,
            json!({"matrix": g.to_string(), "Q": over_q, bad: over_bad, good: over_good}),
        ));
    }
    Ok(out)
}

fn preserves_all(f: &cubic_core::matforms::CubicForm, gens: &[ProjMat]) -> bool {
    gens.iter().all(|g| projective_invariance(f, g).is_some())
}

fn rational_entries(gens: &[ProjMat]) -> bool {
    gens.iter().all(|g| g.rep().entries().all(CycNum::is_rational))
}

fn matrix_order_stats(gens: &[ProjMat], limit: usize) -> Result<BTreeMap<u32, usize>> {
    let mut out = BTreeMap::new();
    for g in generate_group(gens, limit)? {
        *out.entry(g.order(60).unwrap_or(0)).or_insert(0) += 1;
    }
    Ok(out)
}

fn clebsch() -> Result<Vec<Check>> {
    let f = models::clebsch();
    let gens = models::clebsch_generators();
    let stats = matrix_order_stats(&gens, 120)?;
    let s5 = BTreeMap::from([(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)]);
    let abstract_stats = named_subgroup("5A")?.order_statistics();
    let lines = models::clebsch_lines();
    Ok(vec![
        chk("invariant", "both generators map the Clebsch surface to itself", preserves_all(&f, &gens)),
        chk("rational", "both generators have rational entries, so they are defined over every k", rational_entries(&gens)),
        chk("smooth", "the Clebsch surface is smooth", is_smooth(&f)?),
        chk_d("s5", "the generated group has order 120 with the element orders of S5", stats == s5, json!(stats)),
        chk("weyl-image", "its image in W(E6) has the element orders of S5", abstract_stats == s5),
        chk_d("lines", "three seed lines generate all 27 lines under the group", lines.len() == 27, json!(lines.len())),
    ])
}

fn eight_a_chain() -> Result<Vec<Check>> {
    let f = models::eight_a_surface();
    let g = models::eight_a_generator();
    let w = build_w_e6();
    let h = named_subgroup("8A")?;
    let x = w.element(h.generator_indices()[0]);
    let def = |m: &ProjMat, k: &str| projectively_definable_over(m, &field(k));
    let (g2, g4) = (g.pow(2), g.pow(4));
    Ok(vec![
        chk("invariant", "g = diag(1,e8^6,e8,e8^4) preserves the surface", projective_invariance(&f, &g).is_some()),
        chk("smooth", "the surface is smooth", is_smooth(&f)?),
        chk("order", "g has order 8 in PGL4", g.order(24) == Some(8)),
        chk_d(
            "power-classes",
            "a generator of 8A has square in 4A and fourth power in 2A",
            class_of(x)? == "8A" && class_of(&x.pow(2))? == "4A" && class_of(&x.pow(4))? == "2A",
            json!([class_of(x)?, class_of(&x.pow(2))?, class_of(&x.pow(4))?]),
        ),
        chk("g4-over-q", "g^4 is defined over every k", def(&g4, "Q")? && rational_entries(&[g4.clone()])),
        chk("g2-needs-i", "g^2 is definable over Q(i) but not over Q", def(&g2, "Q(i)")? && !def(&g2, "Q")?),
        chk("g-needs-e8", "g is definable over Q(zeta8) but not over Q(i)", def(&g, "Q(zeta8)")? && !def(&g, "Q(i)")?),
    ])
}

fn is_dic12(h: &SubgroupHandle) -> bool {
    h.order() == 12 && !h.is_abelian() && h.elements_of_order(3).len() == 2 && h.elements_of_order(2).len() == 1
}

fn root_in(k: &FieldHandle, label: &str) -> bool {
    match ELEMENT_ROOTS.iter().find(|(l, _)| *l == label).and_then(|(_, r)| *r) {
        Some(n) => field_contains(k, &cubic_core::exactnum::zeta(n).expect("divides 24")),
        None => true,
    }
}

fn twelve_a() -> Result<Vec<Check>> {
    let w = build_w_e6();
    let f = models::twelve_a_surface();
    let gens = models::twelve_a_generators();
    let h = named_subgroup("12A")?;
    let sylow = class_census(&h.p_part(3))?;
    let want_sylow = BTreeMap::from([("1A".to_string(), 1), ("3A".to_string(), 2), ("3D".to_string(), 24)]);
    let six_ok = h.elements_of_order(6).iter().all(|&e| class_of(w.element(e)).is_ok_and(|c| c == "6A"));
    let mut dic = false;
    for &a in &h.elements_of_order(3) {
        for &b in &h.elements_of_order(4) {
            dic |= SubgroupHandle::bounded(vec![a, b], 108).is_some_and(|g| is_dic12(&g));
        }
    }
    let mats = generate_group(&gens, 108)?;
    let mut out = vec![
        chk("invariant", "the four generators preserve the surface", preserves_all(&f, &gens)),
        chk("smooth", "the surface is smooth", is_smooth(&f)?),
        chk_d(
            "orders",
            "the matrix group and the named subgroup of W(E6) both have order 108 with the same element orders",
            mats.len() == 108 && matrix_order_stats(&gens, 108)? == h.order_statistics(),
            json!(h.order_statistics()),
        ),
        chk_d("sylow-3", "the normal subgroup of order 27 has 2 elements in 3A and 24 in 3D", sylow == want_sylow, json!(sylow)),
        chk("no-dic12", "no element of order 3 and element of order 4 generate a dicyclic group of order 12", !dic),
        chk("order-6", "every element of order 6 lies in 6A", six_ok),
    ];
    // which elements survive over k, counted by order, against the labels
    let mut labels: Vec<(u32, String)> = Vec::new();
    for &e in h.elements() {
        labels.push((w.element(e).order(), class_of(w.element(e))?));
    }
    for (case, k) in [("all", "Q(zeta12)"), ("i-only", "Q(i)"), ("e3-only", "Q(zeta3)"), ("neither", "Q")] {
        let k = field(k);
        let mut expected: BTreeMap<u32, usize> = BTreeMap::new();
        for (o, l) in &labels {
            if root_in(&k, l) {
                *expected.entry(*o).or_insert(0) += 1;
            }
        }
        let mut got: BTreeMap<u32, usize> = BTreeMap::new();
        for m in &mats {
            if projectively_definable_over(m, &k)? {
                *got.entry(m.order(12).unwrap_or(0)).or_insert(0) += 1;
            }
        }
        out.push(chk_d(
            &format!("gating-{case}"),
            &format!("over {} the definable elements are exactly those whose classes need only roots of unity in k", k.name()),
            expected == got,
            json!({"expected": expected, "definable": got}),
        ));
    }
    Ok(out)
}

fn c3c1_surface() -> Result<Vec<Check>> {
    let f = models::c32d8_surface();
    let gens = models::c32d8_generators();
    let stats = matrix_order_stats(&gens, 72)?;
    let h = named_subgroup("3C1")?;
    let t = models::c32d8_to_fermat();
    let pulled = substitute(models::fermat().poly(), &t);
    // any subgroup of order 8 is a Sylow 2-subgroup of a group of order 72
    let mut d8_like = false;
    for &a in &h.elements_of_order(4) {
        for &b in &h.elements_of_order(2) {
            d8_like |= SubgroupHandle::bounded(vec![a, b], 8)
                .is_some_and(|g| g.order() == 8 && !g.is_abelian() && g.elements_of_order(2).len() == 5);
        }
    }
    Ok(vec![
        chk("invariant", "the four integer generators preserve the surface", preserves_all(&f, &gens)),
        chk("rational", "the generators are defined over Q", rational_entries(&gens)),
        chk("smooth", "the surface is smooth", is_smooth(&f)?),
        chk_d("orders", "the matrix group has order 72 with the element orders of the named subgroup", stats == h.order_statistics(), json!(stats)),
        chk("fermat-form", "a linear change of variables over Q(e3) takes the Fermat cubic to this surface", pulled.proportional_to(f.poly()).is_some()),
        chk("d8", "its Sylow 2-subgroup is dihedral of order 8", h.order() == 72 && d8_like),
    ])
}

fn c3c1_twist_scenario() -> Result<Vec<Check>> {
    let (g, c) = c3c1_twist();
    let t = twisted_aut_group(&g, &c)?;
    let listed = close(&auts(&["[1,2,0,0]", "[0,0,1,2]", "(1324)", "(12)"])?);
    let fe = fermat_embedding()?;
    let example = fe.subgroup_named(&["[1,2,0,0]", "[0,0,1,2]", "(12)", "(34)", "(13)(24)"])?;
    Ok(vec![
        chk("cocycle", "c = (id, (12)(34)) satisfies the cocycle identity", validate_cocycle(&g, &c)),
        chk_d("order", "the automorphisms defined over k after twisting form a group of order 72", t.elements.len() == 72, json!(t.elements.len())),
        chk("listed", "that group is <[1,2,0,0],[0,0,1,2],(1324),(12)>", t.elements == listed),
        chk("conjugate", "it is conjugate in W(E6) to the group acting on the untwisted model", subgroup_conjugate(&t.weyl, &example).is_some()),
    ])
}

fn dic12_surface() -> Result<Vec<Check>> {
    let qi = field("Q(i)");
    let (alpha, beta) = (CycNum::one(), &imag_unit() * &CycNum::from_int(2));
    let f = models::dic12_surface(&alpha, &beta)?;
    let (r, s) = models::dic12_generators(&alpha, &beta)?;
    let id = Mat4::identity();
    let pw = |m: &Mat4, e: u32| (0..e).fold(Mat4::identity(), |a, _| a.mul(m));
    let rel = pw(&r, 3) == id && pw(&s, 4) == id && s.mul(&r).mul(&s.inverse()?) == r.inverse()?;
    let (rp, sp) = (ProjMat::new(r.clone())?, ProjMat::new(s.clone())?);
    let entries_ok = r.entries().chain(s.entries()).all(|c| field_contains(&qi, c)) && f.poly().terms().all(|(_, c)| field_contains(&qi, c));
    Ok(vec![
        chk("relations", "r^3 = s^4 = 1 and s r s^-1 = r^-1 as matrices", rel),
        chk("invariant", "r and s preserve the surface", preserves_all(&f, &[rp.clone(), sp.clone()])),
        chk("smooth", "the surface is smooth", is_smooth(&f)?),
        chk("over-q-i", "every coefficient and matrix entry lies in Q(i)", entries_ok),
        chk("order", "r and s generate a group of order 12", generate_group(&[rp, sp], 12)?.len() == 12),
        chk("dicyclic", "the named subgroup <[1,2,1,2],(1234)> is dicyclic of order 12", is_dic12(&named_subgroup("3C2")?)),
    ])
}

fn set_of(v: &[FermatAut]) -> BTreeSet<FermatAut> {
    v.iter().copied().collect()
}

fn cocycle_constraints() -> Result<Vec<Check>> {
    let c = cocycle_constraints_for(&auts(&["[1,2,1,2]", "(1234)"])?);
    let fixing = set_of(&auts(&["id", "(13)(24)"])?);
    let moving = set_of(&auts(&["(1234)", "(4321)"])?);
    let ext = cocycle_constraints_for(&auts(&["[1,2,1,2]", "(1234)", "(13)"])?);
    let (g, cc) = dic12_twist();
    let lhs = {
        let a = &CycNum::one() + &(&CycNum::from_int(2) * &e3());
        &a * &a
    };
    Ok(vec![
        chk_d(
            "e3-fixing",
            "when gamma fixes e3 the cocycle value lies in {id, (13)(24)}",
            set_of(&c["e3-fixing"]) == fixing,
            json!(c["e3-fixing"].iter().map(ToString::to_string).collect::<Vec<_>>()),
        ),
        chk_d(
            "e3-moving",
            "when gamma moves e3 the cocycle value lies in {(1234), (4321)}",
            set_of(&c["e3-moving"]) == moving,
            json!(c["e3-moving"].iter().map(ToString::to_string).collect::<Vec<_>>()),
        ),
        chk("extension", "adding (13) leaves no admissible value for gamma moving e3", ext["e3-moving"].is_empty()),
        chk_d(
            "c4-quotient",
            "c = (id, (1234), (13)(24), (1432)) on a cyclic quotient of order 4 whose generator moves e3 is a cocycle",
            validate_cocycle(&g, &cc) && g.order() == 4 && !cubic_core::descent::fixes_e3(g.char24(1)),
            json!({"unit": g.char24(1)}),
        ),
        chk_d(
            "conic-point",
            "(1 + 2 e3)^2 + 0^2 = -3, so e3 in k gives a point on x^2 + y^2 = -3",
            lhs == CycNum::from_int(-3),
            json!({"note": "the identity holds for the square (1+2e3)^2; the unsquared expression 1+2e3^2 does not equal -3"}),
        ),
        Check::flagged(
            "conic-converse",
            "a point on x^2 + y^2 = -3 over k yields a cyclic degree-4 extension through k(e3); this direction rests on an embedding criterion for cyclic extensions",
            EXTERNAL,
            Value::Null,
        ),
    ])
}

fn h1_vanishing() -> Result<Vec<Check>> {
    let reps = s4_subgroup_classes();
    let mut dims = Vec::new();
    for h in &reps {
        dims.push((h.len(), h1_dim(&perm_group(h)?, &F3Module::sum_zero(h))));
    }
    let mut agree = true;
    let mut n = 0;
    for h in s4_subgroups().into_iter().filter(|h| h.len() <= 4) {
        let g = perm_group(&h)?;
        let m = F3Module::sum_zero(&h);
        agree &= h1_dim(&g, &m) == h1_bruteforce_oracle(&g, &m)?;
        n += 1;
    }
    let c3 = FiniteGroup::cyclic(3);
    let control = h1_dim(&c3, &F3Module::trivial(&c3, 1));
    Ok(vec![
        chk_d("classes", "S4 has 11 conjugacy classes of subgroups", reps.len() == 11, json!(reps.len())),
        chk_d("vanishing", "H^1(H, C3^3) = 0 for a representative H of every class", dims.iter().all(|d| d.1 == 0), json!(dims)),
        chk_d("oracle", "linear algebra agrees with enumerating all crossed homomorphisms for subgroups of order at most 4", agree && n == 21, json!(n)),
        chk_d("control", "H^1(C3, F3) with trivial action is 1-dimensional", control == 1, json!(control)),
    ])
}

fn conj(p: &FermatAut, a: &FermatAut) -> FermatAut {
    p.mul(a).mul(&p.inverse())
}

fn fermat_subgroups() -> Result<Vec<Check>> {
    let all = FermatAut::all();
    let diag: Vec<FermatAut> = all.iter().copied().filter(|a| a.perm == [0, 1, 2, 3]).collect();
    let perms: Vec<FermatAut> = all.iter().copied().filter(|a| a.diag == [0; 4]).collect();
    let span = |g: &[FermatAut]| -> BTreeSet<FermatAut> { close(g).into_iter().collect() };
    let subgroups: BTreeSet<BTreeSet<FermatAut>> = diag.iter().filter(|a| !a.is_identity()).map(|a| span(&[*a])).collect();
    let mut orbit_list: Vec<BTreeSet<BTreeSet<FermatAut>>> = Vec::new();
    for s in &subgroups {
        if !orbit_list.iter().any(|o| o.contains(s)) {
            orbit_list.push(perms.iter().map(|p| s.iter().map(|a| conj(p, a)).collect()).collect());
        }
    }
    let mut sizes: Vec<usize> = orbit_list.iter().map(BTreeSet::len).collect();
    sizes.sort_unstable();
    let reps_ok = ["[1,2,0,0]", "[1,1,1,0]", "[1,2,1,2]"]
        .iter()
        .map(|r| aut(r).map(|a| span(&[a])))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .map(|s| orbit_list.iter().position(|o| o.contains(s)))
        .collect::<BTreeSet<_>>()
        .len()
        == 3;
    let plane = span(&auts(&["[1,2,0,0]", "[0,0,1,2]"])?);
    let stab: BTreeSet<FermatAut> = perms.iter().copied().filter(|p| plane.iter().all(|a| plane.contains(&conj(p, a)))).collect();
    let d8 = span(&auts(&["(12)", "(34)", "(13)(24)"])?);
    let ext = cocycle_constraints_for(&auts(&["[1,2,1,2]", "(1234)", "(13)"])?);
    let fe = fermat_embedding()?;
    let four = class_of(&fe.image(&aut("(1234)")?))?;
    let s4: Vec<[u8; 4]> = perms.iter().map(|p| p.perm).collect();
    let s4_sorted = cubic_core::gcoh::perm_closure(&s4);
    let h1 = h1_dim(&perm_group(&s4_sorted)?, &F3Module::sum_zero(&s4_sorted));
    Ok(vec![
        chk_d("order-3-orbits", "the 13 subgroups of order 3 in C3^3 form three S4-orbits", sizes == [3, 4, 6], json!(sizes)),
        chk("orbit-reps", "[1,2,0,0], [1,1,1,0] and [1,2,1,2] lie in different orbits", reps_ok),
        chk_d("stabilizer", "the stabilizer in S4 of <[1,2,0,0],[0,0,1,2]> is <(12),(34),(13)(24)>, dihedral of order 8", stab == d8, json!(stab.len())),
        chk("contradiction", "no cocycle value for gamma moving e3 is compatible with <[1,2,1,2],(1234),(13)>", ext["e3-moving"].is_empty()),
        chk_d("split-s4", "the 4-cycles of the complement S4 lie in 4B, not 4A", four == "4B", json!(four)),
        chk("splittings", "H^1(S4, C3^3) = 0, so all complements of C3^3 are conjugate", h1 == 0),
    ])
}

fn realization_matrix(k: &FieldHandle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for row in ROWS {
        let cond = realization::table_condition(row, k);
        let o = realization::realize(row, k)?;
        let ok = o.realized() == cond && (o.realized() || o.obstructed());
        out.push(chk_d(
            row,
            &format!("{row} acts on a smooth cubic surface over {} exactly when the table condition holds", k.name()),
            ok,
            json!({"condition": cond, "outcome": o}),
        ));
    }
    Ok(out)
}

fn element_classes(k: &FieldHandle) -> Result<Vec<Check>> {
    let (rows, unanchored) = realization::element_realization(k)?;
    let mut out = Vec::new();
    for r in rows {
        let ok = r.regime == r.expected && (r.regime || r.witness.is_some());
        out.push(chk_d(
            &r.class,
            &format!("{} is realized over {} exactly when k has the listed root of unity", r.class, k.name()),
            ok,
            json!(r),
        ));
    }
    for (label, realized) in unanchored {
        out.push(Check::flagged(
            &label,
            "class without an anchored name; membership in a realized maximal group is reported but not compared",
            UNANCHORED,
            json!({"realized": realized}),
        ));
    }
    Ok(out)
}

fn line_rules() -> Result<Vec<Check>> {
    let idx = FermatLineIndex::all();
    let lines = models::fermat_lines();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for a in 0..27 {
        for b in a + 1..27 {
            pairs += 1;
            if fermat_meet_rule(idx[a], idx[b])? != lines_meet(&lines[a], &lines[b])? {
                bad.push(format!("{} {}", idx[a], idx[b]));
            }
        }
    }
    let g = IncidenceGraph::from_lines(&lines)?;
    Ok(vec![
        chk_d("pairs", "the index rules for meeting agree with the rank of the spanning points on all 351 pairs", bad.is_empty() && pairs == 351, json!(bad)),
        chk("schlafli", "the Fermat lines form the Schlafli graph", g.is_schlafli()),
        chk("on-surface", "all 27 lines lie on the Fermat cubic", lines.iter().all(|l| cubic_core::lines::line_on_surface(l, &models::fermat()))),
    ])
}

fn trivial_twist() -> Result<Vec<Check>> {
    let g = GaloisQuotient::cyclic(1, 1)?;
    let act = twisted_line_action(&g, &Cocycle::trivial(&g))?;
    let v = assess_twist(&act);
    Ok(vec![
        chk("fixed", "with the trivial action every line is fixed", orbits(&act).len() == 27),
        chk("rational", "the surface is then rational", v.rationality == Rationality::Rational),
    ])
}

fn meets(a: &FermatLineIndex, b: &FermatLineIndex) -> Result<bool> {
    fermat_meet_rule(*a, *b)
}

fn dic12_twist_scenario() -> Result<Vec<Check>> {
    let (g, c) = dic12_twist();
    let act = twisted_line_action(&g, &c)?;
    let orb = orbits(&act);
    let mut sizes: Vec<usize> = orb.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let single: Vec<String> = orb.iter().filter(|o| o.len() == 1).map(|o| o[0].to_string()).collect();
    let mut adjacent = true;
    for o in orb.iter().filter(|o| o.len() > 1) {
        let mut any = false;
        for a in o {
            for b in o {
                any |= a != b && meets(a, b)?;
            }
        }
        adjacent &= any;
    }
    let v = assess_twist(&act);
    let deg4 = v.evidence.iter().any(|e| matches!(e, Evidence::BlowDown { degree: 4, .. }));
    let text: Vec<Vec<String>> = orb.iter().map(|o| o.iter().map(ToString::to_string).collect()).collect();
    Ok(vec![
        chk_d("orbits", "the twisted Galois action has orbits of sizes 1,2,2,2,4,4,4,4,4", sizes == [1, 2, 2, 2, 4, 4, 4, 4, 4], json!(text)),
        chk_d("fixed-line", "the only fixed line is L[1,0,0]", single == ["L[1,0,0]"], json!(single)),
        chk("meeting-pairs", "every other orbit contains two lines that meet", adjacent),
        chk_d(
            "verdict",
            "blowing down the fixed line reaches a quartic del Pezzo surface and nothing further; rationality is left open by the line data",
            v.rationality == Rationality::Undetermined && v.unirational == Unirational::Yes && deg4,
            json!(v),
        ),
        Check::flagged(
            "not-rational",
            "the quartic del Pezzo surface with a Dic12 action obtained this way is not k-rational nor stably k-rational",
            EXTERNAL,
            Value::Null,
        ),
    ])
}

fn dic12_unirational() -> Result<Vec<Check>> {
    let (g, c) = dic12_twist();
    let act = twisted_line_action(&g, &c)?;
    let l = FermatLineIndex::new(1, 0, 0)?;
    let fixed = act.perms.iter().all(|p| p[l.position()] as usize == l.position());
    Ok(vec![
        chk("fixed-line", "L[1,0,0] is fixed by the twisted action, so the surface has a k-point", fixed),
        chk("unirational", "a cubic surface with a k-point is k-unirational", assess_twist(&act).unirational == Unirational::Yes),
    ])
}

fn quartic_pencil() -> Result<Vec<Check>> {
    let q = quartic_pencil_checks(&CycNum::one(), &(&imag_unit() * &CycNum::from_int(2)))?;
    Ok(vec![
        chk("relations", "the two maps of P^4 satisfy the Dic12 relations up to scalars", q.dic12_relations),
        chk("pencil", "both maps carry each quadric of the pencil to a member of the pencil", q.pencil_preserved),
        chk("fixed-point", "both maps fix (2:1:2:0:0)", q.point_fixed),
        chk("on-surface", "(2:1:2:0:0) lies on both quadrics", q.point_on_surface),
    ])
}

fn rational_models() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut all_fields = true;
    for f in FIELDS {
        all_fields &= clebsch_certificate(&field(f))?.is_some_and(|v| v.rationality == Rationality::Rational);
    }
    out.push(chk("clebsch", "two disjoint lines with rational coefficients lie on the Clebsch surface, over every field", all_fields));
    let q3 = field("Q(zeta3)");
    let lines_ok = models::fermat_lines().iter().all(|l| l.basis().iter().flatten().all(|c| field_contains(&q3, c)));
    out.push(chk("fermat", "with e3 in k all 27 Fermat lines are defined over k", lines_ok));
    for name in ["12A", "8A"] {
        let h = named_subgroup(name)?;
        let c = h.centralizer();
        out.push(chk(
            &format!("centralizer-{name}"),
            &format!("the centralizer of {name} is abelian and inside {name}, so a twist by it makes every line fixed"),
            c.is_abelian() && c.is_subgroup_of(&h),
        ));
    }
    let f9 = models::four_a_family(&CycNum::from_int(9));
    let g = models::four_a_generator();
    let four_ok = four_a_certificate(&field("Q(i)"))?.is_some_and(|v| v.rationality == Rationality::Rational)
        && four_a_certificate(&field("Q"))?.is_some()
        && projective_invariance(&f9, &g).is_some()
        && is_smooth(&f9)?;
    out.push(chk("four-a", "at alpha = 9 the C4 surface is smooth and carries two disjoint rational lines", four_ok));
    let (gq, c) = c3c1_twist();
    let act = twisted_line_action(&gq, &c)?;
    let (a, b) = (FermatLineIndex::new(0, 0, 0)?, FermatLineIndex::new(0, 1, 2)?);
    let fixed = act.perms.iter().all(|p| p[a.position()] as usize == a.position() && p[b.position()] as usize == b.position());
    out.push(chk(
        "twist",
        "after the (id, (12)(34)) twist the lines L[0,0,0] and L[0,1,2] are fixed and disjoint",
        fixed && !meets(&a, &b)? && assess_twist(&act).rationality == Rationality::Rational,
    ));
    Ok(out)
}
