//! W(E6) acting on the 27 lines of the blow-up model, class names, named
//! subgroups and embeddings of matrix groups.

mod classes;
mod group;
mod pic;
mod subgroup;

pub use classes::{
    anchor_class_table, class_census, class_of, clebsch_embedding, fermat_embedding, named_subgroup, ClassTable,
    FermatEmbedding, FERMAT_GENERATORS, NAMED,
};
pub use group::{build_w_e6, ClassInfo, Signature, WeylElement, WeylGroup, ORDER};
pub use pic::{line_index, line_label, reflection_permutation, roots, simple_roots, standard_graph, standard_lines, PicVector};
pub use subgroup::{embed_matrix_group, subgroup_conjugate, Embedding, SubgroupHandle};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FermatAut;

    #[test]
    fn w_e6_basics() {
        let w = build_w_e6();
        assert_eq!(w.order(), ORDER);
        assert_eq!(w.classes().len(), 25);
        assert_eq!(w.classes().iter().map(|c| c.size).sum::<usize>(), ORDER);
        assert!(w.signatures_separate_classes());
    }

    #[test]
    fn pic_action_is_an_isometry_fixing_k() {
        let w = build_w_e6();
        let k = PicVector::canonical();
        let basis: Vec<PicVector> = std::iter::once(PicVector::h()).chain((0..6).map(PicVector::e)).collect();
        for g in w.elements().iter().step_by(97) {
            assert_eq!(g.act_on_pic(&k), k);
            for a in &basis {
                for b in &basis {
                    assert_eq!(g.act_on_pic(a).pairing(&g.act_on_pic(b)), a.pairing(b));
                }
            }
        }
    }

    #[test]
    fn fermat_vectors_land_in_three_classes() {
        let fe = fermat_embedding().unwrap();
        let name = |s: &str| class_of(&fe.image(&FermatAut::parse(s).unwrap())).unwrap();
        assert_eq!(name("[1,2,1,2]"), "3C");
        assert_eq!(name("[1,2,0,0]"), "3D");
        assert_eq!(name("[1,1,1,0]"), "3A");
        assert_eq!(class_of(&WeylElement::identity()).unwrap(), "1A");
    }

    #[test]
    fn named_orders() {
        for (name, order) in [("5A", 120), ("3C", 648), ("12A", 108), ("8A", 8), ("4A", 4), ("3C1", 72), ("3C2", 12), ("4B", 24)] {
            assert_eq!(named_subgroup(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn anchored_class_sizes() {
        let t = anchor_class_table().unwrap();
        let w = build_w_e6();
        let size = |l: &str| w.classes()[t.class_named(l).unwrap()].size;
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
        for (l, n) in expect {
            assert_eq!(size(l), n, "{l}");
        }
        assert_eq!(t.labels().iter().filter(|l| l.starts_with("unanchored:")).count(), 13);
    }
}
