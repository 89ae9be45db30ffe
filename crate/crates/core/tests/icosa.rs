use std::collections::BTreeSet;

use outersix::aut::{class_image, AutomorphismGroup, AutomorphismTable};
use outersix::icosa::{all_triples, IcosaConstruction};
use outersix::{InvolutionClassId, Permutation};

fn p(s: &str) -> Permutation {
    Permutation::parse_cycles(s, 6).unwrap()
}

#[test]
fn twelve_classes_of_sixty() {
    let c = IcosaConstruction::build().unwrap();
    assert_eq!(c.classes.len(), 12);
    assert!(c.classes.iter().all(|k| k.size == 60));
    assert_eq!(c.classes.iter().map(|k| k.size).sum::<usize>(), 720);
    assert!(c.classes.iter().all(|k| k.triples.len() == 10));
}

#[test]
fn duals_are_complementary() {
    let c = IcosaConstruction::build().unwrap();
    assert_eq!(c.pairs.len(), 6);
    for (k, class) in c.classes.iter().enumerate() {
        let d = c.dual[k];
        assert_ne!(d, k);
        assert_eq!(c.dual[d], k);
        let union: BTreeSet<_> = class.triples.union(&c.classes[d].triples).copied().collect();
        assert_eq!(union, all_triples());
        assert!(class.triples.is_disjoint(&c.classes[d].triples));
    }
}

#[test]
fn dual_via_skeleton_agrees() {
    let c = IcosaConstruction::build().unwrap();
    for k in 0..12 {
        assert_eq!(c.dual_via_skeleton(k).unwrap(), c.dual[k]);
    }
}

#[test]
fn phi_is_an_exceptional_isomorphism() {
    let c = IcosaConstruction::build().unwrap();
    let table = c.phi_table().unwrap();
    let sym = c.sym();
    assert!(c.phi(&Permutation::identity(6)).is_identity());
    let cls = |j| InvolutionClassId::new(6, j).unwrap();
    assert_eq!(class_image(sym, &table, cls(1)).unwrap(), cls(3));
    assert_eq!(class_image(sym, &table, cls(3)).unwrap(), cls(1));
    assert_eq!(class_image(sym, &table, cls(2)).unwrap(), cls(2));
    // trivial kernel by scan
    assert_eq!((0..720).filter(|&x| table.apply(x) == sym.identity()).count(), 1);

    let images: Vec<Permutation> = ["(1,2)", "(1,3)", "(2,3)"].iter().map(|s| c.phi(&p(s))).collect();
    for img in &images {
        assert_eq!(img.cycle_type().parts(), &[2, 2, 2]);
    }
    for a in 0..3 {
        for b in a + 1..3 {
            assert_ne!(images[a], images[b]);
            assert!(!images[a].commutes_with(&images[b]));
        }
    }
}

#[test]
fn identifications_give_exactly_the_outer_coset() {
    let c = IcosaConstruction::build().unwrap();
    let g = AutomorphismGroup::enumerate(6).unwrap();
    let built: BTreeSet<AutomorphismTable> = c.all_identifications().into_iter().collect();
    let outer: BTreeSet<AutomorphismTable> = g.outer().cloned().collect();
    assert_eq!(built.len(), 720);
    assert_eq!(built, outer);
}

#[test]
fn identifications_differ_by_inner_maps() {
    let c = IcosaConstruction::build().unwrap();
    let sym = c.sym();
    let ident = p("(1,5,3)");
    let g = p("(2,6)(3,4)");
    let base = c.outer_from_identification(&ident);
    let moved = c.outer_from_identification(&g.compose(&ident).unwrap());
    let conj = AutomorphismTable::conjugation(sym, sym.rank(&g));
    assert_eq!(moved, conj.compose(&base));
}

#[test]
fn squares_are_inner_and_not_always_trivial() {
    let c = IcosaConstruction::build().unwrap();
    let g = AutomorphismGroup::enumerate(6).unwrap();
    let all = c.all_identifications();
    assert!(all.iter().all(|a| g.is_inner(&a.compose(a))));
    assert!(all.iter().any(|a| !a.compose(a).is_identity()));
}

#[test]
fn export_contains_all_tables() {
    let c = IcosaConstruction::build().unwrap();
    let e = c.export();
    assert_eq!(e.model.faces.len(), 20);
    assert_eq!(e.classes.len(), 12);
    assert_eq!(e.dual_pairs.len(), 6);
    assert_eq!(e.phi.len(), 720);
    assert_eq!(e.transposition_images.len(), 15);
    assert!(e
        .transposition_images
        .iter()
        .all(|t| t.image_letters.matches('(').count() == 3));
}
