use outersix::aut::{class_image, inner_witness, AutomorphismGroup, AutomorphismTable};
use outersix::perm::involution_class;
use outersix::{InvolutionClassId, Permutation};

fn group() -> AutomorphismGroup {
    AutomorphismGroup::enumerate(6).unwrap()
}

#[test]
fn sym6_counts() {
    let g = group();
    assert_eq!(g.order(), 1440);
    assert_eq!(g.inner_order(), 720);
    assert_eq!(g.out_order(), 2);
    assert_eq!(g.outer().count(), 720);
    assert_eq!(g.involutive_outer_count(), 36);
    assert_eq!(g.involutive_inner_count(), 75);
}

#[test]
fn outer_maps_have_no_witness_and_swap_classes() {
    let g = group();
    let sym = g.sym();
    let c = |j| InvolutionClassId::new(6, j).unwrap();
    for a in g.outer() {
        assert!(inner_witness(sym, a).is_none());
        assert_eq!(class_image(sym, a, c(1)).unwrap(), c(3));
        assert_eq!(class_image(sym, a, c(3)).unwrap(), c(1));
        assert_eq!(class_image(sym, a, c(2)).unwrap(), c(2));
    }
    for a in g.automorphisms().iter().filter(|a| g.is_inner(a)).step_by(37) {
        let w = inner_witness(sym, a).unwrap();
        assert_eq!(AutomorphismTable::conjugation(sym, sym.rank(&w)), *a);
    }
}

#[test]
fn outer_automorphisms_form_one_coset() {
    let g = group();
    let outer: Vec<_> = g.outer().collect();
    let first = outer[0].inverse();
    for b in &outer {
        assert!(g.is_inner(&first.compose(b)));
    }
    // squares of outer maps are inner, and not always trivial
    assert!(outer.iter().all(|a| g.is_inner(&a.compose(a))));
    assert!(outer.iter().any(|a| !a.compose(a).is_identity()));
}

#[test]
fn inner_subgroup_is_normal() {
    let g = group();
    let sym = g.sym();
    for a in g.automorphisms().iter().step_by(53) {
        let a_inv = a.inverse();
        for gi in (0..sym.order()).step_by(41) {
            let lhs = a.compose(&AutomorphismTable::conjugation(sym, gi)).compose(&a_inv);
            assert_eq!(lhs, AutomorphismTable::conjugation(sym, a.apply(gi)));
        }
    }
}

#[test]
fn sampled_elements_are_homomorphisms() {
    let g = group();
    for a in g.automorphisms().iter().step_by(180) {
        assert!(a.is_homomorphism(g.sym()));
    }
}

#[test]
fn transposition_images_under_an_outer_map() {
    let g = group();
    let sym = g.sym();
    let a = g.outer().next().unwrap();
    for t in involution_class(InvolutionClassId::new(6, 1).unwrap()).unwrap() {
        let img = a.apply_perm(sym, &t);
        assert_eq!(img.cycle_type().parts(), &[2, 2, 2]);
    }
    let x = Permutation::transposition(6, 1, 2).unwrap();
    let report = g.report();
    assert_eq!(report.involutive_outer_count, Some(36));
    let sample = report.sample_outer_generator_images.unwrap();
    assert_eq!(
        Permutation::from_one_based(&sample.transposition.images).unwrap().cycle_type().parts(),
        &[2, 2, 2]
    );
    assert_ne!(a.apply_perm(sym, &x), x);
}
