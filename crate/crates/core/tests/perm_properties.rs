use std::collections::BTreeSet;

use outersix::involution::{maximal_independent_sets, product_order_spectrum, stars};
use outersix::perm::{enumerate_sym, involution_class};
use outersix::{InvolutionClassId, Permutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn triple(n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (perm(n), perm(n), perm(n))
}

proptest! {
    #[test]
    fn associativity((p, q, r) in (1usize..=6).prop_flat_map(triple)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conjugation_preserves_cycle_type((p, g) in (perm(6), perm(6))) {
        prop_assert_eq!(p.conjugate(&g).unwrap().cycle_type(), p.cycle_type());
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(6)) {
        prop_assert_eq!(Permutation::parse_cycles(&p.to_string(), 6).unwrap(), p);
    }
}

#[test]
fn inverse_exhaustive_at_four() {
    for p in enumerate_sym(4).unwrap() {
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }
}

#[test]
fn order_divides_group_order() {
    for n in 1..=6 {
        let fact: u64 = (1..=n as u64).product();
        for p in enumerate_sym(n).unwrap() {
            assert_eq!(fact % p.order(), 0);
        }
    }
}

#[test]
fn class_sizes_match_filtering() {
    for n in 2..=6 {
        let all = enumerate_sym(n).unwrap();
        for j in 1..=n / 2 {
            let id = InvolutionClassId::new(n, j).unwrap();
            let filtered: Vec<Permutation> = all
                .iter()
                .filter(|p| p.cycle_type() == id.cycle_type())
                .cloned()
                .collect();
            let generated = involution_class(id).unwrap();
            assert_eq!(generated, filtered, "n = {n}, j = {j}");
            assert_eq!(generated.len() as u64, id.size());
        }
    }
}

#[test]
fn conjugacy_iff_equal_cycle_type_at_four() {
    let all = enumerate_sym(4).unwrap();
    for p in &all {
        let orbit: BTreeSet<Permutation> = all.iter().map(|g| p.conjugate(g).unwrap()).collect();
        for q in &all {
            assert_eq!(orbit.contains(q), p.cycle_type() == q.cycle_type());
        }
    }
}

#[test]
fn maximal_sets_are_exactly_the_stars() {
    for n in 3..=7 {
        let sets = maximal_independent_sets(n).unwrap();
        let mut expected: Vec<Vec<Permutation>> = stars(n).unwrap().into_iter().map(|s| s.members).collect();
        expected.sort();
        assert_eq!(sets, expected, "n = {n}");
        // set -> common point is a bijection onto 1..n
        let anchors: BTreeSet<usize> = sets
            .iter()
            .map(|s| {
                (0..n)
                    .find(|&k| s.iter().all(|t| t.image(k) != k))
                    .expect("common point")
            })
            .collect();
        assert_eq!(anchors.len(), n);
    }
}

/// Full ordered-pair sweep, independent of the fixed-first shortcut.
fn spectrum_by_all_pairs(id: InvolutionClassId) -> BTreeSet<u64> {
    let class = involution_class(id).unwrap();
    let mut out = BTreeSet::new();
    for x in &class {
        for y in &class {
            let xy = x.compose(y).unwrap();
            assert_eq!(xy.order(), y.compose(x).unwrap().order());
            out.insert(xy.order());
        }
    }
    out
}

#[test]
fn spectrum_shortcut_matches_full_sweep() {
    for n in 2..=8 {
        for j in 1..=n / 2 {
            let id = InvolutionClassId::new(n, j).unwrap();
            assert_eq!(product_order_spectrum(id).unwrap().orders, spectrum_by_all_pairs(id), "{id}");
        }
    }
}

#[test]
fn transposition_spectra_small_n() {
    for n in 3..=7 {
        let s = product_order_spectrum(InvolutionClassId::new(n, 1).unwrap()).unwrap().orders;
        assert!(s.is_subset(&[1, 2, 3].into_iter().collect()));
        if n == 3 {
            assert_eq!(s, [1, 3].into_iter().collect());
        }
    }
}
