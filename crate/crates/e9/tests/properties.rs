//! Randomized and structural invariants: bilinear form symmetry, reflection
//! geometry, grading linearity, label round trips, path normal form, the
//! raising/lowering adjunction, truncation soundness, chamber convexity and
//! the transfer identity between consecutive decomposition tables.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;

use e9::decompose::{decompose, successors};
use e9::grading::{k_of_label, k_value};
use e9::lattice::{
    from_label, in_dominant_chamber, inner, is_dominant, reflect, to_label, RationalVector10,
    WeightLabel, RANK,
};
use e9::paths::{generate_basis_truncated, PlPath};
use e9::rational::{frac, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i128..=12, 1i128..=4).prop_map(|(n, d)| frac(n, d))
}

fn arb_vector() -> impl Strategy<Value = RationalVector10> {
    proptest::array::uniform10(arb_rat()).prop_map(RationalVector10::from_coords)
}

fn arb_label() -> impl Strategy<Value = WeightLabel> {
    (proptest::array::uniform9(0u32..4), 0u32..5).prop_map(|(m, s)| WeightLabel::new(m, s))
}

fn shallow_basis() -> &'static Vec<PlPath> {
    static BASIS: OnceLock<Vec<PlPath>> = OnceLock::new();
    BASIS.get_or_init(|| generate_basis_truncated(2))
}

fn arb_basis_path() -> impl Strategy<Value = PlPath> {
    (0..shallow_basis().len()).prop_map(|i| shallow_basis()[i].clone())
}

proptest! {
    #[test]
    fn form_is_symmetric(u in arb_vector(), v in arb_vector()) {
        prop_assert_eq!(inner(&u, &v), inner(&v, &u));
    }

    #[test]
    fn reflections_are_involutive_isometries(
        u in arb_vector(),
        v in arb_vector(),
        i in 0..RANK,
    ) {
        prop_assert_eq!(reflect(i, &reflect(i, &u)), u);
        prop_assert_eq!(inner(&reflect(i, &u), &reflect(i, &v)), inner(&u, &v));
    }

    #[test]
    fn dominance_ignores_null_root_shifts(
        a in arb_label(),
        b in arb_label(),
        t in arb_rat(),
    ) {
        let v = from_label(&a) - from_label(&b);
        let shifted = v + RationalVector10::null_root().scale(t);
        prop_assert_eq!(is_dominant(&v), is_dominant(&shifted));
    }

    #[test]
    fn grading_is_additive(a in arb_label(), b in arb_label()) {
        let sum = from_label(&a) + from_label(&b);
        prop_assert_eq!(
            k_value(&sum).unwrap(),
            k_of_label(&a) + k_of_label(&b)
        );
    }

    #[test]
    fn labels_round_trip_through_vectors(l in arb_label()) {
        prop_assert_eq!(to_label(&from_label(&l)).unwrap(), l);
    }

    #[test]
    fn breakpoints_reconstruct_their_path(p in arb_basis_path()) {
        prop_assert_eq!(PlPath::from_breakpoints(p.points().to_vec()), p.clone());
    }

    #[test]
    fn lowering_then_raising_is_the_identity(p in arb_basis_path(), i in 0..RANK) {
        if let Some(lowered) = p.f_op(i) {
            prop_assert_eq!(lowered.e_op(i), Some(p.clone()));
        }
        if let Some(raised) = p.e_op(i) {
            prop_assert_eq!(raised.f_op(i), Some(p.clone()));
        }
    }

    #[test]
    fn confined_breakpoints_confine_the_segments(p in arb_basis_path()) {
        if p.dominant_image() {
            for pair in p.points().windows(2) {
                let midpoint = (pair[0] + pair[1]).scale(frac(1, 2));
                prop_assert!(in_dominant_chamber(&midpoint));
            }
        }
    }
}

#[test]
fn deeper_truncations_refine_shallower_ones() {
    let shallow: BTreeSet<PlPath> = generate_basis_truncated(2).into_iter().collect();
    let filtered: BTreeSet<PlPath> = generate_basis_truncated(3)
        .into_iter()
        .filter(|p| p.endpoint().delta_coeff() >= frac(-2, 2))
        .collect();
    assert_eq!(shallow, filtered);
}

#[test]
fn successor_transfer_reproduces_the_next_table() {
    for n in 1..=5u32 {
        let table = decompose(n);
        let mut pushed: BTreeMap<WeightLabel, BigUint> = BTreeMap::new();
        for (label, count) in &table.entries {
            for (_, target) in successors(label).unwrap() {
                *pushed.entry(target).or_default() += count;
            }
        }
        assert_eq!(pushed, decompose(n + 1).entries, "transfer at level {n}");
    }
}
