//! Maximal weights of the basic module and the straight weights among them.
//!
//! Maximal weights form the Weyl orbit of `Lambda_1`; each has level 1 and a
//! nonpositive `delta`-coefficient `-j` with `j` a half-integer (its depth).
//! By shape they fall into four families:
//!
//! * type I: `(1, 0; +-eps_i)`, 16 weights at depth 0;
//! * type II: `(2, -1; +-1, ..., +-1) / 2` with an even number of minus
//!   signs, 128 weights at depth 1/2;
//! * type III: `(1, -1; nu)` with `nu` a permutation of `(1, 1, 1, 0^5)`,
//!   56 weights at depth 1;
//! * type IV: every other `(1, -j; nu)` in the orbit, `j >= 1`.
//!
//! Types I-III are the *straight* weights: the 200 directions whose straight
//! paths drive the decomposition algorithm. Classification here is purely by
//! shape; orbit membership is established separately by reflection search.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Signed;

use crate::lattice::{
    fundamental_weight, inner, reflect, simple_root, RationalVector10, RANK,
};
use crate::rational::{half, rat};

/// Shape classes of maximal weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WeightType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for WeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeightType::I => "I",
            WeightType::II => "II",
            WeightType::III => "III",
            WeightType::IV => "IV",
        };
        f.write_str(s)
    }
}

/// A straight weight: shape I, II or III.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StraightWeight {
    pub vector: RationalVector10,
    pub wtype: WeightType,
}

impl StraightWeight {
    /// Classifies `v`; returns `None` unless it has a straight shape.
    pub fn classify(v: RationalVector10) -> Option<Self> {
        match classify_maximal(&v) {
            Some(t @ (WeightType::I | WeightType::II | WeightType::III)) => {
                Some(StraightWeight { vector: v, wtype: t })
            }
            _ => None,
        }
    }
}

/// A maximal weight with its shape and doubled depth `2j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MaximalWeight {
    pub vector: RationalVector10,
    pub wtype: WeightType,
    pub depth_doubled: u32,
}

/// Shape classification of a candidate maximal weight.
///
/// Checks level 1 and the four coordinate patterns above; membership in the
/// actual Weyl orbit is *not* checked here.
pub fn classify_maximal(v: &RationalVector10) -> Option<WeightType> {
    if v.level() != rat(1) {
        return None;
    }
    let depth_doubled = -(v.delta_coeff() * rat(2));
    if !depth_doubled.is_integer() || depth_doubled.is_negative() {
        return None;
    }
    match depth_doubled.to_integer() {
        0 => {
            // +-eps_i: one coordinate +-1, the rest zero.
            let mut nonzero = 0usize;
            for i in 1..=8 {
                let c = v.eps_coeff(i);
                if c == rat(0) {
                    continue;
                }
                if c != rat(1) && c != rat(-1) {
                    return None;
                }
                nonzero += 1;
            }
            (nonzero == 1).then_some(WeightType::I)
        }
        1 => {
            // All coordinates +-1/2 with evenly many minus signs.
            let mut minus = 0usize;
            for i in 1..=8 {
                let c = v.eps_coeff(i);
                if c == half(-1) {
                    minus += 1;
                } else if c != half(1) {
                    return None;
                }
            }
            (minus % 2 == 0).then_some(WeightType::II)
        }
        d => {
            debug_assert!(d >= 2);
            if d == 2 && is_three_ones(v) {
                Some(WeightType::III)
            } else {
                Some(WeightType::IV)
            }
        }
    }
}

fn is_three_ones(v: &RationalVector10) -> bool {
    let mut ones = 0usize;
    for i in 1..=8 {
        let c = v.eps_coeff(i);
        if c == rat(1) {
            ones += 1;
        } else if c != rat(0) {
            return false;
        }
    }
    ones == 3
}

/// All 200 straight weights, in canonical order: type I, then II, then III,
/// and within a type by descending coordinate order.
pub fn enumerate_straight() -> Vec<StraightWeight> {
    let e0 = RationalVector10::eps0();
    let mut out: Vec<StraightWeight> = Vec::with_capacity(200);
    for i in 1..=8 {
        for sign in [rat(1), rat(-1)] {
            let v = e0 + RationalVector10::eps(i).scale(sign);
            out.push(StraightWeight { vector: v, wtype: WeightType::I });
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut coords = [half(1); 10];
        coords[0] = rat(1);
        coords[1] = half(-1);
        for i in 0..8 {
            if mask & (1 << i) != 0 {
                coords[2 + i] = half(-1);
            }
        }
        out.push(StraightWeight {
            vector: RationalVector10::from_coords(coords),
            wtype: WeightType::II,
        });
    }
    for a in 1..=8usize {
        for b in (a + 1)..=8 {
            for c in (b + 1)..=8 {
                let mut coords = [rat(0); 10];
                coords[0] = rat(1);
                coords[1] = rat(-1);
                coords[1 + a] = rat(1);
                coords[1 + b] = rat(1);
                coords[1 + c] = rat(1);
                out.push(StraightWeight {
                    vector: RationalVector10::from_coords(coords),
                    wtype: WeightType::III,
                });
            }
        }
    }
    out.sort_by(|x, y| {
        x.wtype
            .cmp(&y.wtype)
            .then_with(|| y.vector.cmp(&x.vector))
    });
    debug_assert_eq!(out.len(), 200);
    out
}

fn depth_doubled_of(v: &RationalVector10) -> Option<u32> {
    let d = -(v.delta_coeff() * rat(2));
    if d.is_integer() && !d.is_negative() {
        Some(d.to_integer() as u32)
    } else {
        None
    }
}

/// Reflection closure of `{Lambda_1}` among vectors of doubled depth at most
/// `floor_doubled`.
fn orbit_with_floor(floor_doubled: u32) -> BTreeSet<RationalVector10> {
    let seed = fundamental_weight(1);
    let mut seen: BTreeSet<RationalVector10> = BTreeSet::new();
    seen.insert(seed);
    let mut queue: VecDeque<RationalVector10> = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for i in 0..RANK {
            let w = reflect(i, &v);
            match depth_doubled_of(&w) {
                Some(d) if d <= floor_doubled => {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
                _ => {}
            }
        }
    }
    seen
}

/// The Weyl orbit of `Lambda_1` truncated at doubled depth `max_depth_doubled`,
/// generated by breadth-first reflection search.
///
/// Only the affine reflection changes the `delta`-coordinate, by half a unit
/// per application, so exploring one reflection past the retention floor
/// certifies closure; the search asserts that the extra band contributes no
/// new retained vectors.
pub fn maximal_orbit(max_depth_doubled: u32) -> Vec<MaximalWeight> {
    let direct = orbit_with_floor(max_depth_doubled);
    let slack: BTreeSet<RationalVector10> = orbit_with_floor(max_depth_doubled + 1)
        .into_iter()
        .filter(|v| depth_doubled_of(v).expect("orbit depths are half-integers") <= max_depth_doubled)
        .collect();
    assert_eq!(
        direct, slack,
        "reflection paths through the slack band must not reach new retained vectors"
    );
    let mut out: Vec<MaximalWeight> = direct
        .into_iter()
        .map(|v| {
            let depth_doubled = depth_doubled_of(&v).unwrap();
            let wtype = classify_maximal(&v)
                .expect("every orbit element must match a maximal shape");
            MaximalWeight { vector: v, wtype, depth_doubled }
        })
        .collect();
    out.sort_by(|x, y| {
        x.depth_doubled
            .cmp(&y.depth_doubled)
            .then_with(|| y.vector.cmp(&x.vector))
    });
    out
}

/// Closure of `{Lambda_1}` under the straight lowering moves
/// `omega -> omega - alpha_i`, allowed exactly when `<omega, alpha_i> = 1`
/// (the condition under which the lowering operator carries the straight
/// path to `omega` onto the straight path to `omega - alpha_i`), restricted
/// to straight shapes.
///
/// The restriction is load-bearing: straight moves also exit into type IV
/// (every orbit element supports a straight basis path), so the unrestricted
/// closure is infinite. Within straight shapes the closure recovers all 200
/// straight weights from `Lambda_1` alone.
pub fn straight_closure() -> BTreeSet<RationalVector10> {
    let seed = fundamental_weight(1);
    let mut seen: BTreeSet<RationalVector10> = BTreeSet::new();
    seen.insert(seed);
    let mut queue: VecDeque<RationalVector10> = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for i in 0..RANK {
            if inner(&v, &simple_root(i)) != rat(1) {
                continue;
            }
            let w = v - simple_root(i);
            if StraightWeight::classify(w).is_some() && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

pub(crate) fn straight_k(sw: &StraightWeight) -> i64 {
    crate::grading::k_value(&sw.vector).expect("straight weights have integral k")
}
