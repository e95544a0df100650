//! Piecewise-linear paths in weight space and their root operators.
//!
//! A path starts at the origin and is stored as its breakpoint sequence in
//! normal form: no zero-length segments, and no two consecutive segments
//! positively proportional. Two paths are equal exactly when their normal
//! forms agree, which makes path equality reparameterization-independent.
//!
//! For a node `i`, the height of a path is `h_i(t) = <pi(t), alpha_i>`; it is
//! piecewise affine, so its minimum `m_i` over the path is attained at a
//! breakpoint. The lowering operator `f_i` is defined when the endpoint
//! height exceeds the minimum by at least 1. Writing `t0` for the last time
//! the minimum is attained and `t1` for the first later time the height
//! reaches `m_i + 1`, the operator leaves the prefix before `t0` alone,
//! reflects the window `[t0, t1]` through the wall of `alpha_i` (anchored at
//! `pi(t0)` to stay continuous), and translates the suffix by `-alpha_i`.
//! The raising operator `e_i` is the time-reversed mirror image: it is
//! defined when `m_i <= -1`, and acts on the window from the last time
//! `m_i + 1` is reached before the *first* minimum.
//!
//! Iterating `f_i` from the straight path to `Lambda_1` generates the path
//! basis of the basic module. Truncation by endpoint depth is safe because
//! lowering never raises the endpoint's `delta`-coefficient. Counting
//! chamber-confined concatenations of basis paths computes tensor-power
//! multiplicities; since each factor's running coordinate in the `eps0`
//! direction advances linearly from 0 to 1, distinct factor tuples yield
//! distinct concatenated paths and may be counted without deduplication.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Signed};

use crate::lattice::{
    fundamental_weight, in_dominant_chamber, inner, simple_root, to_label, RationalVector10,
    WeightLabel, RANK,
};
use crate::rational::{half, rat, Rat};

/// A piecewise-linear path from the origin, in breakpoint normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PlPath {
    points: Vec<RationalVector10>,
}

impl PlPath {
    /// The constant path at the origin.
    pub fn trivial() -> Self {
        PlPath {
            points: vec![RationalVector10::zero()],
        }
    }

    /// The straight path from the origin to `target`.
    pub fn straight(target: RationalVector10) -> Self {
        if target.is_zero() {
            Self::trivial()
        } else {
            PlPath {
                points: vec![RationalVector10::zero(), target],
            }
        }
    }

    /// Builds a path from raw breakpoints (which must start at the origin)
    /// and normalizes.
    pub fn from_breakpoints(points: Vec<RationalVector10>) -> Self {
        assert!(
            points.first().is_some_and(|p| p.is_zero()),
            "paths start at the origin"
        );
        PlPath {
            points: Self::normalized(points),
        }
    }

    pub fn points(&self) -> &[RationalVector10] {
        &self.points
    }

    pub fn endpoint(&self) -> RationalVector10 {
        *self.points.last().unwrap()
    }

    /// Number of linear segments.
    pub fn segments(&self) -> usize {
        self.points.len() - 1
    }

    /// Drops zero segments and merges consecutive positively-proportional
    /// segments. Merging never cascades: the merged segment keeps its
    /// direction class, which already differed from the one before it.
    fn normalized(raw: Vec<RationalVector10>) -> Vec<RationalVector10> {
        let mut out: Vec<RationalVector10> = Vec::with_capacity(raw.len());
        for p in raw {
            let Some(&last) = out.last() else {
                out.push(p);
                continue;
            };
            if p == last {
                continue;
            }
            if out.len() >= 2 {
                let prev = out[out.len() - 2];
                if positively_proportional(&(last - prev), &(p - last)) {
                    let n = out.len();
                    out[n - 1] = p;
                    continue;
                }
            }
            out.push(p);
        }
        out
    }

    /// `self` followed by `other` translated to start at `self`'s endpoint.
    pub fn concat(&self, other: &PlPath) -> PlPath {
        let end = self.endpoint();
        let mut points = self.points.clone();
        points.extend(other.points.iter().skip(1).map(|p| *p + end));
        PlPath {
            points: Self::normalized(points),
        }
    }

    /// Heights of the breakpoints against `alpha_i`.
    fn heights(&self, i: usize) -> Vec<Rat> {
        let alpha = simple_root(i);
        self.points.iter().map(|p| inner(p, &alpha)).collect()
    }

    /// `(min, final)` height against `alpha_i`. The minimum over the whole
    /// path equals the minimum over breakpoints because the height is affine
    /// on each segment.
    pub fn height_profile(&self, i: usize) -> (Rat, Rat) {
        let hs = self.heights(i);
        let m = *hs.iter().min().unwrap();
        (m, *hs.last().unwrap())
    }

    /// The lowering operator at node `i`; `None` if undefined.
    pub fn f_op(&self, i: usize) -> Option<PlPath> {
        assert!(i < RANK, "node index {i} out of range 0..=8");
        let alpha = simple_root(i);
        let hs = self.heights(i);
        let m = *hs.iter().min().unwrap();
        let one = rat(1);
        if *hs.last().unwrap() - m < one {
            return None;
        }
        let target = m + one;
        // Last attainment of the minimum; a breakpoint since heights are
        // piecewise affine.
        let idx0 = hs.iter().rposition(|h| *h == m).unwrap();
        // First crossing of m + 1 after idx0. Scanning forward, hs[k] stays
        // below the target until the crossing segment, so the fraction below
        // is well-defined and positive.
        let mut kcross = idx0;
        let mut pcross = self.points[idx0];
        for k in idx0..self.points.len() - 1 {
            if hs[k + 1] >= target {
                let u = (target - hs[k]) / (hs[k + 1] - hs[k]);
                pcross = self.points[k] + (self.points[k + 1] - self.points[k]).scale(u);
                kcross = k;
                break;
            }
        }
        let mut out: Vec<RationalVector10> = Vec::with_capacity(self.points.len() + 1);
        out.extend_from_slice(&self.points[..=idx0]);
        for j in (idx0 + 1)..self.points.len() {
            if j <= kcross {
                // Inside the reflected window, strictly below the target.
                out.push(self.points[j] - alpha.scale(hs[j] - m));
            } else {
                if j == kcross + 1 && hs[j] > target {
                    // Interior crossing: materialize the bend, which the
                    // window maps onto pcross - alpha.
                    out.push(pcross - alpha);
                }
                out.push(self.points[j] - alpha);
            }
        }
        Some(PlPath {
            points: Self::normalized(out),
        })
    }

    /// The raising operator at node `i`; `None` if undefined. Inverse to
    /// `f_op` wherever either composition is defined.
    pub fn e_op(&self, i: usize) -> Option<PlPath> {
        assert!(i < RANK, "node index {i} out of range 0..=8");
        let alpha = simple_root(i);
        let hs = self.heights(i);
        let m = *hs.iter().min().unwrap();
        let one = rat(1);
        // The path starts at height 0, so e_i is defined iff m <= -1.
        if -m < one {
            return None;
        }
        let target = m + one;
        // First attainment of the minimum.
        let idx0 = hs.iter().position(|h| *h == m).unwrap();
        // Last crossing of m + 1 at or before idx0; guaranteed because the
        // initial height 0 is >= target.
        let mut kcross = 0;
        let mut pcross = self.points[0];
        for k in (1..=idx0).rev() {
            if hs[k - 1] >= target {
                let u = (target - hs[k]) / (hs[k - 1] - hs[k]);
                pcross = self.points[k] + (self.points[k - 1] - self.points[k]).scale(u);
                kcross = k;
                break;
            }
        }
        debug_assert!(kcross >= 1, "height reaches m + 1 before the first minimum");
        let mut out: Vec<RationalVector10> = Vec::with_capacity(self.points.len() + 1);
        out.extend_from_slice(&self.points[..kcross]);
        if hs[kcross - 1] > target {
            // Interior crossing: the mirrored window fixes this bend point.
            out.push(pcross);
        }
        for j in kcross..self.points.len() {
            if j <= idx0 {
                out.push(self.points[j] + alpha.scale(target - hs[j]));
            } else {
                out.push(self.points[j] + alpha);
            }
        }
        Some(PlPath {
            points: Self::normalized(out),
        })
    }

    /// Whether every breakpoint lies in the closed dominant chamber. The
    /// chamber is an intersection of half-spaces, hence convex, so checking
    /// breakpoints covers the whole image.
    pub fn dominant_image(&self) -> bool {
        self.points.iter().all(in_dominant_chamber)
    }
}

fn positively_proportional(u: &RationalVector10, v: &RationalVector10) -> bool {
    debug_assert!(!u.is_zero() && !v.is_zero());
    let uc = u.coords();
    let vc = v.coords();
    let pivot = uc.iter().position(|c| *c != rat(0)).unwrap();
    if vc[pivot] == rat(0) {
        return false;
    }
    let c = vc[pivot] / uc[pivot];
    c.is_positive() && *v == u.scale(c)
}

/// Generates the path basis of the basic module, truncated to endpoints of
/// doubled depth at most `max_depth_doubled`: the closure of the straight
/// path to `Lambda_1` under all lowering operators, discarding paths whose
/// endpoint falls below the floor. The discard is safe because lowering
/// moves the endpoint by `-alpha_i`, which never raises the
/// `delta`-coefficient.
pub fn generate_basis_truncated(max_depth_doubled: u32) -> Vec<PlPath> {
    let floor = half(-(max_depth_doubled as i128));
    let seed = PlPath::straight(fundamental_weight(1));
    let mut seen: BTreeSet<PlPath> = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue: VecDeque<PlPath> = VecDeque::from([seed]);
    while let Some(path) = queue.pop_front() {
        for i in 0..RANK {
            if let Some(next) = path.f_op(i) {
                if next.endpoint().delta_coeff() >= floor && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Multiplicities of the `n`-th tensor power of the basic module by dominant
/// weight, truncated to doubled depth `max_depth_doubled`.
///
/// Counts `n`-fold concatenations of truncated basis paths whose image stays
/// in the closed dominant chamber, grouped by endpoint label. Whether a
/// factor may extend a partial concatenation depends only on the running
/// endpoint, so the tally folds over endpoints. Every reported stratum at
/// depth within the truncation is exact: factors only deepen the endpoint,
/// so no contributing tuple is lost to the floor.
pub fn tensor_power_truncated(
    n: u32,
    max_depth_doubled: u32,
) -> BTreeMap<WeightLabel, BigUint> {
    assert!(n >= 1, "tensor power requires n >= 1");
    let basis = generate_basis_truncated(max_depth_doubled);
    let floor = half(-(max_depth_doubled as i128));
    let mut states: BTreeMap<RationalVector10, BigUint> = BTreeMap::new();
    for path in &basis {
        if path.dominant_image() {
            let entry = states.entry(path.endpoint()).or_default();
            *entry += BigUint::one();
        }
    }
    for _ in 1..n {
        let mut next: BTreeMap<RationalVector10, BigUint> = BTreeMap::new();
        for (v, count) in &states {
            for path in &basis {
                let end = *v + path.endpoint();
                if end.delta_coeff() < floor {
                    continue;
                }
                let confined = path.points()[1..]
                    .iter()
                    .all(|p| in_dominant_chamber(&(*v + *p)));
                if confined {
                    *next.entry(end).or_default() += count;
                }
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|(v, c)| {
            let label = to_label(&v).expect("confined endpoints are dominant weights");
            (label, c)
        })
        .collect()
}

/// Restricts a stratified multiplicity map to the least depth present for
/// each class (same `M` part, minimal `s`).
pub fn minimal_stratum(
    table: &BTreeMap<WeightLabel, BigUint>,
) -> BTreeMap<WeightLabel, BigUint> {
    let mut out: BTreeMap<WeightLabel, BigUint> = BTreeMap::new();
    let mut seen: BTreeSet<[u32; RANK]> = BTreeSet::new();
    // Ascending label order visits each class at its least depth first.
    for (label, count) in table {
        if seen.insert(label.m) {
            out.insert(*label, count.clone());
        }
    }
    out
}
