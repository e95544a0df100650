//! The rank-10 realization of the affine E8 root and weight lattices.
//!
//! Vectors live in a 10-dimensional rational space with ordered basis
//! `(eps0, delta, eps1, ..., eps8)`. The symmetric bilinear form is
//!
//! * `<eps_i, eps_j> = 1` if `i == j` (for `1 <= i, j <= 8`), else `0`,
//! * `<delta, eps0> = <eps0, delta> = 1`,
//! * all other pairings of basis vectors are `0`.
//!
//! In particular `delta` (the null root) and `eps0` are isotropic, and
//! `delta` is orthogonal to every root. The simple roots are
//!
//! * `alpha_i = eps_i - eps_{i+1}` for `1 <= i <= 7`,
//! * `alpha_8 = eps7 + eps8`,
//! * `alpha_0 = (delta + eps8 - eps1 - ... - eps7) / 2`,
//!
//! so the diagram is the chain `1-2-3-4-5-6-7-0` with node `8` attached to
//! node `6`; the affine node is the one labelled `1`. Fundamental weights are
//! taken with `delta`-coefficient zero:
//!
//! * `Lambda_0 = (2, 0; 0, ..., 0)`,
//! * `Lambda_i = (i, 0; 1 x i, 0 x (8 - i))` for `1 <= i <= 6`,
//! * `Lambda_7 = (4, 0; 1/2 x 7, -1/2)`,
//! * `Lambda_8 = (3, 0; 1/2 x 8)`.
//!
//! The level of a vector is its `eps0`-coordinate. A dominant integral weight
//! is labelled by its nine nonnegative pairings `M_i = <v, alpha_i>` together
//! with its doubled delta-depth `s` (the residue `v - sum M_i Lambda_i` is
//! always a rational multiple of `delta`; for weights of tensor powers of the
//! basic module the multiple is a nonpositive half-integer, recorded as
//! `s = -2 x coefficient`).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{self, half, rat, Rat};

/// Number of simple roots (`alpha_0` through `alpha_8`).
pub const RANK: usize = 9;

/// Levels of the fundamental weights `Lambda_0 .. Lambda_8`.
pub const FUNDAMENTAL_LEVELS: [u32; RANK] = [2, 1, 2, 3, 4, 5, 6, 4, 3];

/// A vector in the 10-dimensional rational realization.
///
/// Coordinates are stored in basis order `(eps0, delta, eps1, ..., eps8)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector10 {
    coords: [Rat; 10],
}

impl RationalVector10 {
    pub fn from_coords(coords: [Rat; 10]) -> Self {
        RationalVector10 { coords }
    }

    pub fn zero() -> Self {
        RationalVector10 {
            coords: [rat(0); 10],
        }
    }

    /// The isotropic basis vector paired to `delta`.
    pub fn eps0() -> Self {
        Self::basis(0)
    }

    /// The null root `delta`.
    pub fn null_root() -> Self {
        Self::basis(1)
    }

    /// The orthonormal basis vector `eps_i`, `1 <= i <= 8`.
    pub fn eps(i: usize) -> Self {
        assert!((1..=8).contains(&i), "eps index {i} out of range 1..=8");
        Self::basis(1 + i)
    }

    fn basis(slot: usize) -> Self {
        let mut coords = [rat(0); 10];
        coords[slot] = rat(1);
        RationalVector10 { coords }
    }

    pub fn coords(&self) -> &[Rat; 10] {
        &self.coords
    }

    /// The `eps0`-coordinate, i.e. the level `<v, delta>`.
    pub fn level(&self) -> Rat {
        self.coords[0]
    }

    /// The `delta`-coordinate.
    pub fn delta_coeff(&self) -> Rat {
        self.coords[1]
    }

    /// The `eps_i`-coordinate, `1 <= i <= 8`.
    pub fn eps_coeff(&self, i: usize) -> Rat {
        assert!((1..=8).contains(&i), "eps index {i} out of range 1..=8");
        self.coords[1 + i]
    }

    pub fn scale(&self, c: Rat) -> Self {
        let mut coords = self.coords;
        for x in &mut coords {
            *x *= c;
        }
        RationalVector10 { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == rat(0))
    }

    /// Canonical text form: ten reduced `p/q` coordinates, space-separated,
    /// in basis order.
    pub fn render(&self) -> String {
        self.coords
            .iter()
            .map(rational::render)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the canonical text form (bare integers are accepted).
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 10 {
            return Err(Error::ParseVector {
                input: s.to_string(),
                reason: format!("expected 10 coordinates, found {}", parts.len()),
            });
        }
        let mut coords = [rat(0); 10];
        for (slot, part) in parts.iter().enumerate() {
            coords[slot] = rational::parse(part).map_err(|e| Error::ParseVector {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
        }
        Ok(RationalVector10 { coords })
    }
}

impl Add for RationalVector10 {
    type Output = RationalVector10;
    fn add(self, rhs: RationalVector10) -> RationalVector10 {
        let mut coords = self.coords;
        for (a, b) in coords.iter_mut().zip(rhs.coords.iter()) {
            *a += *b;
        }
        RationalVector10 { coords }
    }
}

impl Sub for RationalVector10 {
    type Output = RationalVector10;
    fn sub(self, rhs: RationalVector10) -> RationalVector10 {
        let mut coords = self.coords;
        for (a, b) in coords.iter_mut().zip(rhs.coords.iter()) {
            *a -= *b;
        }
        RationalVector10 { coords }
    }
}

impl Neg for RationalVector10 {
    type Output = RationalVector10;
    fn neg(self) -> RationalVector10 {
        let mut coords = self.coords;
        for a in &mut coords {
            *a = -*a;
        }
        RationalVector10 { coords }
    }
}

impl fmt::Display for RationalVector10 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RationalVector10 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render())
    }
}

/// The symmetric bilinear form.
pub fn inner(u: &RationalVector10, v: &RationalVector10) -> Rat {
    let uc = u.coords();
    let vc = v.coords();
    // <eps0, delta> cross terms plus the orthonormal block on eps1..eps8.
    let mut acc = uc[0] * vc[1] + uc[1] * vc[0];
    for i in 2..10 {
        acc += uc[i] * vc[i];
    }
    acc
}

/// The simple root `alpha_i`, `0 <= i <= 8`.
pub fn simple_root(i: usize) -> RationalVector10 {
    assert!(i < RANK, "simple root index {i} out of range 0..=8");
    match i {
        0 => {
            // (delta + eps8 - eps1 - ... - eps7) / 2
            let mut coords = [rat(0); 10];
            coords[1] = half(1);
            for slot in 2..9 {
                coords[slot] = half(-1);
            }
            coords[9] = half(1);
            RationalVector10::from_coords(coords)
        }
        8 => RationalVector10::eps(7) + RationalVector10::eps(8),
        _ => RationalVector10::eps(i) - RationalVector10::eps(i + 1),
    }
}

/// The fundamental weight `Lambda_i`, `0 <= i <= 8`, normalized to
/// `delta`-coefficient zero. Satisfies `<alpha_i, Lambda_j> = delta_{ij}`.
pub fn fundamental_weight(i: usize) -> RationalVector10 {
    assert!(i < RANK, "fundamental weight index {i} out of range 0..=8");
    let mut coords = [rat(0); 10];
    coords[0] = rat(FUNDAMENTAL_LEVELS[i] as i128);
    match i {
        0 => {}
        1..=6 => {
            for slot in 2..(2 + i) {
                coords[slot] = rat(1);
            }
        }
        7 => {
            for slot in 2..9 {
                coords[slot] = half(1);
            }
            coords[9] = half(-1);
        }
        _ => {
            for slot in 2..10 {
                coords[slot] = half(1);
            }
        }
    }
    RationalVector10::from_coords(coords)
}

/// Reflection in the hyperplane of `alpha_i`:
/// `s_i(v) = v - <v, alpha_i> alpha_i`.
pub fn reflect(i: usize, v: &RationalVector10) -> RationalVector10 {
    let alpha = simple_root(i);
    *v - alpha.scale(inner(v, &alpha))
}

/// All nine pairings `<v, alpha_i>`, indexed by `i`.
pub fn pair_with_simple_roots(v: &RationalVector10) -> [Rat; RANK] {
    let mut out = [rat(0); RANK];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = inner(v, &simple_root(i));
    }
    out
}

/// Whether `v` is a dominant integral weight: every `<v, alpha_i>` is a
/// nonnegative integer. Blind to the `delta`-coefficient.
pub fn is_dominant(v: &RationalVector10) -> bool {
    pair_with_simple_roots(v)
        .iter()
        .all(|p| p.is_integer() && !p.is_negative())
}

/// Whether `v` lies in the closed dominant chamber: every `<v, alpha_i>` is
/// nonnegative (no integrality). Used for breakpoints of paths, which are
/// rarely integral weights.
pub fn in_dominant_chamber(v: &RationalVector10) -> bool {
    (0..RANK).all(|i| !inner(v, &simple_root(i)).is_negative())
}

/// A dominant integral weight encoded by its simple-root pairings
/// `M_0, ..., M_8` and its doubled delta-depth `s`.
///
/// Text form: `M0,M1,...,M8;s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightLabel {
    pub m: [u32; RANK],
    pub s: u32,
}

impl WeightLabel {
    pub fn new(m: [u32; RANK], s: u32) -> Self {
        WeightLabel { m, s }
    }

    /// Label with a single `M_i = 1` at depth zero.
    pub fn fundamental(i: usize) -> Self {
        assert!(i < RANK);
        let mut m = [0u32; RANK];
        m[i] = 1;
        WeightLabel { m, s: 0 }
    }

    /// The level `sum M_i level(Lambda_i)`.
    pub fn level(&self) -> u32 {
        self.m
            .iter()
            .zip(FUNDAMENTAL_LEVELS.iter())
            .map(|(m, l)| m * l)
            .sum()
    }

    /// Human-readable form, e.g. `2Λ1`, `Λ0+Λ2`, `Λ8 - 1/2 δ`.
    pub fn pretty(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (i, &m) in self.m.iter().enumerate() {
            match m {
                0 => {}
                1 => terms.push(format!("Λ{i}")),
                _ => terms.push(format!("{m}Λ{i}")),
            }
        }
        let head = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        };
        if self.s == 0 {
            head
        } else {
            format!("{head} - {} δ", render_doubled(self.s))
        }
    }
}

/// Renders a doubled half-integer: `2 -> "1"`, `3 -> "3/2"`.
pub fn render_doubled(doubled: u32) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.m.iter().map(|m| m.to_string()).collect();
        write!(f, "{};{}", ms.join(","), self.s)
    }
}

impl FromStr for WeightLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::ParseLabel {
            input: s.to_string(),
            reason,
        };
        let (ms, depth) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| err("missing `;` before the depth field".to_string()))?;
        let parts: Vec<&str> = ms.split(',').collect();
        if parts.len() != RANK {
            return Err(err(format!(
                "expected {RANK} comma-separated coefficients, found {}",
                parts.len()
            )));
        }
        let mut m = [0u32; RANK];
        for (i, part) in parts.iter().enumerate() {
            m[i] = part
                .trim()
                .parse()
                .map_err(|_| err(format!("coefficient {i} is not a nonnegative integer")))?;
        }
        let s_val: u32 = depth
            .trim()
            .parse()
            .map_err(|_| err("depth is not a nonnegative integer".to_string()))?;
        Ok(WeightLabel { m, s: s_val })
    }
}

/// Labels a dominant integral weight.
///
/// Fails if some pairing is negative or non-integral, or if the residue
/// `v - sum M_i Lambda_i` is not a nonpositive half-integer multiple of the
/// null root.
pub fn to_label(v: &RationalVector10) -> Result<WeightLabel> {
    let pairs = pair_with_simple_roots(v);
    let mut m = [0u32; RANK];
    for (i, p) in pairs.iter().enumerate() {
        if !p.is_integer() || p.is_negative() {
            return Err(Error::NotDominant(v.render()));
        }
        let n = p.to_integer();
        if n > u32::MAX as i128 {
            return Err(Error::NotDominant(v.render()));
        }
        m[i] = n as u32;
    }
    let mut rest = *v;
    for (i, &mi) in m.iter().enumerate() {
        if mi > 0 {
            rest = rest - fundamental_weight(i).scale(rat(mi as i128));
        }
    }
    // The residue is orthogonal to all simple roots, hence a multiple of the
    // null root; verify and read off the depth.
    let c = rest.delta_coeff();
    rest.coords[1] = rat(0);
    let doubled = c * rat(2);
    if !rest.is_zero() || !doubled.is_integer() || doubled.is_positive() {
        return Err(Error::DeltaResidue(v.render()));
    }
    Ok(WeightLabel {
        m,
        s: (-doubled.to_integer()) as u32,
    })
}

/// The vector `sum M_i Lambda_i - (s/2) delta`.
pub fn from_label(label: &WeightLabel) -> RationalVector10 {
    let mut v = RationalVector10::zero();
    for (i, &mi) in label.m.iter().enumerate() {
        if mi > 0 {
            v = v + fundamental_weight(i).scale(rat(mi as i128));
        }
    }
    v - RationalVector10::null_root().scale(half(label.s as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec10(coords: [(i128, i128); 10]) -> RationalVector10 {
        let mut out = [rat(0); 10];
        for (slot, (n, d)) in coords.iter().enumerate() {
            out[slot] = frac_checked(*n, *d);
        }
        RationalVector10::from_coords(out)
    }

    fn frac_checked(n: i128, d: i128) -> Rat {
        crate::rational::frac(n, d)
    }

    #[test]
    fn bilinear_form_on_basis_vectors() {
        let e0 = RationalVector10::eps0();
        let d = RationalVector10::null_root();
        assert_eq!(inner(&d, &e0), rat(1));
        assert_eq!(inner(&e0, &d), rat(1));
        assert_eq!(inner(&d, &d), rat(0));
        assert_eq!(inner(&e0, &e0), rat(0));
        for i in 1..=8 {
            for j in 1..=8 {
                let expect = if i == j { rat(1) } else { rat(0) };
                assert_eq!(
                    inner(&RationalVector10::eps(i), &RationalVector10::eps(j)),
                    expect
                );
            }
            assert_eq!(inner(&RationalVector10::eps(i), &d), rat(0));
            assert_eq!(inner(&RationalVector10::eps(i), &e0), rat(0));
        }
    }

    #[test]
    fn simple_roots_have_square_length_two() {
        for i in 0..RANK {
            let a = simple_root(i);
            assert_eq!(inner(&a, &a), rat(2), "alpha_{i}");
        }
    }

    #[test]
    fn affine_root_coordinates() {
        let a0 = simple_root(0);
        let expected = vec10([
            (0, 1),
            (1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (1, 2),
        ]);
        assert_eq!(a0, expected);
    }

    #[test]
    fn diagram_adjacency_of_the_affine_node() {
        // Node 0 is attached to node 7 only; in particular <alpha_0, alpha_8> = 0.
        let a0 = simple_root(0);
        for i in 1..RANK {
            let expect = if i == 7 { rat(-1) } else { rat(0) };
            assert_eq!(inner(&a0, &simple_root(i)), expect, "alpha_0 vs alpha_{i}");
        }
    }

    #[test]
    fn cartan_pairings_of_fundamental_weights() {
        for j in 0..RANK {
            let w = fundamental_weight(j);
            let pairs = pair_with_simple_roots(&w);
            for (i, p) in pairs.iter().enumerate() {
                let expect = if i == j { rat(1) } else { rat(0) };
                assert_eq!(*p, expect, "<alpha_{i}, Lambda_{j}>");
            }
        }
    }

    #[test]
    fn fundamental_weight_levels() {
        for i in 0..RANK {
            assert_eq!(
                fundamental_weight(i).level(),
                rat(FUNDAMENTAL_LEVELS[i] as i128)
            );
            assert_eq!(fundamental_weight(i).delta_coeff(), rat(0));
        }
    }

    #[test]
    fn pairing_row_of_the_affine_root() {
        // <alpha_0, alpha_.> = (2, 0, 0, 0, 0, 0, 0, -1, 0).
        let pairs = pair_with_simple_roots(&simple_root(0));
        let expected = [
            rat(2),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(-1),
            rat(0),
        ];
        assert_eq!(pairs, expected);
    }

    #[test]
    fn pairing_row_of_the_null_root_vanishes() {
        let pairs = pair_with_simple_roots(&RationalVector10::null_root());
        assert!(pairs.iter().all(|p| *p == rat(0)));
    }

    #[test]
    fn reflections_are_involutive_isometries() {
        let v = fundamental_weight(8) + simple_root(0).scale(frac_checked(3, 2));
        for i in 0..RANK {
            let r = reflect(i, &v);
            assert_eq!(reflect(i, &r), v);
            assert_eq!(inner(&r, &r), inner(&v, &v));
        }
    }

    #[test]
    fn reflecting_a_fundamental_weight_in_its_own_node() {
        // s_1(Lambda_1) = Lambda_1 - alpha_1 = (1, 0; 0, 1, 0, ..., 0).
        let r = reflect(1, &fundamental_weight(1));
        assert_eq!(r, RationalVector10::eps0() + RationalVector10::eps(2));
        // s_0 lowers by alpha_0 exactly when the pairing is 1.
        let w = RationalVector10::eps0() + RationalVector10::eps(8);
        assert_eq!(reflect(0, &w), w - simple_root(0));
    }

    #[test]
    fn null_root_is_fixed_by_all_reflections() {
        let d = RationalVector10::null_root();
        for i in 0..RANK {
            assert_eq!(reflect(i, &d), d);
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&RationalVector10::zero()));
        for i in 0..RANK {
            assert!(is_dominant(&fundamental_weight(i)));
        }
        // Depth does not matter for dominance.
        let shifted =
            fundamental_weight(8) - RationalVector10::null_root().scale(frac_checked(1, 2));
        assert!(is_dominant(&shifted));
        // (1, 0; -eps8) pairs negatively with alpha_7.
        let neg = RationalVector10::eps0() - RationalVector10::eps(8);
        assert!(!is_dominant(&neg));
        // Chamber membership permits non-integral pairings.
        let frac_weight = fundamental_weight(1).scale(frac_checked(1, 3));
        assert!(in_dominant_chamber(&frac_weight));
        assert!(!is_dominant(&frac_weight));
    }

    #[test]
    fn label_round_trip_on_simple_cases() {
        let label: WeightLabel = "1,0,0,0,0,0,0,0,2;0".parse().unwrap();
        let v = from_label(&label);
        // Lambda_0 + 2 Lambda_8 = (8, 0; 1, ..., 1).
        let mut expected = [rat(1); 10];
        expected[0] = rat(8);
        expected[1] = rat(0);
        assert_eq!(v, RationalVector10::from_coords(expected));
        assert_eq!(to_label(&v).unwrap(), label);
    }

    #[test]
    fn label_records_doubled_depth() {
        let shifted =
            fundamental_weight(8) - RationalVector10::null_root().scale(frac_checked(1, 2));
        let label = to_label(&shifted).unwrap();
        assert_eq!(label.m, [0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(label.s, 1);
        assert_eq!(from_label(&label), shifted);
    }

    #[test]
    fn labelling_rejects_raised_and_non_dominant_vectors() {
        let raised = fundamental_weight(0) + RationalVector10::null_root();
        assert!(matches!(to_label(&raised), Err(Error::DeltaResidue(_))));
        let neg = RationalVector10::eps0() - RationalVector10::eps(8);
        assert!(matches!(to_label(&neg), Err(Error::NotDominant(_))));
        let third = fundamental_weight(8)
            - RationalVector10::null_root().scale(frac_checked(1, 3));
        assert!(matches!(to_label(&third), Err(Error::DeltaResidue(_))));
    }

    #[test]
    fn label_text_round_trip() {
        for text in ["0,0,0,0,0,0,0,0,0;0", "2,1,0,0,0,0,0,3,1;5"] {
            let label: WeightLabel = text.parse().unwrap();
            assert_eq!(label.to_string(), text);
        }
        assert!("1,2;0".parse::<WeightLabel>().is_err());
        assert!("0,0,0,0,0,0,0,0,0".parse::<WeightLabel>().is_err());
        assert!("0,0,0,0,0,0,0,0,-1;0".parse::<WeightLabel>().is_err());
    }

    #[test]
    fn pretty_forms() {
        let l: WeightLabel = "1,2,0,0,0,0,0,0,0;0".parse().unwrap();
        assert_eq!(l.pretty(), "Λ0+2Λ1");
        let l: WeightLabel = "0,0,0,0,0,0,0,0,1;1".parse().unwrap();
        assert_eq!(l.pretty(), "Λ8 - 1/2 δ");
        let l: WeightLabel = "0,0,0,0,0,0,0,0,2;2".parse().unwrap();
        assert_eq!(l.pretty(), "2Λ8 - 1 δ");
        let l = WeightLabel::new([0; 9], 0);
        assert_eq!(l.pretty(), "0");
    }

    #[test]
    fn vector_text_round_trip() {
        let v = simple_root(0);
        let text = v.render();
        assert_eq!(
            text,
            "0/1 1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 1/2"
        );
        assert_eq!(RationalVector10::parse(&text).unwrap(), v);
        assert!(RationalVector10::parse("1 2 3").is_err());
    }

    #[test]
    fn label_level_matches_vector_level() {
        let label: WeightLabel = "1,0,1,0,0,0,0,2,1;3".parse().unwrap();
        assert_eq!(
            rat(label.level() as i128),
            from_label(&label).level()
        );
    }
}
