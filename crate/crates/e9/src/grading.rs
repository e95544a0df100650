//! The integer grading `k` and the delta shift.
//!
//! The grading is induced by the isotropic vector
//! `alpha0_hat = alpha_0 - eps8 = (delta - eps1 - ... - eps8) / 2`:
//! for a vector `v`, `k(v) = -<v, 2 alpha0_hat>`, which on coordinates reads
//! `k(v) = -level(v) + sum of the eps-coordinates`. Since `alpha0_hat` is a
//! half multiple of `delta` modulo the root lattice, `k` is constant on
//! root-lattice translates shifted by `delta` and on dominant labels reduces
//! to `k = M_8 - M_7 - 2 M_0`.
//!
//! The delta shift of a label is
//!
//! * `0` if `k <= 0` and `k` is even,
//! * `1/2` if `k <= 1` and `k` is odd,
//! * `(k + 2 (k mod 3)) / 6` if `k >= 1`,
//!
//! where `k mod 3` is the least nonnegative residue. The two applicable
//! branches agree at `k = 1` (both give `1/2`). The shift is the depth below
//! a dominant class at which that class first occurs in tensor powers of the
//! basic module; a label is *initial* when its recorded depth equals its
//! shift.

use crate::error::{Error, Result};
use crate::lattice::{inner, simple_root, RationalVector10, WeightLabel};
use crate::rational::rat;

/// Carries the grading vector `alpha0_hat`.
pub struct GradingContext {
    alpha0_hat: RationalVector10,
}

impl GradingContext {
    pub fn new() -> Self {
        GradingContext {
            alpha0_hat: simple_root(0) - RationalVector10::eps(8),
        }
    }

    pub fn alpha0_hat(&self) -> &RationalVector10 {
        &self.alpha0_hat
    }

    /// `k(v) = -<v, 2 alpha0_hat>`. Errors if the value is not an integer,
    /// which signals a vector outside the weight lattice span.
    pub fn k_value(&self, v: &RationalVector10) -> Result<i64> {
        let q = -(inner(v, &self.alpha0_hat) * rat(2));
        if !q.is_integer() {
            return Err(Error::NonIntegerK(v.render()));
        }
        Ok(q.to_integer() as i64)
    }

    /// Least nonnegative residue of `k(v)` modulo 3.
    pub fn residue3(&self, v: &RationalVector10) -> Result<u8> {
        Ok(residue3_of_k(self.k_value(v)?))
    }
}

impl Default for GradingContext {
    fn default() -> Self {
        Self::new()
    }
}

/// `k` of a vector via a fresh context.
pub fn k_value(v: &RationalVector10) -> Result<i64> {
    GradingContext::new().k_value(v)
}

/// Least nonnegative residue of `k(v)` modulo 3.
pub fn residue3(v: &RationalVector10) -> Result<u8> {
    GradingContext::new().residue3(v)
}

/// `k` of a dominant label: `M_8 - M_7 - 2 M_0`. Ignores the depth field.
pub fn k_of_label(label: &WeightLabel) -> i64 {
    label.m[8] as i64 - label.m[7] as i64 - 2 * label.m[0] as i64
}

/// Least nonnegative residue modulo 3 (`-1 -> 2`, `-2 -> 1`).
pub fn residue3_of_k(k: i64) -> u8 {
    k.rem_euclid(3) as u8
}

/// The delta shift of the label's class, doubled so the result is an integer.
/// Ignores the depth field.
pub fn delta_shift_doubled(label: &WeightLabel) -> u32 {
    let k = k_of_label(label);
    if k <= 0 && k % 2 == 0 {
        0
    } else if k <= 1 {
        // k odd and <= 1; agrees with the k >= 1 branch at k = 1.
        1
    } else {
        // k >= 2: doubled shift (k + 2 (k mod 3)) / 3, always integral.
        let r = residue3_of_k(k) as i64;
        ((k + 2 * r) / 3) as u32
    }
}

/// Whether the label's recorded depth equals the delta shift of its class.
pub fn is_initial(label: &WeightLabel) -> bool {
    label.s == delta_shift_doubled(label)
}
