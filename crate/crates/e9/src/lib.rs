//! Exact decomposition of tensor powers of the basic level-1 module of the
//! affine Kac-Moody algebra of type E8, together with machine checks of the
//! supporting lemmas.
//!
//! Weights live in a rational 10-space with ordered basis `(eps_0, delta,
//! eps_1, ..., eps_8)`; the symmetric form pairs `eps_0` with `delta` and is
//! Euclidean on the `eps_i`. Dominant integral weights are written as labels
//! `sum M_i Lambda_i - (s/2) delta` over the nine fundamental weights, with
//! the depth `s` doubled so everything stays integer. The central objects:
//!
//! * the grading `k` and the delta shift, which single out one *initial*
//!   weight per dominant class ([`grading`]);
//! * the 200 *straight* maximal weights of the basic module ([`straight`]);
//! * a piecewise-linear path model with raising and lowering root operators,
//!   used as an independent decomposition oracle ([`paths`]);
//! * the transfer-matrix decomposition of tensor powers over straight
//!   weights, explicit witness paths, and exhaustive desk-scale verification
//!   sweeps for the subtraction and addition lemmas ([`decompose`]);
//! * a command-line front end with stable text and JSON output ([`cli`]).
//!
//! All arithmetic is exact: rationals over 128-bit integers for weights,
//! arbitrary-precision naturals for multiplicities. No floats anywhere.

pub mod cli;
pub mod decompose;
pub mod error;
pub mod grading;
pub mod lattice;
pub mod paths;
pub mod rational;
pub mod straight;

pub use decompose::{decompose, DecompositionTable};
pub use error::{Error, Result};
pub use lattice::{RationalVector10, WeightLabel};
pub use straight::{enumerate_straight, StraightWeight, WeightType};
