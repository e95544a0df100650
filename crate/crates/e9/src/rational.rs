//! Exact rational scalars.
//!
//! Every coordinate, pairing and path parameter in this crate is an exact
//! rational number; no floating point is used anywhere. `Ratio<i128>` keeps
//! values in canonical reduced form, so equality, ordering and hashing are
//! structural. Overflow checks stay on in release builds (see the workspace
//! manifest), so an out-of-range intermediate aborts instead of corrupting.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational scalar used for all coordinates and pairings.
pub type Rat = Ratio<i128>;

/// The integer `n` as a rational.
pub fn rat(n: i128) -> Rat {
    Ratio::from_integer(n)
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i128, d: i128) -> Rat {
    Ratio::new(n, d)
}

/// The rational `n/2`.
pub fn half(n: i128) -> Rat {
    Ratio::new(n, 2)
}

/// Canonical `p/q` rendering: reduced, denominator positive and always present.
pub fn render(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse(s: &str) -> Result<Rat> {
    let err = |reason: &str| Error::ParseRational {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i128 = num
        .trim()
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let d: i128 = den
        .trim()
        .parse()
        .map_err(|_| err("denominator is not an integer"))?;
    if d == 0 {
        return Err(err("denominator is zero"));
    }
    Ok(Ratio::new(n, d))
}
