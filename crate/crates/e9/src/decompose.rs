//! Decomposition of tensor powers of the basic module into irreducibles.
//!
//! The `n`-th tensor power of the basic module decomposes with finitely many
//! isotypic classes per level; each class first appears at the depth given by
//! its delta shift, and the table of multiplicities at level `n + 1` is
//! obtained from the table at level `n` by adding straight weights:
//!
//! * every initial weight of level `n + 1` is a sum `(initial of level n) +
//!   (straight weight)`, and conversely every such dominant, initial sum
//!   contributes the predecessor's multiplicity;
//! * subtracting a straight weight from an initial weight lands either
//!   outside the dominant weights or on an initial weight (subtraction
//!   lemma), so no non-initial carrier is ever consulted;
//! * adding a non-straight maximal weight to an initial weight never lands
//!   on an initial weight (addition lemma), so straight weights suffice.
//!
//! Both lemmas are exercised numerically by the `verify_*` sweeps below, as
//! is the witness construction: an explicit straight-weight sequence from the
//! origin to any initial weight through initial partial sums, which proves
//! every class really does appear at its shift. The level catalog and the
//! product generating function `prod_i 1 / (1 - x^level(Lambda_i))` give two
//! independent counts of the classes per level.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{delta_shift_doubled, is_initial, k_of_label};
use crate::lattice::{
    from_label, is_dominant, to_label, RationalVector10, WeightLabel, FUNDAMENTAL_LEVELS, RANK,
};
use crate::rational::rat;
use crate::straight::{
    enumerate_straight, maximal_orbit, straight_k, StraightWeight, WeightType,
};

/// Cache and payload schema identifier.
pub const TABLE_FORMAT: &str = "e9-table-v1";

/// Multiplicities of the initial weights at one level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionTable {
    pub n: u32,
    pub entries: BTreeMap<WeightLabel, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    format: String,
    n: u32,
    entries: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    label: String,
    mult: String,
}

impl DecompositionTable {
    fn base() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(WeightLabel::fundamental(1), BigUint::one());
        DecompositionTable { n: 1, entries }
    }

    /// One transfer step: push every entry forward along all straight
    /// weights, keeping dominant initial targets.
    fn step(&self) -> Self {
        let omega = enumerate_straight();
        let mut entries: BTreeMap<WeightLabel, BigUint> = BTreeMap::new();
        for (label, count) in &self.entries {
            let base = from_label(label);
            for sw in &omega {
                let sum = base + sw.vector;
                if let Ok(target) = to_label(&sum) {
                    if is_initial(&target) {
                        *entries.entry(target).or_default() += count;
                    }
                }
            }
        }
        DecompositionTable {
            n: self.n + 1,
            entries,
        }
    }

    /// Entries in canonical order: descending lexicographic on the label.
    pub fn entries_desc(&self) -> Vec<(&WeightLabel, &BigUint)> {
        self.entries.iter().rev().collect()
    }

    /// Canonical JSON document (also the cache file format).
    pub fn to_json(&self) -> String {
        let file = TableFile {
            format: TABLE_FORMAT.to_string(),
            n: self.n,
            entries: self
                .entries_desc()
                .into_iter()
                .map(|(label, mult)| TableEntry {
                    label: label.to_string(),
                    mult: mult.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("table serialization cannot fail")
    }

    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let cache_err = |reason: String| Error::Cache {
            path: origin.to_string(),
            reason,
        };
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| cache_err(e.to_string()))?;
        if file.format != TABLE_FORMAT {
            return Err(cache_err(format!(
                "format `{}`, expected `{TABLE_FORMAT}`",
                file.format
            )));
        }
        let mut entries = BTreeMap::new();
        for entry in file.entries {
            let label: WeightLabel = entry
                .label
                .parse()
                .map_err(|e: Error| cache_err(e.to_string()))?;
            let mult: BigUint = entry
                .mult
                .parse()
                .map_err(|_| cache_err(format!("bad multiplicity `{}`", entry.mult)))?;
            if entries.insert(label, mult).is_some() {
                return Err(cache_err(format!("duplicate label `{}`", entry.label)));
            }
        }
        Ok(DecompositionTable {
            n: file.n,
            entries,
        })
    }
}

/// The multiplicity table of the `n`-th tensor power, `n >= 1`.
pub fn decompose(n: u32) -> DecompositionTable {
    assert!(n >= 1, "tensor power requires n >= 1");
    let mut table = DecompositionTable::base();
    while table.n < n {
        table = table.step();
    }
    table
}

/// Like [`decompose`], but reading and writing per-level JSON cache files in
/// `dir`. Results are identical to the uncached computation.
pub fn decompose_with_cache(n: u32, dir: &Path) -> Result<DecompositionTable> {
    assert!(n >= 1, "tensor power requires n >= 1");
    fs::create_dir_all(dir)?;
    let mut prev: Option<DecompositionTable> = None;
    for m in 1..=n {
        let path = dir.join(format!("{TABLE_FORMAT}.n{m}.json"));
        let table = if path.exists() {
            let text = fs::read_to_string(&path)?;
            let table = DecompositionTable::from_json(&text, &path.display().to_string())?;
            if table.n != m {
                return Err(Error::Cache {
                    path: path.display().to_string(),
                    reason: format!("level {} stored under level {m}", table.n),
                });
            }
            table
        } else {
            let table = match &prev {
                None => DecompositionTable::base(),
                Some(p) => p.step(),
            };
            fs::write(&path, table.to_json())?;
            table
        };
        prev = Some(table);
    }
    Ok(prev.expect("n >= 1 produces at least one table"))
}

/// All dominant classes of level `n`: labels with `sum M_i level(Lambda_i) = n`
/// and depth set to the delta shift.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelCatalog {
    pub n: u32,
    pub labels: Vec<WeightLabel>,
}

/// Enumerates the level-`n` catalog in canonical (descending lexicographic)
/// order.
pub fn enumerate_level(n: u32) -> LevelCatalog {
    let mut labels = Vec::new();
    let mut m = [0u32; RANK];
    descend(0, n, &mut m, &mut labels);
    LevelCatalog { n, labels }
}

fn descend(i: usize, budget: u32, m: &mut [u32; RANK], out: &mut Vec<WeightLabel>) {
    if i == RANK {
        if budget == 0 {
            let mut label = WeightLabel::new(*m, 0);
            label.s = delta_shift_doubled(&label);
            out.push(label);
        }
        return;
    }
    let level = FUNDAMENTAL_LEVELS[i];
    for count in (0..=budget / level).rev() {
        m[i] = count;
        descend(i + 1, budget - count * level, m, out);
    }
    m[i] = 0;
}

/// Coefficients of `prod_i 1 / (1 - x^level(Lambda_i))` through `x^max_n`:
/// the class counts per level, computed independently of the catalog.
pub fn genfun_coefficients(max_n: u32) -> Vec<BigUint> {
    let len = max_n as usize + 1;
    let mut coeffs = vec![BigUint::default(); len];
    coeffs[0] = BigUint::one();
    for part in FUNDAMENTAL_LEVELS {
        let part = part as usize;
        for j in part..len {
            let add = coeffs[j - part].clone();
            coeffs[j] += add;
        }
    }
    coeffs
}

/// The initial labels reachable from `label` by adding one straight weight,
/// each tagged with the weight that reaches it. Errors unless `label` is
/// initial.
pub fn successors(label: &WeightLabel) -> Result<Vec<(StraightWeight, WeightLabel)>> {
    if !is_initial(label) {
        return Err(Error::NotInitial(label.to_string()));
    }
    let base = from_label(label);
    let mut out = Vec::new();
    for sw in enumerate_straight() {
        let sum = base + sw.vector;
        if let Ok(target) = to_label(&sum) {
            if is_initial(&target) {
                out.push((sw, target));
            }
        }
    }
    Ok(out)
}

// Straight-weight building blocks for witness paths. Each piece is a short
// sequence whose partial sums stay initial when appended after an initial
// weight with compatible k; pieces are chosen so the k-values of the running
// prefix never change delta-shift branch mid-piece.

fn seg(i: usize, sign: i128) -> StraightWeight {
    let v = RationalVector10::eps0() + RationalVector10::eps(i).scale(rat(sign));
    StraightWeight::classify(v).expect("unit segments are straight")
}

fn half_segment(signs: [i128; 8]) -> StraightWeight {
    let mut coords = [rat(0); 10];
    coords[0] = rat(1);
    coords[1] = crate::rational::half(-1);
    for (slot, sign) in signs.iter().enumerate() {
        coords[2 + slot] = crate::rational::half(*sign);
    }
    StraightWeight::classify(RationalVector10::from_coords(coords))
        .expect("even sign patterns are straight")
}

/// `[+eps_1, ..., +eps_i]`: adds `Lambda_i` (for `i <= 6`),
/// `Lambda_7 + Lambda_8` (`i = 7`) or `Lambda_0 + 2 Lambda_8` (`i = 8`),
/// all with k-contribution zero.
fn ascent(i: usize) -> Vec<StraightWeight> {
    (1..=i).map(|j| seg(j, 1)).collect()
}

/// `[+eps_1, -eps_1]`: adds `Lambda_0`.
fn zero_loop() -> Vec<StraightWeight> {
    vec![seg(1, 1), seg(1, -1)]
}

/// `[+eps_1, ..., +eps_7, -eps_8]`: adds `2 Lambda_7`.
fn double_seven() -> Vec<StraightWeight> {
    let mut out = ascent(7);
    out.push(seg(8, -1));
    out
}

/// `[+eps_1, +eps_2, w]`: adds `Lambda_8 - delta/2`.
fn eight_base() -> Vec<StraightWeight> {
    vec![
        seg(1, 1),
        seg(2, 1),
        half_segment([-1, -1, 1, 1, 1, 1, 1, 1]),
    ]
}

/// `[+eps_1, +eps_2, +eps_3, w]`: adds `Lambda_7 - delta/2`.
fn seven_base() -> Vec<StraightWeight> {
    vec![
        seg(1, 1),
        seg(2, 1),
        seg(3, 1),
        half_segment([-1, -1, -1, 1, 1, 1, 1, -1]),
    ]
}

/// `[+eps_1, ..., +eps_8, w+]`: adds `3 Lambda_8 - delta/2`.
fn triple_eight() -> Vec<StraightWeight> {
    let mut out = ascent(8);
    out.push(half_segment([1; 8]));
    out
}

/// An explicit straight-weight path from the origin to the initial weight of
/// `label`: every partial sum is a dominant initial weight. Errors unless
/// `label` is initial.
///
/// The construction peels the label down to a small base case: fundamental
/// coefficients 1..6 and paired `(M_7, M_8)` units are removed by
/// k-preserving ascents, after which the residue is handled by parity of k:
/// even residues reduce to `Lambda_0` loops, odd ones to a half-depth base
/// piece, and large k to triples of `Lambda_8`.
pub fn witness_path(label: &WeightLabel) -> Result<Vec<StraightWeight>> {
    if !is_initial(label) {
        return Err(Error::NotInitial(label.to_string()));
    }
    let mut m = label.m;
    // Pieces in removal order; the forward path is their reverse.
    let mut pieces_rev: Vec<Vec<StraightWeight>> = Vec::new();
    for i in 1..=6 {
        for _ in 0..m[i] {
            pieces_rev.push(ascent(i));
        }
        m[i] = 0;
    }
    while m[7] > 0 && m[8] > 0 {
        pieces_rev.push(ascent(7));
        m[7] -= 1;
        m[8] -= 1;
    }
    let k = k_of_label(label);
    if k >= 2 {
        // Here m7 = 0 and m8 = k + 2 m0 >= 2: spend m0 on full ascents, then
        // peel triples of Lambda_8 down to a depth-1 base.
        while m[0] > 0 {
            pieces_rev.push(ascent(8));
            m[0] -= 1;
            m[8] -= 2;
        }
        while m[8] >= 3 {
            pieces_rev.push(triple_eight());
            m[8] -= 3;
        }
        match m[8] {
            2 => {
                let mut doubled = eight_base();
                doubled.extend(eight_base());
                pieces_rev.push(doubled);
            }
            1 => pieces_rev.push(eight_base()),
            _ => {}
        }
    } else if k.rem_euclid(2) == 1 {
        // Odd k <= 1: reduce to a single half-depth base piece.
        if m[8] > 0 {
            while m[8] >= 3 {
                pieces_rev.push(ascent(8));
                m[8] -= 2;
                m[0] -= 1;
            }
            debug_assert_eq!(m[8], 1);
            for _ in 0..m[0] {
                pieces_rev.push(zero_loop());
            }
            pieces_rev.push(eight_base());
        } else {
            debug_assert_eq!(m[7] % 2, 1);
            while m[7] >= 3 {
                pieces_rev.push(double_seven());
                m[7] -= 2;
            }
            for _ in 0..m[0] {
                pieces_rev.push(zero_loop());
            }
            pieces_rev.push(seven_base());
        }
    } else {
        // Even k <= 0: everything drains into Lambda_0 loops at depth 0.
        if m[8] > 0 {
            while m[8] >= 2 {
                pieces_rev.push(ascent(8));
                m[8] -= 2;
                m[0] -= 1;
            }
        } else {
            while m[7] >= 2 {
                pieces_rev.push(double_seven());
                m[7] -= 2;
            }
        }
        for _ in 0..m[0] {
            pieces_rev.push(zero_loop());
        }
    }
    let mut out = Vec::new();
    for piece in pieces_rev.into_iter().rev() {
        out.extend(piece);
    }
    Ok(out)
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub lemma: &'static str,
    pub cases: u64,
    pub tallies: BTreeMap<String, u64>,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    fn new(lemma: &'static str) -> Self {
        SweepReport {
            lemma,
            cases: 0,
            tallies: BTreeMap::new(),
            counterexamples: Vec::new(),
        }
    }

    fn tally(&mut self, key: String) {
        *self.tallies.entry(key).or_default() += 1;
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks, for every initial weight of level at most `n_max` and every
/// straight weight, that the difference is an initial weight, lies outside
/// the dominant weights, or sits above depth zero (a raised class, which no
/// tensor power reaches). Dominant differences are also checked against the
/// expected depth drop per straight type.
pub fn verify_subtraction_lemma(n_max: u32) -> SweepReport {
    let mut report = SweepReport::new("subtraction");
    let omega = enumerate_straight();
    for n in 1..=n_max {
        for label in enumerate_level(n).labels {
            let base = from_label(&label);
            for sw in &omega {
                report.cases += 1;
                let diff = base - sw.vector;
                if !is_dominant(&diff) {
                    report.tally(format!("type {}: non-dominant", sw.wtype));
                    continue;
                }
                match to_label(&diff) {
                    Err(_) => {
                        // Pairing-dominant but raised above depth zero:
                        // not a weight of any tensor power.
                        report.tally(format!("type {}: raised", sw.wtype));
                    }
                    Ok(lower) => {
                        let drop = match sw.wtype {
                            WeightType::I => 0i64,
                            WeightType::II => 1,
                            WeightType::III => 2,
                            WeightType::IV => unreachable!("straight weights only"),
                        };
                        if lower.s as i64 != label.s as i64 - drop {
                            report.counterexamples.push(format!(
                                "depth bookkeeping broke at {label} minus {}",
                                sw.vector
                            ));
                        } else if !is_initial(&lower) {
                            report.counterexamples.push(format!(
                                "{label} minus type {} weight {} gives dominant non-initial {lower}",
                                sw.wtype, sw.vector
                            ));
                        } else {
                            report.tally(format!("type {}: initial", sw.wtype));
                        }
                    }
                }
            }
        }
    }
    report
}

/// Checks, for every initial weight of level at most `n_max` and every
/// type IV maximal weight of doubled depth at most `j_max_doubled`, that the
/// sum is never an initial weight, and that the case inequalities bounding
/// the delta shift hold numerically. Also re-checks the k-value bound
/// `k <= 6 j - 6` on every sampled type IV weight.
pub fn verify_addition_lemma(n_max: u32, j_max_doubled: u32) -> SweepReport {
    let mut report = SweepReport::new("addition");
    let quads: Vec<_> = maximal_orbit(j_max_doubled)
        .into_iter()
        .filter(|mw| mw.wtype == WeightType::IV)
        .collect();
    for mw in &quads {
        report.cases += 1;
        let k = crate::grading::k_value(&mw.vector).expect("orbit weights have integral k");
        let j2 = mw.depth_doubled as i64;
        if 2 * k > 6 * j2 - 12 {
            report.counterexamples.push(format!(
                "type IV weight {} at doubled depth {j2} has k = {k}",
                mw.vector
            ));
        } else {
            report.tally("type IV k-bound".to_string());
        }
    }
    for n in 1..=n_max {
        for label in enumerate_level(n).labels {
            let base = from_label(&label);
            let k_lam = k_of_label(&label);
            for mw in &quads {
                report.cases += 1;
                let sum = base + mw.vector;
                if let Ok(target) = to_label(&sum) {
                    if is_initial(&target) {
                        report.counterexamples.push(format!(
                            "{label} plus type IV weight {} gives initial {target}",
                            mw.vector
                        ));
                        continue;
                    }
                }
                let k_w = crate::grading::k_value(&mw.vector).unwrap();
                let k_mu = k_lam + k_w;
                let j2 = mw.depth_doubled as i64;
                let s2 = label.s as i64 + j2;
                let shift2 = delta_doubled_of_k(k_mu) as i64;
                let (case, holds) = if k_mu <= 1 {
                    ("case I", s2 >= 2 && shift2 <= 1)
                } else if k_lam <= 1 {
                    ("case II", 3 * shift2 <= 3 * j2 - 1 && j2 <= s2)
                } else {
                    (
                        "case III",
                        3 * shift2 <= k_lam + 3 * j2 - 2 && k_lam - 2 < 3 * label.s as i64,
                    )
                };
                if holds {
                    report.tally(format!("{case}: shift below depth"));
                } else {
                    report.counterexamples.push(format!(
                        "{case} inequality failed at {label} plus {}",
                        mw.vector
                    ));
                }
            }
        }
    }
    report
}

fn delta_doubled_of_k(k: i64) -> u32 {
    // Same branches as the label-based delta shift.
    if k <= 0 && k % 2 == 0 {
        0
    } else if k <= 1 {
        1
    } else {
        let r = k.rem_euclid(3);
        ((k + 2 * r) / 3) as u32
    }
}

/// Builds the witness path of every initial weight of level at most `n_max`
/// and checks it: one straight weight per level, every partial sum dominant
/// and initial, and the full sum equal to the target.
pub fn verify_witnesses(n_max: u32) -> SweepReport {
    let mut report = SweepReport::new("witness");
    for n in 1..=n_max {
        for label in enumerate_level(n).labels {
            report.cases += 1;
            let path = match witness_path(&label) {
                Ok(p) => p,
                Err(e) => {
                    report
                        .counterexamples
                        .push(format!("{label}: construction failed: {e}"));
                    continue;
                }
            };
            if path.len() != n as usize {
                report
                    .counterexamples
                    .push(format!("{label}: {} steps for level {n}", path.len()));
                continue;
            }
            let mut running = RationalVector10::zero();
            let mut sound = true;
            for (idx, sw) in path.iter().enumerate() {
                running = running + sw.vector;
                match to_label(&running) {
                    Ok(partial) if is_initial(&partial) => {}
                    _ => {
                        report.counterexamples.push(format!(
                            "{label}: prefix {} is not initial",
                            idx + 1
                        ));
                        sound = false;
                        break;
                    }
                }
            }
            if !sound {
                continue;
            }
            if running != from_label(&label) {
                report
                    .counterexamples
                    .push(format!("{label}: path ends elsewhere"));
                continue;
            }
            report.tally("witness sound".to_string());
        }
    }
    report
}

/// Checks the attained k-values on the straight weights (exactly `{0, -2}`,
/// `{3, 1, -1, -3, -5}` and `{2}` by type) and the bound `k <= 6 j - 6` on
/// type IV orbit weights of doubled depth at most `j_max_doubled`.
pub fn verify_kvalues(j_max_doubled: u32) -> SweepReport {
    use std::collections::BTreeSet;
    let mut report = SweepReport::new("kvalues");
    let mut attained: BTreeMap<WeightType, BTreeSet<i64>> = BTreeMap::new();
    for sw in enumerate_straight() {
        report.cases += 1;
        attained.entry(sw.wtype).or_default().insert(straight_k(&sw));
        report.tally(format!("type {}", sw.wtype));
    }
    let expect: [(WeightType, &[i64]); 3] = [
        (WeightType::I, &[0, -2]),
        (WeightType::II, &[3, 1, -1, -3, -5]),
        (WeightType::III, &[2]),
    ];
    for (t, ks) in expect {
        let want: BTreeSet<i64> = ks.iter().copied().collect();
        let got = attained.get(&t).cloned().unwrap_or_default();
        if got != want {
            report
                .counterexamples
                .push(format!("type {t} attains k-values {got:?}, expected {want:?}"));
        }
    }
    for mw in maximal_orbit(j_max_doubled) {
        if mw.wtype != WeightType::IV {
            continue;
        }
        report.cases += 1;
        let k = crate::grading::k_value(&mw.vector).expect("orbit weights have integral k");
        if 2 * k > 6 * mw.depth_doubled as i64 - 12 {
            report.counterexamples.push(format!(
                "type IV weight {} at doubled depth {} has k = {k}",
                mw.vector, mw.depth_doubled
            ));
        } else {
            report.tally("type IV k-bound".to_string());
        }
    }
    report
}
