//! Command-line front end.
//!
//! Every library capability is a subcommand with stable text and JSON
//! renderings, suitable for scripting and golden tests. Text output is
//! line-oriented in canonical (descending lexicographic) order; JSON output
//! wraps a command-specific payload in a fixed envelope carrying the command
//! name, its parameters and a format version, with canonical key order so
//! identical invocations are byte-identical.
//!
//! Exit codes: 0 on success, 1 when a verification sweep reports a
//! counterexample, 2 on usage errors (unparsable labels, out-of-range
//! bounds, malformed cache files).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::decompose::{
    decompose, decompose_with_cache, enumerate_level, genfun_coefficients,
    verify_addition_lemma, verify_kvalues, verify_subtraction_lemma, verify_witnesses,
    witness_path, SweepReport,
};
use crate::error::Result;
use crate::grading::{delta_shift_doubled, k_of_label};
use crate::lattice::{render_doubled, to_label, RationalVector10, WeightLabel};
use crate::paths::{minimal_stratum, tensor_power_truncated};
use crate::straight::{enumerate_straight, straight_k};

/// Envelope version stamped on all JSON output.
pub const FORMAT_VERSION: &str = "e9-cli-v1";

#[derive(Parser)]
#[command(
    name = "e9",
    version,
    about = "Exact decomposition of tensor powers of the basic level-1 module of affine E8"
)]
pub struct Cli {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for per-level decomposition tables (read and written).
    #[arg(long, global = true, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Multiplicity table of the n-th tensor power of the basic module.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// The 200 straight weights with type tags and k-values.
    Straight,
    /// The initial weights of level n (the catalog S(n)).
    Initial {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Delta shift of a weight label.
    Delta {
        #[arg(long)]
        label: String,
    },
    /// k-value of a weight label.
    K {
        #[arg(long)]
        label: String,
    },
    /// Class counts per level from the product generating function.
    Genfun {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// Straight-weight witness path to an initial label.
    Witness {
        #[arg(long)]
        label: String,
    },
    /// Root-operator tensor-power oracle; prints the minimal-depth stratum.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        depth_doubled: u32,
    },
    /// Exhaustive desk-scale check of a supporting lemma.
    Verify {
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_level: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        j_max_doubled: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Subtraction,
    Addition,
    Witness,
    Kvalues,
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    format_version: &'static str,
    parameters: BTreeMap<String, String>,
    payload: Value,
}

fn emit_json(
    out: &mut dyn Write,
    command: &'static str,
    parameters: BTreeMap<String, String>,
    payload: Value,
) -> Result<()> {
    let envelope = Envelope {
        command,
        format_version: FORMAT_VERSION,
        parameters,
        payload,
    };
    let text = serde_json::to_string_pretty(&envelope).expect("envelope serialization");
    writeln!(out, "{text}")?;
    Ok(())
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// Multiplicity table lines in canonical order, one class per line.
fn table_lines(entries: &BTreeMap<WeightLabel, BigUint>) -> Vec<String> {
    entries
        .iter()
        .rev()
        .map(|(label, mult)| format!("{mult} · [{}]", label.pretty()))
        .collect()
}

fn table_payload(entries: &BTreeMap<WeightLabel, BigUint>) -> Value {
    let rows: Vec<Value> = entries
        .iter()
        .rev()
        .map(|(label, mult)| {
            json!({
                "label": label.to_string(),
                "mult": mult.to_string(),
            })
        })
        .collect();
    Value::Array(rows)
}

fn render_report(report: &SweepReport, format: Format, out: &mut dyn Write) -> Result<i32> {
    match format {
        Format::Table => {
            writeln!(out, "lemma: {}", report.lemma)?;
            writeln!(out, "cases: {}", report.cases)?;
            for (key, count) in &report.tallies {
                writeln!(out, "  {key}: {count}")?;
            }
            for cx in &report.counterexamples {
                writeln!(out, "  counterexample: {cx}")?;
            }
            if report.passed() {
                writeln!(out, "OK, 0 counterexamples")?;
            } else {
                writeln!(out, "FAIL, {} counterexamples", report.counterexamples.len())?;
            }
        }
        Format::Json => {
            let payload = json!({
                "lemma": report.lemma,
                "cases": report.cases,
                "tallies": report.tallies,
                "counterexamples": report.counterexamples,
                "passed": report.passed(),
            });
            let mut parameters = params([("lemma", report.lemma.to_string())]);
            parameters.insert("cases".to_string(), report.cases.to_string());
            emit_json(out, "verify", parameters, payload)?;
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

/// Runs one parsed invocation, writing to `out`. Returns the process exit
/// code; errors map to the usage exit code in `main`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Decompose { n } => {
            let table = match &cli.cache_dir {
                Some(dir) => decompose_with_cache(*n, dir)?,
                None => decompose(*n),
            };
            match cli.format {
                Format::Table => {
                    for line in table_lines(&table.entries) {
                        writeln!(out, "{line}")?;
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "format": crate::decompose::TABLE_FORMAT,
                        "n": table.n,
                        "entries": table_payload(&table.entries),
                    });
                    emit_json(out, "decompose", params([("n", n.to_string())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Straight => {
            let omega = enumerate_straight();
            match cli.format {
                Format::Table => {
                    for sw in &omega {
                        writeln!(out, "{} {} {}", sw.wtype, straight_k(sw), sw.vector.render())?;
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = omega
                        .iter()
                        .map(|sw| {
                            json!({
                                "type": sw.wtype.to_string(),
                                "k": straight_k(sw),
                                "vector": sw.vector.render(),
                            })
                        })
                        .collect();
                    let payload = json!({ "count": omega.len(), "weights": rows });
                    emit_json(out, "straight", params([]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Initial { n } => {
            let catalog = enumerate_level(*n);
            match cli.format {
                Format::Table => {
                    for label in &catalog.labels {
                        writeln!(out, "{label}  {}", label.pretty())?;
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = catalog
                        .labels
                        .iter()
                        .map(|label| {
                            json!({
                                "label": label.to_string(),
                                "pretty": label.pretty(),
                            })
                        })
                        .collect();
                    let payload = json!({
                        "n": catalog.n,
                        "count": catalog.labels.len(),
                        "labels": rows,
                    });
                    emit_json(out, "initial", params([("n", n.to_string())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Delta { label } => {
            let parsed: WeightLabel = label.parse()?;
            let doubled = delta_shift_doubled(&parsed);
            match cli.format {
                Format::Table => writeln!(out, "Δ = {}", render_doubled(doubled))?,
                Format::Json => {
                    let payload = json!({
                        "label": parsed.to_string(),
                        "delta": render_doubled(doubled),
                        "delta_doubled": doubled,
                    });
                    emit_json(out, "delta", params([("label", label.clone())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::K { label } => {
            let parsed: WeightLabel = label.parse()?;
            let k = k_of_label(&parsed);
            match cli.format {
                Format::Table => writeln!(out, "k = {k}")?,
                Format::Json => {
                    let payload = json!({ "label": parsed.to_string(), "k": k });
                    emit_json(out, "k", params([("label", label.clone())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Genfun { max_n } => {
            let coeffs = genfun_coefficients(*max_n);
            match cli.format {
                Format::Table => {
                    let line: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
                Format::Json => {
                    let values: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    let payload = json!({ "max_n": max_n, "coefficients": values });
                    emit_json(out, "genfun", params([("max_n", max_n.to_string())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Witness { label } => {
            let parsed: WeightLabel = label.parse()?;
            let path = witness_path(&parsed)?;
            let mut running = RationalVector10::zero();
            let mut rows = Vec::new();
            for sw in &path {
                running = running + sw.vector;
                let partial = to_label(&running).expect("witness prefixes are dominant");
                rows.push((sw, partial));
            }
            match cli.format {
                Format::Table => {
                    for (sw, partial) in &rows {
                        writeln!(out, "{} {} {partial}", sw.wtype, sw.vector.render())?;
                    }
                }
                Format::Json => {
                    let steps: Vec<Value> = rows
                        .iter()
                        .map(|(sw, partial)| {
                            json!({
                                "type": sw.wtype.to_string(),
                                "vector": sw.vector.render(),
                                "partial": partial.to_string(),
                            })
                        })
                        .collect();
                    let payload = json!({
                        "label": parsed.to_string(),
                        "length": path.len(),
                        "steps": steps,
                    });
                    emit_json(out, "witness", params([("label", label.clone())]), payload)?;
                }
            }
            Ok(0)
        }
        Command::Oracle { n, depth_doubled } => {
            let full = tensor_power_truncated(*n, *depth_doubled);
            let minimal = minimal_stratum(&full);
            match cli.format {
                Format::Table => {
                    for line in table_lines(&minimal) {
                        writeln!(out, "{line}")?;
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "n": n,
                        "depth_doubled": depth_doubled,
                        "entries": table_payload(&minimal),
                    });
                    let parameters = params([
                        ("n", n.to_string()),
                        ("depth_doubled", depth_doubled.to_string()),
                    ]);
                    emit_json(out, "oracle", parameters, payload)?;
                }
            }
            Ok(0)
        }
        Command::Verify {
            lemma,
            max_level,
            j_max_doubled,
        } => {
            let report = match lemma {
                Lemma::Subtraction => verify_subtraction_lemma(max_level.unwrap_or(6)),
                Lemma::Addition => {
                    verify_addition_lemma(max_level.unwrap_or(4), j_max_doubled.unwrap_or(4))
                }
                Lemma::Witness => verify_witnesses(max_level.unwrap_or(8)),
                Lemma::Kvalues => verify_kvalues(j_max_doubled.unwrap_or(4)),
            };
            render_report(&report, cli.format, out)
        }
    }
}
