//! The `hermspec` command line.
//!
//! Every subcommand reads or writes the `.mg` text format. Output is plain
//! text unless `--json` is given (`classify` always prints JSON). Exit codes:
//! 0 on success, 1 when a check fails, 2 on usage, input or scope errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::json;

use crate::classify::{classify_components, classify_with_bound, Outcome, Verdict};
use crate::families::{family_representative, FamilySpec, MemberSigns};
use crate::graph::MixedGraph;
use crate::spectra::{charpoly_leverrier, charpoly_sachs, eigenvalues, RadiusRelation};
use crate::structure::{classify_cycle, enumerate_cycles};
use crate::verify::{run_verification, EnumerationScope, OrientationMode, HARD_MAX_N};

/// Largest `--max-n` accepted without `HERMSPEC_MAX_N`.
pub const DEFAULT_MAX_N: usize = 7;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hermspec",
    version,
    about = "Hermitian spectra of mixed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues and spectral radius.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial.
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Leverrier)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Family membership for spectral radius at most 2 (or exactly 2 with
    /// `--eq2`), as JSON.
    Classify {
        file: PathBuf,
        /// Bound for the exact radius comparison, an integer or a fraction.
        #[arg(long, default_value = "2", value_parser = parse_bound)]
        exact_bound: BigRational,
        #[arg(long)]
        eq2: bool,
        /// Classify each connected component separately.
        #[arg(long)]
        per_component: bool,
    },
    /// Named graph families.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Simple cycles with their signs.
    Cycles {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive checks over all small connected mixed graphs.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Write the JSON report here.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long)]
        c4free_only: bool,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyAction {
    /// Print the least orientation of a family template with the given
    /// cycle signs.
    Gen {
        spec: String,
        #[arg(long, default_value = "plus")]
        signs: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sachs,
    Leverrier,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Every orientation.
    All,
    /// One orientation per cycle-sign vector.
    Signs,
}

fn parse_bound(s: &str) -> Result<BigRational, String> {
    let x: BigRational = s
        .parse()
        .map_err(|_| format!("expected an integer or fraction, got {s:?}"))?;
    if !x.is_positive() {
        return Err("the bound must be positive".into());
    }
    Ok(x)
}

/// Error that ends a command with a given exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Formats `x` with 12 significant digits, without trailing zeros.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// `--max-n` limit: `HERMSPEC_MAX_N` when set, else [`DEFAULT_MAX_N`], never
/// above [`HARD_MAX_N`].
pub fn max_n_limit() -> Result<usize, String> {
    match std::env::var("HERMSPEC_MAX_N") {
        Ok(v) => {
            let k: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("HERMSPEC_MAX_N must be a number, got {v:?}"))?;
            Ok(k.min(HARD_MAX_N))
        }
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn read_graph(path: &Path) -> Result<MixedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize")
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| usage(format!("write failed: {e}"));
    match command {
        Command::Spectrum { file, json } => {
            let g = read_graph(&file)?;
            let ev = eigenvalues(&g);
            let rho = ev.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
            if json {
                let value = json!({ "n": g.n(), "eigenvalues": ev, "spectral_radius": rho });
                writeln!(out, "{}", to_json(&value)).map_err(io)?;
            } else {
                // rounding noise around a zero eigenvalue prints as 0
                let list: Vec<String> = ev
                    .iter()
                    .map(|&x| format_significant(if x.abs() < 1e-12 { 0.0 } else { x }))
                    .collect();
                writeln!(out, "eigenvalues: {}", list.join(" ")).map_err(io)?;
                writeln!(out, "spectral radius: {}", format_significant(rho)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Charpoly { file, method, json } => {
            let g = read_graph(&file)?;
            let poly = match method {
                Method::Sachs => charpoly_sachs(&g),
                Method::Leverrier => charpoly_leverrier(&g),
                Method::Both => {
                    let a = charpoly_leverrier(&g);
                    let b = charpoly_sachs(&g);
                    if a != b {
                        writeln!(out, "leverrier: {a}\nsachs: {b}").map_err(io)?;
                        return Err(Failure {
                            code: EXIT_CHECK_FAILED,
                            message: "the two methods disagree".into(),
                        });
                    }
                    a
                }
            };
            if json {
                let value = json!({
                    "polynomial": poly.to_string(),
                    "ascending": poly.ascending().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "both_methods": method == Method::Both,
                });
                writeln!(out, "{}", to_json(&value)).map_err(io)?;
            } else {
                writeln!(out, "{poly}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify {
            file,
            exact_bound,
            eq2,
            per_component,
        } => {
            let g = read_graph(&file)?;
            let check_two = exact_bound == crate::spectra::two();
            if per_component {
                let verdicts = classify_components(&g, eq2, &exact_bound);
                writeln!(out, "{}", to_json(&verdicts)).map_err(io)?;
                let consistent = verdicts
                    .components
                    .iter()
                    .all(|c| !check_two || consistent(&c.verdict, eq2));
                return Ok(if consistent {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                });
            }
            let verdict = classify_with_bound(&g, eq2, &exact_bound);
            writeln!(out, "{}", to_json(&verdict)).map_err(io)?;
            Ok(if !check_two || consistent(&verdict, eq2) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Family {
            action: FamilyAction::Gen { spec, signs },
        } => {
            let spec: FamilySpec = spec.parse().map_err(|e| usage(format!("{e}")))?;
            let signs: MemberSigns = signs.parse().map_err(|e| usage(format!("{e}")))?;
            let g = family_representative(&spec, signs).map_err(|e| usage(format!("{e}")))?;
            write!(out, "{g}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Cycles { file, json } => {
            let g = read_graph(&file)?;
            let rows: Vec<_> = enumerate_cycles(&g)
                .into_iter()
                .map(|c| {
                    let sign = classify_cycle(&g, &c).expect("enumerated cycles lie in the graph");
                    (c, sign)
                })
                .collect();
            if json {
                let value: Vec<_> = rows
                    .iter()
                    .map(|(c, sign)| {
                        json!({
                            "vertices": c.vertices(),
                            "length": c.len(),
                            "sign": sign,
                            "class": sign.class(),
                        })
                    })
                    .collect();
                writeln!(out, "{}", to_json(&value)).map_err(io)?;
            } else {
                for (c, sign) in &rows {
                    writeln!(out, "{c}\t{sign:?}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_n,
            json,
            c4free_only,
            mode,
        } => {
            let limit = max_n_limit().map_err(usage)?;
            let mut scope = EnumerationScope::new(max_n);
            scope.c4free_only = c4free_only;
            scope.orientation_mode = match mode {
                Mode::All => OrientationMode::All,
                Mode::Signs => OrientationMode::OnePerSignVector,
            };
            scope.check(limit).map_err(|e| usage(e.to_string()))?;
            let report = run_verification(&scope).map_err(|e| usage(e.to_string()))?;
            if let Some(path) = json {
                std::fs::write(&path, to_json(&report))
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            for record in &report.checks {
                let status = if record.pass { "pass" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {} [{}]: {}",
                    record.check, record.instance, record.observed
                )
                .map_err(io)?;
            }
            let s = &report.summary;
            writeln!(
                out,
                "{} checks, {} passed, {} failed in {:.1}s",
                s.total, s.passed, s.failed, report.elapsed_seconds
            )
            .map_err(io)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

/// An in-scope verdict agrees with its own exact radius comparison against 2.
fn consistent(verdict: &Verdict, eq2: bool) -> bool {
    let Some(cmp) = &verdict.crosscheck else {
        return true;
    };
    let expected = if eq2 {
        cmp.relation == RadiusRelation::Exactly
    } else {
        cmp.relation != RadiusRelation::Above
    };
    match verdict.outcome {
        Outcome::OutOfScope { .. } => true,
        _ => verdict.outcome.is_in_list() == expected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(2f64.sqrt()), "1.41421356237");
        assert_eq!(format_significant(-2.0), "-2");
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(-1e-17), "-0.00000000000000001");
        assert_eq!(format_significant(123.456), "123.456");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["hermspec", "bogus"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(
            run(["hermspec", "family", "gen", "Q7"], &mut out, &mut err),
            EXIT_USAGE
        );
    }

    #[test]
    fn family_gen_prints_mg() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            ["hermspec", "family", "gen", "C3", "--signs", "minus"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_OK);
        let g: MixedGraph = String::from_utf8(out).unwrap().parse().unwrap();
        assert_eq!(g.n(), 3);
    }
}
