//! Command-line front end: series generation, solving, classification and
//! the verification catalog.
//!
//! Exit codes: `0` pass, `1` a check evaluated to false, `2` usage or
//! precondition error.

pub mod cache;
pub mod catalog;
pub mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::frobenius::{r_of_k, solve};
use crate::modular::{named, SeriesName};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::series::format::{log_to_text, to_text};

pub use self::cache::DiskCache;
pub use self::catalog::{descriptor, run_check, CheckDescriptor, CheckKind, CheckParams, CheckReport, CATALOG};
pub use self::config::Config;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "qmodular", version, about = "Exact q-series workbench for modular differential equations")]
struct Cli {
    /// Integer-q rows to compute.
    #[arg(long, global = true)]
    order: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Absolute tolerance of numeric checks.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Working precision of numeric checks, in decimal digits.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Fixed number of series rows for numeric checks (default: adaptive).
    #[arg(long, global = true)]
    terms: Option<usize>,
    /// Neither read nor write the series cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Include numeric checks in `verify all`.
    #[arg(long, global = true)]
    numeric: bool,
    /// Config file (default: $QMODULAR_CONFIG, then ~/.config/qmodular/config.toml).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named series: E2, E4, eta, eta_pow:w or t.
    Series { name: String },
    /// Frobenius basis of the normal form for r = (k+1)/6.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        json: bool,
    },
    /// Modularity class of the solutions for parameter k.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a named check, or `all`.
    Verify {
        check: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long)]
        r: Option<String>,
        /// Corrupt the first solution before checking (control path).
        #[arg(long)]
        perturb: bool,
    },
    /// List the verification catalog.
    Checks,
}

/// Runs the CLI with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = Config::load(cli.config.as_deref())?;
    let order = cli.order.unwrap_or(cfg.order);
    if order == 0 {
        return Err(Error::OutOfRange("order must be at least 1".into()));
    }
    match &cli.command {
        Command::Series { name } => {
            let name = SeriesName::parse(name)?;
            let json = series_json(&name, order, cli.no_cache, &cfg)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => writeln!(out, "{json}")?,
                Format::Text => {
                    let s: crate::series::PuiseuxSeries = serde_json::from_str(&json)?;
                    writeln!(out, "{}", to_text(&s))?
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Solve { k, json } => {
            let k = parse_k(k)?;
            let r = r_of_k(&k);
            let b = solve(&r, order)?;
            match pick(cli.format, *json) {
                Format::Json => {
                    let v = json!({
                        "k": format_rat(&k),
                        "r": format_rat(&r),
                        "c": format_rat(&b.c),
                        "order": order,
                        "y1": b.y1,
                        "y2": b.y2,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?
                }
                Format::Text => {
                    writeln!(out, "k = {}\nr = {}\nc = {}", format_rat(&k), format_rat(&r), format_rat(&b.c))?;
                    writeln!(out, "y1 = {}\ny2 = {}", to_text(&b.y1), log_to_text(&b.y2))?
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Classify { k, json } => {
            let k = parse_k(k)?;
            let c = classify(&k)?;
            match pick(cli.format, *json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&c.to_json())?)?,
                Format::Text => {
                    let level = c.level.map(|m| format!(", level {m}")).unwrap_or_default();
                    writeln!(out, "k = {}: {:?} (r = {}{level})", format_rat(&k), c.tag, format_rat(&c.r))?
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { check, k, r, perturb } => {
            let params = CheckParams {
                order,
                k: k.as_deref().map(parse_k).transpose()?,
                r: r.as_deref().map(parse_rat).transpose()?,
                tolerance: cli.tolerance.unwrap_or(cfg.tolerance),
                precision: cli.precision.unwrap_or(cfg.precision),
                terms: cli.terms,
                perturb: *perturb,
            };
            verify(cli, check, &params, out)
        }
        Command::Checks => {
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(CATALOG)?)?,
                Format::Text => {
                    for d in CATALOG {
                        let kind = match d.kind {
                            CheckKind::Exact => "exact",
                            CheckKind::Numeric => "numeric",
                        };
                        writeln!(out, "{:<20} {:<8} {}", d.name, kind, d.summary)?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

fn pick(format: Option<Format>, json: bool) -> Format {
    if json {
        Format::Json
    } else {
        format.unwrap_or(Format::Text)
    }
}

fn parse_k(s: &str) -> Result<Rat> {
    parse_rat(s).map_err(|e| Error::Parse(format!("--k {s}: {e}")))
}

/// Compact JSON of a named series, through the disk cache unless disabled.
pub fn series_json(name: &SeriesName, order: usize, no_cache: bool, cfg: &Config) -> Result<String> {
    let dir = if no_cache { None } else { cfg.resolved_cache_dir() };
    match dir {
        Some(dir) => DiskCache::new(dir).get_or_compute(name, order),
        None => Ok(serde_json::to_string(&*named(name, order).series)?),
    }
}

fn verify(cli: &Cli, check: &str, params: &CheckParams, out: &mut dyn Write) -> Result<i32> {
    let names: Vec<&str> = if check == "all" {
        CATALOG
            .iter()
            .filter(|d| cli.numeric || d.kind == CheckKind::Exact)
            .map(|d| d.name)
            .collect()
    } else {
        let d = descriptor(check).ok_or_else(|| Error::OutOfRange(format!("unknown check `{check}`")))?;
        vec![d.name]
    };
    let numeric_flag = cli.tolerance.is_some() || cli.precision.is_some() || cli.terms.is_some();
    let any_numeric = names.iter().any(|n| descriptor(n).is_some_and(|d| d.kind == CheckKind::Numeric));
    if numeric_flag && !any_numeric {
        return Err(Error::OutOfRange(
            "exact checks take no tolerance, precision or terms".into(),
        ));
    }
    let mut reports = Vec::with_capacity(names.len());
    for name in &names {
        reports.push(run_check(name, params)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let v: Value = if check == "all" {
                json!({ "check": "all", "order": params.order, "pass": pass, "results": reports })
            } else {
                let mut v = serde_json::to_value(&reports[0])?;
                v["order"] = json!(params.order);
                v
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{} {}", if r.pass { "PASS" } else { "FAIL" }, r.check)?;
            }
        }
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}
