//! Command-line front end.
//!
//! Exit codes: `0` success, `1` the result contradicts the listed families
//! (or a check came out false), `2` invalid arguments, `3` guard exceeded.
//! Output is deterministic for a given argument list; the worker count
//! never appears in it.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::equations::{satisfies, EquationId, Triple};
use crate::error::Error;
use crate::exactpow::{Guard, DEFAULT_GUARD_BITS};
use crate::families::classify;
use crate::oracle::{
    check_lemma1, enumerate_pair_solutions, enumerate_solutions, search_eq5_open, verify_result2,
    verify_theorem, SearchConfig,
};
use crate::rationals::{is_proper_rational, rational_solution, verify_rational_solution};

/// Environment variable holding the guard limit in bits.
pub const GUARD_ENV: &str = "EXPDIO_GUARD_BITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "expdio",
    version,
    about = "Exact checks for five exponential Diophantine equations"
)]
struct Cli {
    /// Worker threads for box scans (output is identical for any value).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    workers: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every solution inside [1..bound]^3 (or [1..bound]^2 for key2).
    Enumerate {
        #[arg(long, value_parser = parse_eq)]
        eq: EquationId,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare the brute-force solutions with the listed families.
    Verify {
        #[arg(long, value_parser = parse_eq)]
        eq: EquationId,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Report which families contain a triple and whether it is a solution.
    Classify {
        #[arg(long, value_parser = parse_eq)]
        eq: EquationId,
        #[arg(long, value_parser = parse_triple)]
        triple: Triple,
    },
    /// Check the growth inequalities b^(n-1) > n, 2^(n-1) > n, c^n > n.
    Lemma {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(3..))]
        max_n: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(3..))]
        max_base: u64,
    },
    /// Rational solutions ((n+1)/n)^n, ((n+1)/n)^(n+1) of x^y = y^x.
    Rational {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Search E5 for solutions with pairwise distinct coordinates >= 2.
    SearchOpen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn parse_eq(s: &str) -> Result<EquationId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// One JSON document per invocation.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub params: BTreeMap<&'static str, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Value>,
    #[serde(flatten)]
    pub details: BTreeMap<&'static str, Value>,
    pub version: &'static str,
}

impl OutputRecord {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            params: BTreeMap::new(),
            verified: None,
            missing: None,
            extra: None,
            solutions: None,
            details: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    fn param(mut self, key: &'static str, value: impl Serialize) -> Self {
        self.params.insert(key, json!(value));
        self
    }

    fn detail(mut self, key: &'static str, value: impl Serialize) -> Self {
        self.details.insert(key, json!(value));
        self
    }
}

enum Rendered {
    Json(OutputRecord),
    Csv {
        header: Vec<&'static str>,
        rows: Vec<Vec<String>>,
    },
}

/// Reads the guard limit from `EXPDIO_GUARD_BITS`-style input.
pub fn parse_guard(value: Option<&str>) -> Result<Guard, Error> {
    match value {
        None => Ok(Guard::new(DEFAULT_GUARD_BITS)),
        Some(v) => match v.trim().parse::<u64>() {
            Ok(bits) if bits > 0 => Ok(Guard::new(bits)),
            _ => Err(Error::InvalidArgument(format!(
                "{GUARD_ENV} must be a positive integer, got `{v}`"
            ))),
        },
    }
}

/// Entry point used by the binary: reads the guard from the environment.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let env_value = std::env::var(GUARD_ENV).ok();
    let guard = match parse_guard(env_value.as_deref()) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    run(std::env::args_os(), guard, &mut out, &mut err)
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, guard: Guard, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut cfg = SearchConfig::default().with_guard(guard);
    if let Some(w) = cli.workers {
        cfg = cfg.with_workers(w as usize);
    }

    let (rendered, code) = match execute(cli.command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::ExponentTooLarge { .. } => EXIT_GUARD,
                _ => EXIT_USAGE,
            };
        }
    };
    if let Err(e) = emit(&rendered, out) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn emit(rendered: &Rendered, out: &mut dyn Write) -> std::io::Result<()> {
    match rendered {
        Rendered::Json(record) => {
            serde_json::to_writer_pretty(&mut *out, record)?;
            writeln!(out)
        }
        Rendered::Csv { header, rows } => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(header)?;
            for row in rows {
                w.write_record(row)?;
            }
            w.flush()
        }
    }
}

fn triple_rows(triples: &[Triple]) -> Vec<Vec<String>> {
    triples
        .iter()
        .map(|t| t.as_array().iter().map(u64::to_string).collect())
        .collect()
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

fn execute(command: Command, cfg: &SearchConfig) -> Result<(Rendered, i32), Error> {
    match command {
        Command::Enumerate { eq, bound, format } => {
            if eq == EquationId::Key2 {
                let pairs = enumerate_pair_solutions(bound, cfg)?;
                let rendered = match format {
                    Format::Csv => Rendered::Csv {
                        header: vec!["x", "y"],
                        rows: pairs
                            .iter()
                            .map(|(x, y)| vec![x.to_string(), y.to_string()])
                            .collect(),
                    },
                    Format::Json => Rendered::Json(
                        OutputRecord {
                            solutions: Some(json!(pairs)),
                            ..OutputRecord::new("enumerate")
                        }
                        .param("eq", eq)
                        .param("bound", bound)
                        .detail("count", pairs.len()),
                    ),
                };
                return Ok((rendered, EXIT_OK));
            }
            let sols = enumerate_solutions(eq, bound, cfg)?;
            let rendered = match format {
                Format::Csv => Rendered::Csv {
                    header: vec!["x", "y", "z"],
                    rows: triple_rows(&sols),
                },
                Format::Json => Rendered::Json(
                    OutputRecord {
                        solutions: Some(json!(sols)),
                        ..OutputRecord::new("enumerate")
                    }
                    .param("eq", eq)
                    .param("bound", bound)
                    .detail("count", sols.len()),
                ),
            };
            Ok((rendered, EXIT_OK))
        }
        Command::Verify { eq, bound } => {
            if eq == EquationId::Key2 {
                let r = verify_result2(bound, cfg)?;
                let record = OutputRecord {
                    verified: Some(r.verified),
                    missing: Some(json!(r.missing)),
                    extra: Some(json!(r.extra)),
                    ..OutputRecord::new("verify")
                }
                .param("eq", eq)
                .param("bound", bound)
                .detail("claim", "characterization")
                .detail("oracle_count", r.oracle_count)
                .detail("family_count", r.family_count);
                return Ok((Rendered::Json(record), status(r.verified)));
            }
            let r = verify_theorem(eq, bound, cfg)?;
            let record = OutputRecord {
                verified: Some(r.verified),
                missing: Some(json!(r.missing)),
                extra: Some(json!(r.extra)),
                ..OutputRecord::new("verify")
            }
            .param("eq", eq)
            .param("bound", bound)
            .detail("claim", r.claim)
            .detail("containment", r.containment_holds())
            .detail("oracle_count", r.oracle_count)
            .detail("family_count", r.family_count);
            Ok((Rendered::Json(record), status(r.passes())))
        }
        Command::Classify { eq, triple } => {
            if eq == EquationId::Key2 {
                return Err(Error::PairEquation);
            }
            let families = classify(eq, triple);
            let solves = satisfies(eq, triple, &cfg.guard)?;
            let record = OutputRecord::new("classify")
                .param("eq", eq)
                .param("triple", triple)
                .detail("families", families)
                .detail("satisfies", solves);
            Ok((Rendered::Json(record), EXIT_OK))
        }
        Command::Lemma { max_n, max_base } => {
            let ok = check_lemma1(max_n, max_base, &cfg.guard)?;
            let record = OutputRecord {
                verified: Some(ok),
                ..OutputRecord::new("lemma")
            }
            .param("max_n", max_n)
            .param("max_base", max_base);
            Ok((Rendered::Json(record), status(ok)))
        }
        Command::Rational { n_max } => {
            let mut rows = Vec::new();
            let mut all_ok = true;
            for n in 1..=n_max {
                let s = rational_solution::<BigUint>(n, &cfg.guard)?;
                let ok = verify_rational_solution(&s);
                all_ok &= ok;
                rows.push(json!({
                    "n": n,
                    "x": s.x().to_string(),
                    "y": s.y().to_string(),
                    "verified": ok,
                    "x_proper": is_proper_rational(s.x()),
                    "y_proper": is_proper_rational(s.y()),
                }));
            }
            let record = OutputRecord {
                verified: Some(all_ok),
                solutions: Some(Value::Array(rows)),
                ..OutputRecord::new("rational")
            }
            .param("n_max", n_max);
            Ok((Rendered::Json(record), status(all_ok)))
        }
        Command::SearchOpen { bound, format } => {
            let report = search_eq5_open(bound, cfg)?;
            let rendered = match format {
                Format::Csv => Rendered::Csv {
                    header: vec!["x", "y", "z"],
                    rows: triple_rows(&report.hits),
                },
                Format::Json => Rendered::Json(
                    OutputRecord {
                        solutions: Some(json!(report.hits)),
                        ..OutputRecord::new("search-open")
                    }
                    .param("eq", EquationId::E5)
                    .param("bound", bound)
                    .detail("hit_count", report.hits.len()),
                ),
            };
            Ok((rendered, EXIT_OK))
        }
    }
}
