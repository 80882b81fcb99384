use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use ordspec::atlasdb::{Database, FilterQuery, EMBEDDED};
use ordspec::groups::{j4_spectrum, psl2_spectrum, SemidirectSpec};
use ordspec::verify::{self, Status};
use ordspec::{OrderSet, PrimeGraph};
use serde::Serialize;

/// Exit status for failed checks and computations.
const FAILURE: u8 = 1;
/// Exit status for malformed input, matching clap's own usage errors.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "ordspec", version, about = "Element-order spectra of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a spectrum: maximal elements, size, primes, sigma
    Spectrum {
        /// Comma-separated generators or a group name
        spec: String,
    },
    /// Spectrum of a direct product
    Product { a: String, b: String },
    /// Spectrum of the wreath product with C2
    Wreath2 { spec: String },
    /// Prime graph of a spectrum
    Gk {
        #[command(flatten)]
        source: Source,
        /// Print Graphviz DOT instead of an edge list
        #[arg(long)]
        dot: bool,
    },
    /// Maximum cocliques of the prime graph
    Coclique {
        #[command(flatten)]
        source: Source,
    },
    /// Group record database
    Db {
        #[command(subcommand)]
        command: DbCommand,
    },
    /// Run reproducible checks
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Args)]
struct Source {
    /// Group name or comma-separated generators
    #[arg(long, default_value = "J4")]
    group: String,
}

#[derive(Subcommand)]
enum DbCommand {
    /// Filter simple sections of J4 without elements of order 9 or 25
    Query {
        /// 8: at least two of 11,23,29,31,37,43; 9: at least two of 5,23,29,37,43
        #[arg(long, value_parser = clap::value_parser!(u8).range(8..=9))]
        lemma: u8,
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Compare every record against the enumeration oracle where one exists
    Check {
        #[arg(long)]
        db: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run every check and print a report
    Paper {
        /// Run only checks with this id or id prefix
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
        /// Include the current Unix time in the report
        #[arg(long)]
        timestamp: bool,
        #[arg(long)]
        db: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Check(String),
    /// A complete report with at least one failed check.
    Report(String),
}

#[derive(Serialize)]
struct Stamped<'a> {
    timestamp: u64,
    checks: &'a verify::VerificationReport,
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn check(e: impl ToString) -> Failure {
    Failure::Check(e.to_string())
}

/// Accepts `J4`, `J4xJ4`, `J4wr2`, `remark`, `L2(q)` for `q <= 64`, or a
/// comma-separated list of positive integers.
fn resolve(spec: &str) -> Result<OrderSet, Failure> {
    match spec {
        "J4" => return Ok(j4_spectrum()),
        "J4xJ4" => return j4_spectrum().product(&j4_spectrum()).map_err(check),
        "J4wr2" => return j4_spectrum().wreath2().map_err(check),
        "remark" => {
            return SemidirectSpec::remark_group()
                .and_then(|s| s.spectrum())
                .map_err(check)
        }
        _ => {}
    }
    if let Some(q) = spec.strip_prefix("L2(").and_then(|r| r.strip_suffix(')')) {
        let q: u64 = q.parse().map_err(|_| usage(format!("bad field size in {spec}")))?;
        return psl2_spectrum(q).map(|r| r.spectrum).map_err(usage);
    }
    spec.parse::<OrderSet>()
        .map_err(|e| usage(format!("{spec}: {e}")))
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn summary(s: &OrderSet) -> String {
    format!(
        "maximal: {}\nmembers: {}\npi: {}\nsigma: {}\n",
        s,
        s.len(),
        join(&s.pi()),
        s.sigma()
    )
}

fn load_db(path: &Option<PathBuf>) -> Result<Database, Failure> {
    let text = read_db(path)?;
    Database::parse(&text).map_err(check)
}

fn read_db(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        None => Ok(EMBEDDED.to_string()),
        Some(p) => std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spectrum { spec } => Ok(summary(&resolve(&spec)?)),
        Command::Product { a, b } => {
            let s = resolve(&a)?.product(&resolve(&b)?).map_err(check)?;
            Ok(summary(&s))
        }
        Command::Wreath2 { spec } => Ok(summary(&resolve(&spec)?.wreath2().map_err(check)?)),
        Command::Gk { source, dot } => {
            let g = PrimeGraph::from_spectrum(&resolve(&source.group)?);
            if dot {
                return Ok(g.to_dot());
            }
            let mut out = format!("vertices: {}\n", join(g.vertices()));
            for (a, b) in g.edges() {
                out.push_str(&format!("{a} -- {b}\n"));
            }
            Ok(out)
        }
        Command::Coclique { source } => {
            let g = PrimeGraph::from_spectrum(&resolve(&source.group)?);
            let mut out = format!("independence number: {}\n", g.independence_number());
            for c in g.max_cocliques() {
                out.push_str(&format!("{}\n", join(&c)));
            }
            Ok(out)
        }
        Command::Db { command } => match command {
            DbCommand::Query { lemma, db } => {
                let db = load_db(&db)?;
                let query = match lemma {
                    8 => FilterQuery::large_primes(),
                    _ => FilterQuery::five_and_large_primes(),
                };
                let hits = db.run_filter(&query).map_err(check)?;
                Ok(hits
                    .iter()
                    .map(|h| format!("{}: {}\n", h.name, join(&h.hits)))
                    .collect())
            }
            DbCommand::Check { db } => {
                let db = load_db(&db)?;
                let mut out = String::new();
                for r in &db.records {
                    match ordspec::atlasdb::crosscheck_record(r).map_err(check)? {
                        ordspec::atlasdb::Crosscheck::Verified(d) => {
                            out.push_str(&format!("{}: verified, {d}\n", r.name))
                        }
                        ordspec::atlasdb::Crosscheck::Unverified => out.push_str(&format!(
                            "{}: consistent; cited data, not independently verified\n",
                            r.name
                        )),
                    }
                }
                Ok(out)
            }
        },
        Command::Verify {
            command:
                VerifyCommand::Paper {
                    only,
                    json,
                    timestamp,
                    db,
                },
        } => {
            if let Some(f) = &only {
                if !verify::is_known_filter(f) {
                    return Err(usage(format!(
                        "unknown check `{f}`; known: {}",
                        verify::check_ids().join(", ")
                    )));
                }
            }
            let text = read_db(&db)?;
            let report = verify::run(&text, only.as_deref());
            let now = timestamp.then(|| {
                SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map_or(0, |d| d.as_secs())
            });
            let out = if json {
                let body = match now {
                    Some(timestamp) => serde_json::to_string_pretty(&Stamped {
                        timestamp,
                        checks: &report,
                    }),
                    None => serde_json::to_string_pretty(&report),
                };
                body.expect("report serializes") + "\n"
            } else {
                let mut s = now.map_or(String::new(), |t| format!("timestamp: {t}\n"));
                s.push_str(&report.to_text());
                s
            };
            if report.overall() == Status::Fail {
                return Err(Failure::Report(out));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(FAILURE)
        }
        Err(Failure::Report(out)) => {
            print!("{out}");
            ExitCode::from(FAILURE)
        }
    }
}
