//! Command-line front end.
//!
//! Semigroups are written as comma-separated generator lists (`3,5`), the
//! same syntax every command prints, so output can be pasted back in.
//! Exit codes: 0 on success, 1 when a verification check fails or a runtime
//! error occurs, 2 on usage errors.

use crate::census::{self, CensusFormat};
use crate::error::Error;
use crate::lipman::{lipman_chain, maximal_ideal};
use crate::semigroup::{ArfMethod, NumericalSemigroup};
use crate::verify::{self, CheckStatus, IdealFilter, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "arfkit",
    version,
    about = "Numerical semigroups, relative ideals and the Arf blow-up calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, Arf status, blow-up chain and End of the maximal ideal
    Info { generators: String },
    /// Arf test along one route or all three
    Arf {
        generators: String,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Smallest Arf semigroup containing the input
    Closure { generators: String },
    /// Chain of iterated blow-ups of maximal ideals
    Chain { generators: String },
    /// Enumerate the normalized relative ideals
    Ideals {
        generators: String,
        #[arg(long)]
        reflexive: bool,
        #[arg(long = "self-dual")]
        self_dual: bool,
    },
    /// Run the verification checks and print a JSON report
    Verify {
        generators: String,
        /// Run every check (the default when no check is selected)
        #[arg(long)]
        all: bool,
        #[arg(long = "theorem-a")]
        theorem_a: bool,
        #[arg(long = "theorem-b")]
        theorem_b: bool,
        #[arg(long)]
        stablechar: bool,
        #[arg(long)]
        descent: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Census of every semigroup up to a genus bound
    Census {
        #[arg(long = "max-genus")]
        max_genus: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Lipman,
    Pattern,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Parses and runs a full argument vector (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for_error(&e)
        }
    }
}

/// Usage-shaped problems (bad generator lists, out-of-range bounds) exit
/// with 2; runtime failures with 1.
fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::EmptyGenerators
        | Error::InvalidGenerator(_)
        | Error::GeneratorSyntax(_)
        | Error::NotCofinite { .. }
        | Error::GenusTooLarge { .. }
        | Error::BoundTooLarge { .. } => 2,
        _ => 1,
    }
}

/// Exit code implied by a set of verification statuses: 1 when any check
/// failed, 0 otherwise.
pub fn exit_code_for_statuses(statuses: &[CheckStatus]) -> i32 {
    if statuses.contains(&CheckStatus::Fail) {
        1
    } else {
        0
    }
}

fn parse_generators(text: &str) -> crate::error::Result<NumericalSemigroup> {
    let mut gens = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let value: i64 = part
            .parse()
            .map_err(|_| Error::GeneratorSyntax(text.to_string()))?;
        gens.push(value);
    }
    NumericalSemigroup::from_generators(&gens)
}

fn dispatch(cli: Cli) -> crate::error::Result<i32> {
    match cli.command {
        Command::Info { generators } => {
            let s = parse_generators(&generators)?;
            print_info(&s);
            Ok(0)
        }
        Command::Arf { generators, method } => {
            let s = parse_generators(&generators)?;
            match method {
                MethodArg::Definition => {
                    println!("definition: {}", s.is_arf(ArfMethod::Definition))
                }
                MethodArg::Lipman => println!("lipman: {}", s.is_arf(ArfMethod::Lipman)),
                MethodArg::Pattern => println!("pattern: {}", s.is_arf(ArfMethod::Pattern)),
                MethodArg::All => {
                    println!("definition: {}", s.is_arf(ArfMethod::Definition));
                    println!("lipman: {}", s.is_arf(ArfMethod::Lipman));
                    println!("pattern: {}", s.is_arf(ArfMethod::Pattern));
                    println!("arf: {}", s.is_arf_all());
                }
            }
            Ok(0)
        }
        Command::Closure { generators } => {
            let s = parse_generators(&generators)?;
            println!("{}", s.arf_closure());
            Ok(0)
        }
        Command::Chain { generators } => {
            let s = parse_generators(&generators)?;
            let chain = lipman_chain(&s);
            println!("{}", format_chain(&chain));
            println!(
                "multiplicity_sequence: {}",
                join_i64(chain.multiplicity_sequence())
            );
            Ok(0)
        }
        Command::Ideals {
            generators,
            reflexive,
            self_dual,
        } => {
            let s = parse_generators(&generators)?;
            let filter = if reflexive {
                IdealFilter::Reflexive
            } else if self_dual {
                IdealFilter::SelfDual
            } else {
                IdealFilter::All
            };
            let mut ideals = verify::enumerate_normalized_ideals(&s, filter)?;
            if reflexive && self_dual {
                ideals.retain(|e| e.is_self_dual());
            }
            println!("count: {}", ideals.len());
            for e in &ideals {
                let w = verify::ideal_json(e);
                println!(
                    "offset={} window={} members={}",
                    w["offset"],
                    w["window"].as_str().unwrap(),
                    e
                );
            }
            Ok(0)
        }
        Command::Verify {
            generators,
            all,
            theorem_a,
            theorem_b,
            stablechar,
            descent,
            trace,
        } => {
            let s = parse_generators(&generators)?;
            let none_selected = !(theorem_a || theorem_b || stablechar || descent || trace);
            let run_all = all || none_selected;
            let mut reports: Vec<VerificationReport> = Vec::new();
            if run_all || theorem_a {
                reports.push(verify::verify_theorem_a(&s)?);
            }
            if run_all || theorem_b {
                reports.push(verify::verify_theorem_b(&s)?);
            }
            if run_all || stablechar {
                reports.push(verify::verify_stablechar(&s)?);
            }
            if run_all || descent {
                reports.push(verify::verify_dual_descent(&s)?);
            }
            if run_all || trace {
                reports.push(verify::verify_trace_conductor(&s)?);
            }
            let checks: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.check_name,
                        "status": r.status,
                        "witness": r.witness,
                        "detail": r.detail,
                    })
                })
                .collect();
            let report = json!({
                "semigroup": {
                    "generators": s.minimal_generators(),
                    "genus": s.genus(),
                    "multiplicity": s.multiplicity(),
                    "embedding_dimension": s.embedding_dimension(),
                    "frobenius": s.frobenius(),
                    "conductor": s.conductor(),
                },
                "checks": checks,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
            let statuses: Vec<CheckStatus> = reports.iter().map(|r| r.status).collect();
            Ok(exit_code_for_statuses(&statuses))
        }
        Command::Census {
            max_genus,
            out,
            format,
            jobs,
        } => {
            let format = match format {
                FormatArg::Csv => CensusFormat::Csv,
                FormatArg::Json => CensusFormat::Json,
            };
            let summary = census::census(max_genus, &out, format, jobs.max(1))?;
            println!("{summary}");
            Ok(0)
        }
    }
}

fn print_info(s: &NumericalSemigroup) {
    println!("generators: {s}");
    println!("multiplicity: {}", s.multiplicity());
    println!("embedding_dimension: {}", s.embedding_dimension());
    println!("frobenius: {}", s.frobenius());
    println!("conductor: {}", s.conductor());
    println!("genus: {}", s.genus());
    println!("gaps: {}", join_i64(&s.gaps()));
    let m = s.multiplicity();
    println!(
        "apery_set(mod {m}): {}",
        join_i64(&s.apery_set(m).expect("multiplicity is a member"))
    );
    println!("minimal_multiplicity: {}", s.has_minimal_multiplicity());
    println!("arf: {}", s.is_arf_all());
    println!("arf_closure: {}", s.arf_closure());
    let chain = lipman_chain(s);
    println!("lipman_chain: {}", format_chain(&chain));
    println!(
        "multiplicity_sequence: {}",
        join_i64(chain.multiplicity_sequence())
    );
    println!(
        "end_of_maximal_ideal: {}",
        maximal_ideal(s).end_semigroup()
    );
}

fn format_chain(chain: &crate::lipman::LipmanChain) -> String {
    chain
        .members()
        .iter()
        .map(NumericalSemigroup::to_string)
        .collect::<Vec<_>>()
        .join(" -> ")
}

fn join_i64(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
