//! `nb`: tables and verification suites.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource bound.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cli::suites::{run_suite, Suite, SuiteOpts};
use cli::tables::{build_table, TableKind, TableOpts};
use cli::{Format, RunConfig, Status, CACHE_ENV};
use nilbrauer::{load_or_build, with_big_stack, Engine, NbError};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "nb",
    version,
    about = "Tables and verification suites for the rank-one nil-Brauer category"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Bubble parameter; both values when omitted.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(0..=1))]
    t: Option<u8>,
    /// Series precision in steps of q^-2.
    #[arg(long = "q-prec", global = true, default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..=200))]
    q_prec: i64,
    /// Number of xi coefficients of characters.
    #[arg(long = "xi-prec", global = true, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=32))]
    xi_prec: u64,
    #[arg(long = "max-n", global = true)]
    max_n: Option<usize>,
    #[arg(long = "max-f", global = true)]
    max_f: Option<usize>,
    /// Maximum seed word length for slot construction.
    #[arg(long = "L", global = true, default_value_t = 14, value_parser = clap::value_parser!(u64).range(1..=64))]
    l: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Slot cache directory; no caching when unset.
    #[arg(long = "cache-dir", global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table.
    Tables {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest exponent for the form table.
        #[arg(long)]
        max: Option<usize>,
        /// Largest m for decomposition numbers.
        #[arg(long = "max-m")]
        max_m: Option<usize>,
        /// n for decomposition numbers.
        #[arg(long)]
        n: Option<usize>,
        /// Source basis for transition tables (monomial, pbw, canonical).
        #[arg(long)]
        from: Option<String>,
        /// Target basis for transition tables.
        #[arg(long)]
        to: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Strand count for the idempotent suite.
        #[arg(long)]
        n: Option<usize>,
        /// Index of the central element for the central suite.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Build or load one graded piece of a Hom space.
    Slot {
        /// Target strand count.
        #[arg(long)]
        m: usize,
        /// Source strand count.
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

fn config(g: &Global) -> RunConfig {
    RunConfig {
        t: g.t,
        q_prec: g.q_prec,
        xi_prec: g.xi_prec as usize,
        max_n: g.max_n,
        max_f: g.max_f,
        l: g.l as usize,
        format: g.format,
        cache_dir: g.cache_dir.clone(),
    }
}

fn slot(cfg: &RunConfig, m: usize, n: usize, d: i64) -> ExitCode {
    let t = cfg.t.unwrap_or(0);
    let (bounds, cache) = (cfg.bounds(), cfg.cache_dir.clone());
    let res = with_big_stack(move || {
        load_or_build(cache.as_deref(), &mut Engine::new(t), m, n, d, &bounds)
    });
    match res {
        Ok(s) => {
            match cfg.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&s).expect("serializable")
                ),
                Format::Tsv => {
                    let rows = [
                        ("m", s.m.to_string()),
                        ("n", s.n.to_string()),
                        ("d", s.d.to_string()),
                        ("L", s.l.to_string()),
                        ("t", s.t.to_string()),
                        ("seeds", s.seeds.to_string()),
                        ("relation_rank", s.relation_rank.to_string()),
                        ("relation_samples", s.relation_samples.to_string()),
                        ("quotient_dim", s.quotient_dim.to_string()),
                        ("predicted", s.predicted.to_string()),
                        ("certified", s.certified.to_string()),
                    ];
                    println!("field\tvalue");
                    for (k, v) in rows {
                        println!("{k}\t{v}");
                    }
                    for w in &s.basis_words {
                        println!("basis_word\t{w}");
                    }
                }
            }
            if s.certified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ NbError::BoundExceeded { .. }) => {
            if cfg.format == Format::Json {
                println!(
                    "{}",
                    json!({ "schema": cli::SCHEMA, "error": e.to_string() })
                );
            }
            eprintln!("{e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let cfg = config(&args.global);
    match args.command {
        Command::Tables {
            kind,
            max,
            max_m,
            n,
            from,
            to,
        } => {
            let opts = TableOpts {
                max,
                max_m,
                n,
                from,
                to,
            };
            match build_table(kind, &cfg, &opts) {
                Ok(t) => {
                    print!("{}", t.render(cfg.format));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { suite, n, r } => {
            let rep = run_suite(suite, &cfg, &SuiteOpts { n, r });
            print!("{}", rep.render(cfg.format));
            let unknown = rep.count(Status::Unknown);
            if unknown > 0 {
                eprintln!("{unknown} checks undecided within bounds");
            }
            match rep.first_failure() {
                None => ExitCode::SUCCESS,
                Some(l) => {
                    eprintln!("first failure: {}: {}: {}", l.anchor, l.check, l.detail);
                    ExitCode::from(1)
                }
            }
        }
        Command::Slot { m, n, d } => slot(&cfg, m, n, d),
    }
}
