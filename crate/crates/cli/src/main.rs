use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fpg_cli::{emit_file, run, Command, RunConfig, EXIT_PARSE};

#[derive(Parser)]
#[command(name = "fpg", version, about = "Checks on modular group algebras of finite p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Restrict to one prime (2, 3 or 5).
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Group files (JSON); may be repeated.
    #[arg(long, global = true)]
    input: Vec<PathBuf>,
    /// Catalog group names such as D8 or C4xQ8; may be repeated.
    #[arg(long, global = true)]
    catalog: Vec<String>,
    /// Largest catalog order used when no inputs are given.
    #[arg(long, global = true, default_value_t = 32)]
    max_order: usize,
    #[arg(long, global = true, default_value_t = fpg_core::group::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Enumeration limit for unit groups 1 + I(B).
    #[arg(long, global = true, default_value_t = fpg_core::algebra::DEFAULT_ENUM_CAP)]
    enum_cap: u128,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List catalog groups, or emit one as a group file.
    Catalog {
        /// Emit the named group as a group file.
        #[arg(long)]
        emit: Option<String>,
        /// Emit A×G0 with its coordinate factorization, given as `A,G0`.
        #[arg(long, value_name = "A,G0")]
        emit_factorization: Option<String>,
    },
    /// Ideal identity battery and the Frattini correspondence.
    Lemmas,
    /// Cyclic direct factor criterion against the oracle.
    CyclicFactor,
    /// Recover a direct decomposition from a factorization in the input.
    Recover,
    /// Tensor indecomposability certificates.
    Certify,
    /// Direct factor oracle dump.
    Oracle,
}

fn write_out(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = cli.common;
    let command = match cli.command {
        Cmd::Catalog { emit, emit_factorization } if emit.is_some() || emit_factorization.is_some() => {
            let pair = emit_factorization.as_deref().map(|s| s.split_once(',').unwrap_or((s, "C1")));
            return match emit_file(emit.as_deref(), pair) {
                Ok(file) => {
                    let text = serde_json::to_string_pretty(&file).expect("group file serializes");
                    match write_out(&c.out, &text) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => {
                            eprintln!("fpg: {e}");
                            ExitCode::from(EXIT_PARSE as u8)
                        }
                    }
                }
                Err(e) => {
                    eprintln!("fpg: {e}");
                    ExitCode::from(EXIT_PARSE as u8)
                }
            };
        }
        Cmd::Catalog { .. } => Command::Catalog,
        Cmd::Lemmas => Command::Lemmas,
        Cmd::CyclicFactor => Command::CyclicFactor,
        Cmd::Recover => Command::Recover,
        Cmd::Certify => Command::Certify,
        Cmd::Oracle => Command::Oracle,
    };
    let cfg = RunConfig {
        command,
        p: c.p,
        inputs: c.input,
        catalog: c.catalog,
        max_order: c.max_order,
        oracle_cap: c.oracle_cap,
        enum_cap: c.enum_cap,
        seed: c.seed,
        workers: c.workers,
        verbose: c.verbose,
    };
    let outcome = run(&cfg);
    if let Some(msg) = &outcome.message {
        eprintln!("fpg: {msg}");
    }
    if let Some(env) = &outcome.envelope {
        if cfg.verbose {
            for r in &env.body.results {
                eprintln!("{:<12} {:?}", r.name, r.status);
            }
        }
        if let Err(e) = write_out(&c.out, &env.to_json()) {
            eprintln!("fpg: {e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
