//! `hessloc`: chromatic quasisymmetric functions of indifference graphs,
//! their local g-functions, and the identity suites around them.

mod cache;
mod commands;
mod config;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "hessloc", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Transition-matrix cache file; created on first use.
    #[arg(long, global = true, env = "HESSLOC_CACHE", value_name = "PATH")]
    cache: Option<std::path::PathBuf>,

    /// Ignore any configured cache file.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Largest n for permutation, coloring and subgraph enumeration.
    #[arg(long = "guard-n", global = true, env = "HESSLOC_MAX_N", value_parser = positive)]
    guard_n: Option<usize>,

    /// Largest degree for symmetric-function transition tables.
    #[arg(long = "guard-degree", global = true, env = "HESSLOC_MAX_DEGREE", value_parser = positive)]
    guard_degree: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic quasisymmetric function of the indifference graph G_m.
    Csf {
        /// Hessenberg function, e.g. 2,4,4,5,6,6.
        #[arg(long)]
        hess: String,
        #[arg(long, default_value = "e")]
        basis: String,
        #[arg(long, value_enum, default_value_t = CsfMethod::Rho)]
        method: CsfMethod,
    },
    /// The local function g_k(m).
    Gk {
        #[arg(long)]
        hess: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = GkMethod::Def)]
        method: GkMethod,
        #[arg(long, default_value = "e")]
        basis: String,
    },
    /// Run exhaustive identity checks; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Largest n to check.
        #[arg(long, default_value_t = 5, value_parser = positive)]
        max_n: usize,
    },
    /// Table of the injection Delta for m and k; exits 1 on a violation.
    DeltaTable {
        #[arg(long)]
        hess: String,
        #[arg(long)]
        k: usize,
    },
    /// Both sides of ch(C_Sigma1) = omega LLT(P_n; x, q+1) with a verdict.
    LltFace {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CsfMethod {
    Rho,
    Coloring,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GkMethod {
    Def,
    Tree,
    Extended,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("{s:?} is not a positive integer")),
    }
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Guard = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl From<hessloc::Error> for CliError {
    fn from(e: hessloc::Error) -> Self {
        use hessloc::Error as E;
        let status = match e {
            E::ResourceGuard { .. } => Status::Guard,
            E::DeltaNotWellDefined { .. } | E::Integrality { .. } | E::NotInvertible => {
                Status::Failed
            }
            _ => Status::Usage,
        };
        CliError {
            status,
            message: e.to_string(),
        }
    }
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            status: Status::Usage,
            message: message.into(),
        }
    }
}

/// What a command prints, and how the process should exit.
pub struct Output {
    pub stdout: String,
    pub status: Status,
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let config = RunConfig::new(
        cli.format,
        cli.guard_n,
        cli.guard_degree,
        cli.cache,
        cli.no_cache,
    );
    config.apply_guards();
    let cache = config.cache_path().map(cache::Cache::open);
    let out = match cli.command {
        Command::Csf {
            hess,
            basis,
            method,
        } => commands::csf(&config, &hess, &basis, method)?,
        Command::Gk {
            hess,
            k,
            method,
            basis,
        } => commands::gk(&config, &hess, k, method, &basis)?,
        Command::Verify { suite, max_n } => verify::run(&config, suite, max_n)?,
        Command::DeltaTable { hess, k } => commands::delta_table(&config, &hess, k)?,
        Command::LltFace { n } => commands::llt_face(&config, n)?,
    };
    if let Some(cache) = cache {
        if let Err(e) = cache.save() {
            eprintln!(
                "warning: could not write cache {}: {e}",
                cache.path().display()
            );
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(Status::Failed as u8);
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}
