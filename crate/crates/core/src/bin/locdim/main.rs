//! `locdim`: build graphs, run the solvers and strategies, and write
//! certificates and reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 budget exhausted,
//! 3 invalid input.

mod bounds_cmd;
mod graph_cmd;
mod hyper_cmd;
mod input;
mod loc_cmd;
mod md_cmd;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use locdim::{Budget, Error, Result};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "locdim",
    version,
    about = "Localization number and metric dimension of diameter-2 graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Write the JSON artifact here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Node limit for the exponential searches.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit for the exponential searches.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Worker threads for the parallel solvers.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build, inspect and export graphs.
    #[command(subcommand)]
    Graph(graph_cmd::GraphCmd),
    /// Hypergraph detectability, girth, conversions, gadgets and covers.
    #[command(subcommand)]
    Hyper(hyper_cmd::HyperCmd),
    /// Resolving sets and metric dimension.
    #[command(subcommand)]
    Md(md_cmd::MdCmd),
    /// The localization game.
    #[command(subcommand)]
    Loc(loc_cmd::LocCmd),
    /// Closed-form bounds checked against computed values.
    #[command(subcommand)]
    Bounds(bounds_cmd::BoundsCmd),
}

/// How a command that ran to completion ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failed,
    Budget,
}

pub struct Ctx {
    pub out: Option<PathBuf>,
    pub budget: Budget,
}

impl Ctx {
    /// Writes `value` as pretty JSON to `--out`, if given.
    pub fn artifact<T: Serialize>(&self, value: &T) -> Result<()> {
        if let Some(path) = &self.out {
            write_json(path, value)?;
        }
        Ok(())
    }

    /// Writes `text` to `--out`, or to stdout without one.
    pub fn text_artifact(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted(_) => 2,
        Error::BoundContradiction { .. } => 1,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(t) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::InvalidInput(format!("--threads: {e}")))?;
    }
    let mut budget = Budget::UNLIMITED;
    if let Some(n) = cli.global.budget_nodes {
        budget = budget.with_max_nodes(n);
    }
    if let Some(s) = cli.global.budget_seconds {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "--budget-seconds must be non-negative, got {s}"
            )));
        }
        budget = budget.with_seconds(s);
    }
    let ctx = Ctx {
        out: cli.global.out,
        budget,
    };
    match cli.command {
        Command::Graph(c) => graph_cmd::run(c, &ctx),
        Command::Hyper(c) => hyper_cmd::run(c, &ctx),
        Command::Md(c) => md_cmd::run(c, &ctx),
        Command::Loc(c) => loc_cmd::run(c, &ctx),
        Command::Bounds(c) => bounds_cmd::run(c, &ctx),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Ok(Outcome::Budget) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
