use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use locdim::game::{
    loc_decide, localization_number, verify_strategy, Evasion, LocDecision, LocOptions,
    MooreStrategy, Placement, PositionalStrategy, StaticStrategy, StrategyReport,
};
use locdim::{Error, Graph, Result};

use crate::input::{load_graph, parse_vertices};
use crate::{Ctx, Outcome};

#[derive(Args)]
pub struct SolverArgs {
    #[arg(long)]
    graph: String,
    /// Skip automorphism pruning for the named families.
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long, default_value_t = LocOptions::default().max_vertices)]
    max_vertices: usize,
    #[arg(long, default_value_t = LocOptions::default().max_cops)]
    max_cops: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum StrategyKind {
    /// The staged strategy for Moore graphs of degree at least 5.
    Moore,
    /// The same placement (--set) every round.
    Static,
    /// One cop on every vertex.
    All,
    /// A strategy written by `loc decide` (--strategy-file).
    Positional,
}

#[derive(Subcommand)]
pub enum LocCmd {
    /// Decide whether k cops win.
    Decide {
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(short)]
        k: usize,
    },
    /// The localization number, or an interval when undecided.
    Number {
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Play a strategy against every robber choice.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        strategy: StrategyKind,
        /// Cop limit; defaults to what the strategy uses.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        strategy_file: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        max_rounds: u32,
    },
}

fn options(args: &SolverArgs, ctx: &Ctx) -> Result<(Graph, LocOptions)> {
    let input = load_graph(&args.graph, !args.no_symmetry)?;
    let opts = LocOptions {
        budget: ctx.budget,
        max_vertices: args.max_vertices,
        max_cops: args.max_cops,
        symmetry: input.symmetry,
    };
    Ok((input.graph, opts))
}

pub fn run(cmd: LocCmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        LocCmd::Decide { solver, k } => {
            let (g, opts) = options(&solver, ctx)?;
            let d = loc_decide(&g, k, &opts)?;
            let outcome = match &d {
                LocDecision::CopWin { strategy } => {
                    println!(
                        "{k} cops win in at most {} ({} beliefs in the strategy)",
                        round_count(strategy.rounds),
                        strategy.moves.len()
                    );
                    Outcome::Success
                }
                LocDecision::RobberWin => {
                    println!("the robber evades {k} cops");
                    Outcome::Success
                }
                LocDecision::Unknown { reason } => {
                    println!("undecided: {reason}");
                    Outcome::Budget
                }
            };
            ctx.artifact(&d)?;
            Ok(outcome)
        }
        LocCmd::Number { solver } => {
            let (g, opts) = options(&solver, ctx)?;
            let z = localization_number(&g, &opts)?;
            match z.value {
                Some(v) => println!("{v}"),
                None => println!("between {} and {} ({})", z.lower, z.upper, z.note),
            }
            ctx.artifact(&z)?;
            Ok(if z.note.starts_with("open") {
                Outcome::Budget
            } else {
                Outcome::Success
            })
        }
        LocCmd::Verify {
            graph,
            strategy,
            k,
            set,
            strategy_file,
            max_rounds,
        } => {
            let g = load_graph(&graph, false)?.graph;
            let report = match strategy {
                StrategyKind::Moore => {
                    let s = MooreStrategy::new(&g)?;
                    verify_strategy(&g, &s, k.unwrap_or(s.cops()), max_rounds)
                }
                StrategyKind::Static => {
                    let list = set.ok_or_else(|| {
                        Error::InvalidInput("--strategy static needs --set".into())
                    })?;
                    let placement = Placement::checked(&g, parse_vertices(&g, &list)?)?;
                    let cops = placement.len();
                    verify_strategy(
                        &g,
                        &StaticStrategy { placement },
                        k.unwrap_or(cops),
                        max_rounds,
                    )
                }
                StrategyKind::All => verify_strategy(
                    &g,
                    &StaticStrategy::all_vertices(&g),
                    k.unwrap_or(g.order()),
                    max_rounds,
                ),
                StrategyKind::Positional => {
                    let path = strategy_file.ok_or_else(|| {
                        Error::InvalidInput("--strategy positional needs --strategy-file".into())
                    })?;
                    let s = read_positional(&path)?;
                    if s.graph_hash != g.hash() {
                        return Err(Error::HashMismatch {
                            expected: s.graph_hash,
                            found: g.hash().to_string(),
                        });
                    }
                    verify_strategy(&g, &s, k.unwrap_or(s.cops), max_rounds)
                }
            };
            match &report {
                StrategyReport::Captured {
                    rounds, positions, ..
                } => {
                    println!(
                        "captured on every play within {} ({positions} positions explored)",
                        round_count(*rounds)
                    )
                }
                StrategyReport::Evaded {
                    reason,
                    positions,
                    trace,
                } => {
                    let why = match reason {
                        Evasion::Cycle => "a play repeats a position".to_string(),
                        Evasion::RoundLimit { max_rounds } => {
                            format!("a play lasts beyond {max_rounds} rounds")
                        }
                        Evasion::Fault { message } => format!("strategy fault: {message}"),
                    };
                    println!(
                        "robber escapes: {why} (after {}, {positions} positions explored)",
                        round_count(trace.rounds.len() as u32)
                    );
                }
            }
            ctx.artifact(&report)?;
            Ok(if report.is_captured() {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
    }
}

fn round_count(r: u32) -> String {
    if r == 1 {
        "1 round".to_string()
    } else {
        format!("{r} rounds")
    }
}

/// Accepts either a bare strategy or the output of `loc decide`.
fn read_positional(path: &std::path::Path) -> Result<PositionalStrategy> {
    let text = std::fs::read_to_string(path)?;
    if let Ok(s) = serde_json::from_str::<PositionalStrategy>(&text) {
        return Ok(s);
    }
    match serde_json::from_str::<LocDecision>(&text)? {
        LocDecision::CopWin { strategy } => Ok(strategy),
        _ => Err(Error::InvalidInput(format!(
            "{} holds no winning strategy",
            path.display()
        ))),
    }
}
