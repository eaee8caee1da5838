use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use locdim::bounds::{
    report, report_for_graph, BoundsReport, Kind, Quantity, ReportOptions, Target,
};
use locdim::{Error, Result};

use crate::input::{load_graph, read_hypergraph};
use crate::{Ctx, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Kneser,
    Moore,
    Polarity,
}

#[derive(Subcommand)]
pub enum BoundsCmd {
    /// Every applicable bound, cross-checked against computed values.
    Report {
        #[arg(long, required_unless_present = "graph", conflicts_with = "graph")]
        family: Option<Family>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        /// Formulas only; skip the solvers.
        #[arg(long)]
        no_compute: bool,
        /// Gadget hypergraph for the Kneser cover bound.
        #[arg(long)]
        gadget: Option<PathBuf>,
    },
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("this family needs {flag}")))
}

pub fn run(cmd: BoundsCmd, ctx: &Ctx) -> Result<Outcome> {
    let BoundsCmd::Report {
        family,
        graph,
        k,
        n,
        q,
        no_compute,
        gadget,
    } = cmd;
    let opts = ReportOptions {
        compute: !no_compute,
        budget: ctx.budget,
        gadget: gadget.map(|p| read_hypergraph(&p)).transpose()?,
    };
    let rep = match (graph, family) {
        (Some(spec), _) => report_for_graph(&load_graph(&spec, false)?.graph, &opts)?,
        (None, Some(f)) => {
            let target = match f {
                Family::Kneser => Target::Kneser {
                    k: need(k, "-k")?,
                    n: need(n, "-n")?,
                },
                Family::Moore => Target::Moore { k: need(k, "-k")? },
                Family::Polarity => Target::Polarity { q: need(q, "--q")? },
            };
            report(&target, &opts)?
        }
        (None, None) => unreachable!("clap requires --family or --graph"),
    };
    print_report(&rep);
    ctx.artifact(&rep)?;
    Ok(Outcome::Success)
}

fn name(q: Quantity) -> &'static str {
    match q {
        Quantity::Beta => "beta",
        Quantity::Zeta => "zeta",
    }
}

fn print_report(rep: &BoundsReport) {
    for e in &rep.entries {
        let kind = match e.kind {
            Kind::Lower => ">=",
            Kind::Upper => "<=",
            Kind::Exact => "=",
        };
        let value = match (&e.value, e.bound) {
            (Some(v), Some(b)) if *v.denom() != 1 => format!("{b} ({v})"),
            (_, Some(b)) => b.to_string(),
            _ => "n/a".to_string(),
        };
        let mut line = format!("{} {kind} {value:<10} {}", name(e.quantity), e.source);
        if !e.satisfied {
            let failed: Vec<&str> = e
                .preconditions
                .iter()
                .filter(|p| !p.holds)
                .map(|p| p.text.as_str())
                .collect();
            line += &format!("  [not applicable: {}]", failed.join("; "));
        }
        if e.clamped {
            line += "  [clamped to 1]";
        }
        println!("{line}");
        for f in &e.flags {
            println!("    note: {f}");
        }
    }
    for q in [Quantity::Beta, Quantity::Zeta] {
        let (lo, hi) = rep.interval(q);
        let show = |v: Option<i64>| v.map_or("?".to_string(), |x| x.to_string());
        println!("{} in [{}, {}]", name(q), show(lo), show(hi));
    }
}
