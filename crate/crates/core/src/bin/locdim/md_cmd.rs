use std::path::PathBuf;

use clap::Subcommand;
use locdim::metric::{
    greedy_resolving, is_resolving, metric_dimension, moore_resolving, moore_resolving_default,
    polarity_resolving, polarity_resolving_graph, ResolvingCertificate,
};
use locdim::{Graph, Result};

use crate::input::{load_graph, parse_vertices};
use crate::{Ctx, Outcome};

#[derive(Subcommand)]
pub enum MdCmd {
    /// Check that a landmark set resolves the graph.
    Verify {
        #[arg(long)]
        graph: String,
        /// Comma-separated vertex labels or indices.
        #[arg(long, conflicts_with = "cert", required_unless_present = "cert")]
        set: Option<String>,
        /// A certificate written by an earlier run.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact metric dimension.
    Exact {
        #[arg(long)]
        graph: String,
    },
    /// Greedy resolving set (an upper bound).
    Greedy {
        #[arg(long)]
        graph: String,
    },
    /// Resolving set of size 2k - 3 on a k-regular Moore graph of diameter 2.
    ConstructMoore {
        #[arg(long)]
        graph: String,
        #[arg(long, requires_all = ["v", "w"])]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// Resolving set of size 2q - 1 on a polarity graph of order q² + q + 1.
    ConstructPolarity {
        #[arg(long)]
        graph: String,
    },
}

fn show(g: &Graph, set: &[usize]) -> String {
    set.iter()
        .map(|&v| g.label(v))
        .collect::<Vec<_>>()
        .join(",")
}

/// Prints and writes a certificate; a non-resolving set is a failure.
fn finish(g: &Graph, cert: &ResolvingCertificate, ctx: &Ctx) -> Result<Outcome> {
    if cert.verified {
        println!(
            "resolving set of size {}: {}",
            cert.landmarks.len(),
            show(g, &cert.landmarks)
        );
    } else {
        let (a, b) = cert
            .witness_pair
            .expect("failed certificates carry a witness");
        println!(
            "not resolving: {} and {} have the same distances to {}",
            g.label(a),
            g.label(b),
            show(g, &cert.landmarks)
        );
    }
    ctx.artifact(cert)?;
    Ok(if cert.verified {
        Outcome::Success
    } else {
        Outcome::Failed
    })
}

pub fn run(cmd: MdCmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        MdCmd::Verify { graph, set, cert } => {
            let g = load_graph(&graph, false)?.graph;
            let cert = match (set, cert) {
                (Some(list), _) => is_resolving(&g, &parse_vertices(&g, &list)?)?,
                (None, Some(path)) => {
                    let stored: ResolvingCertificate =
                        serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    stored.recheck(&g)?
                }
                (None, None) => unreachable!("clap requires --set or --cert"),
            };
            finish(&g, &cert, ctx)
        }
        MdCmd::Exact { graph } => {
            let g = load_graph(&graph, false)?.graph;
            let md = metric_dimension(&g, &ctx.budget);
            match md.value {
                Some(b) => println!(
                    "metric dimension {b} ({} nodes); witness {}",
                    md.nodes,
                    show(&g, &md.certificate.landmarks)
                ),
                None => println!(
                    "budget exhausted after {} nodes: metric dimension in [{}, {}]",
                    md.nodes, md.lower, md.upper
                ),
            }
            ctx.artifact(&md)?;
            Ok(if md.budget_exhausted {
                Outcome::Budget
            } else {
                Outcome::Success
            })
        }
        MdCmd::Greedy { graph } => {
            let g = load_graph(&graph, false)?.graph;
            let cert = is_resolving(&g, &greedy_resolving(&g))?;
            finish(&g, &cert, ctx)
        }
        MdCmd::ConstructMoore { graph, u, v, w } => {
            let g = load_graph(&graph, false)?.graph;
            let set = match (u, v, w) {
                (Some(u), Some(v), Some(w)) => moore_resolving(
                    &g,
                    g.vertex_by_token(&u)?,
                    g.vertex_by_token(&v)?,
                    g.vertex_by_token(&w)?,
                )?,
                _ => moore_resolving_default(&g)?,
            };
            finish(&g, &is_resolving(&g, &set)?, ctx)
        }
        MdCmd::ConstructPolarity { graph } => {
            let input = load_graph(&graph, false)?;
            let set = match &input.polarity {
                Some(pg) => polarity_resolving(pg)?,
                None => polarity_resolving_graph(&input.graph)?,
            };
            finish(&input.graph, &is_resolving(&input.graph, &set)?, ctx)
        }
    }
}
