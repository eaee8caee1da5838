use clap::{Subcommand, ValueEnum};
use locdim::geometry::er_polarity_graph;
use locdim::graph::io::{to_dot, to_json};
use locdim::graph::{
    cycle_graph, graph_girth, hoffman_singleton, is_moore_diam2, kneser_graph, petersen,
};
use locdim::{Error, Graph, Result};
use serde::Serialize;

use crate::input::load_graph;
use crate::{Ctx, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    C5,
    Petersen,
    HoffmanSingleton,
    Cycle,
    Kneser,
    Er,
}

#[derive(Subcommand)]
pub enum GraphCmd {
    /// Build a named graph and write it as JSON.
    Build {
        family: Family,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Print order, size, degree, diameter, girth and hash.
    Info {
        #[arg(long)]
        graph: String,
    },
    /// Write the graph as JSON, or as DOT with --dot.
    Export {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Serialize)]
struct Info {
    hash: String,
    order: usize,
    edges: usize,
    regular_degree: Option<usize>,
    diameter: Option<u8>,
    girth: Option<usize>,
    moore_degree: Option<usize>,
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("{family} needs {flag}")))
}

pub fn run(cmd: GraphCmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        GraphCmd::Build { family, k, n, q } => {
            let (g, json) = match family {
                Family::Er => {
                    let pg = er_polarity_graph(need(q, "--q", "er")?)?;
                    let json = pg.to_json();
                    (pg.graph, json)
                }
                _ => {
                    let g = match family {
                        Family::C5 => cycle_graph(5)?,
                        Family::Petersen => petersen(),
                        Family::HoffmanSingleton => hoffman_singleton(),
                        Family::Cycle => cycle_graph(need(n, "-n", "cycle")?)?,
                        Family::Kneser => {
                            kneser_graph(need(k, "-k", "kneser")?, need(n, "-n", "kneser")?)?
                        }
                        Family::Er => unreachable!(),
                    };
                    let json = to_json(&g);
                    (g, json)
                }
            };
            ctx.text_artifact(&(json + "\n"))?;
            if ctx.out.is_some() {
                println!(
                    "{} vertices, {} edges, hash {}",
                    g.order(),
                    g.edge_count(),
                    g.hash()
                );
            }
            Ok(Outcome::Success)
        }
        GraphCmd::Info { graph } => {
            let g = load_graph(&graph, false)?.graph;
            let info = info(&g);
            println!("hash      {}", info.hash);
            println!("order     {}", info.order);
            println!("edges     {}", info.edges);
            println!("degree    {}", opt(info.regular_degree, "irregular"));
            println!("diameter  {}", opt(info.diameter, "disconnected"));
            println!("girth     {}", opt(info.girth, "acyclic"));
            if let Some(d) = info.moore_degree {
                println!("Moore graph of degree {d} and diameter 2");
            }
            ctx.artifact(&info)?;
            Ok(Outcome::Success)
        }
        GraphCmd::Export { graph, dot } => {
            let g = load_graph(&graph, false)?.graph;
            let text = if dot { to_dot(&g) } else { to_json(&g) + "\n" };
            ctx.text_artifact(&text)?;
            Ok(Outcome::Success)
        }
    }
}

fn opt<T: ToString>(v: Option<T>, none: &str) -> String {
    v.map_or_else(|| none.to_string(), |x| x.to_string())
}

fn info(g: &Graph) -> Info {
    Info {
        hash: g.hash().to_string(),
        order: g.order(),
        edges: g.edge_count(),
        regular_degree: g.regular_degree(),
        diameter: g.diameter(),
        girth: graph_girth(g),
        moore_degree: is_moore_diam2(g),
    }
}
