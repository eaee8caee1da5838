use std::path::PathBuf;

use clap::Subcommand;
use locdim::graph::kneser::binomial;
use locdim::graph::{cycle_graph, KneserLabel};
use locdim::hyper::{
    berge_girth, cache_dir, certify_detectable, check_degree_properties, default_regularity,
    hypergraph_to_resolving, is_detectable_with_budget, kneser_resolving_cover, load_cached_gadget,
    resolving_to_hypergraph, search_girth5_gadget, store_gadget, Gadget, Hypergraph,
    DEFAULT_DETECT_BUDGET,
};
use locdim::metric::kneser_is_resolving;
use locdim::{Error, Result};
use serde::Serialize;

use crate::input::{parse_kneser_labels, read_hypergraph};
use crate::{Ctx, Outcome};

/// Largest K(k, n) whose resolving sets `convert` and `cover` check.
const CHECK_MAX_VERTICES: u128 = 5_000_000;

#[derive(Subcommand)]
pub enum HyperCmd {
    /// Exhaustive k'-detectability check.
    Detect {
        #[arg(long)]
        hyper: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Berge girth.
    Girth {
        #[arg(long)]
        hyper: PathBuf,
    },
    /// Girth-5 and minimum-degree certificate for k'-detectability.
    Certify {
        #[arg(long)]
        hyper: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Degree-sum conditions every k-detectable hypergraph satisfies.
    Degrees {
        #[arg(long)]
        hyper: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Translate between K(k, n) vertex sets and hypergraphs on [n].
    Convert {
        /// Vertex labels of K(k, n), e.g. `12,16,23`.
        #[arg(long, conflicts_with = "hyper", required_unless_present = "hyper")]
        set: Option<String>,
        /// Hypergraph to read as a vertex set of K(k, n).
        #[arg(long)]
        hyper: Option<PathBuf>,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
    },
    /// Search for a k-uniform regular hypergraph of girth at least 5 and cache it.
    Gadget {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        regularity: Option<usize>,
        #[arg(long, default_value_t = 64)]
        max_vertices: usize,
        /// Search even when the cache has an entry.
        #[arg(long)]
        refresh: bool,
    },
    /// Resolving set of K(k, n) from gadget copies over a cover of [n].
    Cover {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        /// Gadget file; defaults to C5 for k = 2 and to the cache otherwise.
        #[arg(long)]
        hyper: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Converted {
    k: usize,
    n: usize,
    landmarks: Vec<String>,
    indices: Vec<usize>,
    resolving: Option<bool>,
}

#[derive(Serialize)]
struct CoverArtifact {
    k: usize,
    n: usize,
    m: usize,
    part_starts: Vec<u16>,
    size: usize,
    landmarks: Vec<String>,
    verified: bool,
}

fn detect_budget(ctx: &Ctx) -> u128 {
    ctx.budget
        .max_nodes
        .map_or(DEFAULT_DETECT_BUDGET, u128::from)
}

fn format_set(b: &[u16]) -> String {
    let parts: Vec<String> = b.iter().map(u16::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn labels(edges: &[Vec<u16>], n: usize) -> Result<Vec<KneserLabel>> {
    edges
        .iter()
        .map(|e| KneserLabel::new(e.clone(), n))
        .collect()
}

pub fn run(cmd: HyperCmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        HyperCmd::Detect { hyper, k } => {
            let h = read_hypergraph(&hyper)?;
            let d = is_detectable_with_budget(&h, k, detect_budget(ctx))?;
            match &d.witness {
                None => println!("{k}-detectable"),
                Some((a, b)) => println!(
                    "not {k}-detectable: {} and {} have the same detection vector",
                    format_set(a),
                    format_set(b)
                ),
            }
            ctx.artifact(&d)?;
            Ok(if d.detectable {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
        HyperCmd::Girth { hyper } => {
            let h = read_hypergraph(&hyper)?;
            let girth = berge_girth(&h);
            match girth {
                Some(g) => println!("Berge girth {g}"),
                None => println!("acyclic"),
            }
            ctx.artifact(&serde_json::json!({ "girth": girth }))?;
            Ok(Outcome::Success)
        }
        HyperCmd::Certify { hyper, k } => {
            let h = read_hypergraph(&hyper)?;
            let ok = certify_detectable(&h, k)?;
            println!(
                "minimum degree {}, Berge girth {}: {}",
                h.min_degree(),
                berge_girth(&h).map_or("infinite".to_string(), |g| g.to_string()),
                if ok {
                    format!("certified {k}-detectable")
                } else {
                    "no certificate".to_string()
                }
            );
            ctx.artifact(&serde_json::json!({ "k": k, "certified": ok }))?;
            Ok(if ok {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
        HyperCmd::Degrees { hyper, k } => {
            let h = read_hypergraph(&hyper)?;
            let rep = check_degree_properties(&h, k)?;
            println!(
                "{} pairs checked, {} violations",
                rep.pairs_checked,
                rep.violations.len()
            );
            for v in &rep.violations {
                println!(
                    "  {} {}: degree sum {} < {}",
                    if v.adjacent {
                        "adjacent"
                    } else {
                        "non-adjacent"
                    },
                    format_set(&[v.u, v.v]),
                    v.degree_sum,
                    v.required
                );
            }
            ctx.artifact(&rep)?;
            Ok(if rep.passes() {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
        HyperCmd::Convert { set, hyper, k, n } => {
            if let Some(list) = set {
                let ranks: Vec<usize> = parse_kneser_labels(&list, k, n)?
                    .iter()
                    .map(|l| l.rank(n))
                    .collect();
                let h = resolving_to_hypergraph(&ranks, k, n)?;
                println!("hypergraph on [{n}] with {} edges", h.edge_count());
                ctx.text_artifact(&(h.to_json() + "\n"))?;
                return Ok(Outcome::Success);
            }
            let h = read_hypergraph(hyper.as_ref().expect("clap requires --set or --hyper"))?;
            let indices = hypergraph_to_resolving(&h, k, n)?;
            let resolving = if binomial(n, k) <= CHECK_MAX_VERTICES {
                Some(kneser_is_resolving(k, n, &labels(&h.edges, n)?)?.verified)
            } else {
                None
            };
            let out = Converted {
                k,
                n,
                landmarks: h
                    .edges
                    .iter()
                    .map(|e| KneserLabel::new(e.clone(), n).map(|l| l.display(n)))
                    .collect::<Result<_>>()?,
                indices,
                resolving,
            };
            println!("{}", out.landmarks.join(","));
            match resolving {
                Some(true) => println!("resolving in K({k},{n})"),
                Some(false) => println!("not resolving in K({k},{n})"),
                None => println!("K({k},{n}) too large to check"),
            }
            ctx.artifact(&out)?;
            Ok(if resolving == Some(false) {
                Outcome::Failed
            } else {
                Outcome::Success
            })
        }
        HyperCmd::Gadget {
            k,
            regularity,
            max_vertices,
            refresh,
        } => {
            let r = regularity.unwrap_or_else(|| default_regularity(k));
            let dir = cache_dir();
            if !refresh {
                if let Some(h) = load_cached_gadget(&dir, k, r)? {
                    println!(
                        "cached gadget: {} vertices, {} edges ({})",
                        h.n,
                        h.edge_count(),
                        dir.display()
                    );
                    ctx.artifact(&gadget_record(&h, k, r))?;
                    return Ok(Outcome::Success);
                }
            }
            let s = search_girth5_gadget(k, Some(r), max_vertices, &ctx.budget);
            match (&s.gadget, s.stopped_at) {
                (Some(h), _) => {
                    let path = store_gadget(&dir, h)?;
                    println!(
                        "found: {} vertices, {} edges after {} nodes; cached at {}",
                        h.n,
                        h.edge_count(),
                        s.nodes,
                        path.display()
                    );
                    ctx.artifact(&gadget_record(h, k, r))?;
                    Ok(Outcome::Success)
                }
                (None, Some(m)) => {
                    println!("budget exhausted at order {m} after {} nodes", s.nodes);
                    ctx.artifact(&s)?;
                    Ok(Outcome::Budget)
                }
                (None, None) => {
                    println!(
                        "no gadget found up to {max_vertices} vertices; refuted orders {:?}",
                        s.orders_refuted
                    );
                    ctx.artifact(&s)?;
                    Ok(Outcome::Failed)
                }
            }
        }
        HyperCmd::Cover { k, n, hyper } => {
            let gadget = match (hyper, k) {
                (Some(p), _) => read_hypergraph(&p)?,
                (None, 2) => Hypergraph::from_graph(&cycle_graph(5)?),
                (None, _) => load_cached_gadget(&cache_dir(), k, default_regularity(k))?.ok_or_else(|| {
                    Error::InvalidInput(format!("no cached gadget for k = {k}; run `hyper gadget -k {k}` or pass --hyper"))
                })?,
            };
            let cover = kneser_resolving_cover(k, n, &gadget)?;
            if binomial(n, k) > CHECK_MAX_VERTICES {
                return Err(Error::InvalidInput(format!(
                    "K({k},{n}) is too large to verify the cover"
                )));
            }
            let ls = labels(&cover.hypergraph.edges, n)?;
            let verified = kneser_is_resolving(k, n, &ls)?.verified;
            let out = CoverArtifact {
                k,
                n,
                m: cover.m,
                part_starts: cover.part_starts.clone(),
                size: cover.landmarks.len(),
                landmarks: ls.iter().map(|l| l.display(n)).collect(),
                verified,
            };
            println!(
                "{} landmarks from {} gadget copies of order {}: {}",
                out.size,
                out.part_starts.len(),
                out.m,
                if verified {
                    "resolving"
                } else {
                    "NOT resolving"
                }
            );
            ctx.artifact(&out)?;
            Ok(if verified {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
    }
}

fn gadget_record(h: &Hypergraph, k: usize, r: usize) -> Gadget {
    Gadget {
        k,
        m: h.n,
        regularity: r,
        edges: h.edges.clone(),
    }
}
