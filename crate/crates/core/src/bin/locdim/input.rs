//! Graph specs accepted by `--graph`, and other input parsing.

use std::path::Path;

use locdim::geometry::{er_polarity_graph, PolarityGraph};
use locdim::graph::io::{from_dot, from_json};
use locdim::graph::symmetry::Symmetry;
use locdim::graph::{cycle_graph, hoffman_singleton, kneser_graph, petersen, KneserLabel};
use locdim::hyper::Hypergraph;
use locdim::{Error, Graph, Result};

/// Kneser graphs up to this ground-set size get their automorphisms.
const KNESER_SYMMETRY_MAX_N: usize = 8;

pub struct Input {
    pub graph: Graph,
    pub symmetry: Option<Symmetry>,
    pub polarity: Option<PolarityGraph>,
    pub kneser: Option<(usize, usize)>,
}

impl Input {
    fn plain(graph: Graph) -> Input {
        Input {
            graph,
            symmetry: None,
            polarity: None,
            kneser: None,
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("{what}: expected a number, got `{s}`")))
}

/// `c5`, `petersen`, `hoffman-singleton`, `cycle:N`, `kneser:K,N`, `er:Q`,
/// or a path to a JSON or DOT file.
pub fn load_graph(spec: &str, with_symmetry: bool) -> Result<Input> {
    let mut input = match spec {
        "c5" => Input::plain(cycle_graph(5)?),
        "petersen" => Input {
            kneser: Some((2, 5)),
            ..Input::plain(petersen())
        },
        "hoffman-singleton" | "hs" => Input::plain(hoffman_singleton()),
        _ => {
            if let Some(rest) = spec.strip_prefix("cycle:") {
                Input::plain(cycle_graph(number(rest, "cycle length")?)?)
            } else if let Some(rest) = spec.strip_prefix("kneser:") {
                let (k, n) = rest
                    .split_once(',')
                    .ok_or_else(|| invalid(format!("expected kneser:K,N, got `{spec}`")))?;
                let (k, n) = (number(k, "k")?, number(n, "n")?);
                Input {
                    kneser: Some((k, n)),
                    ..Input::plain(kneser_graph(k, n)?)
                }
            } else if let Some(rest) = spec.strip_prefix("er:") {
                let pg = er_polarity_graph(number(rest, "q")?)?;
                Input {
                    graph: pg.graph.clone(),
                    symmetry: None,
                    polarity: Some(pg),
                    kneser: None,
                }
            } else {
                Input::plain(read_graph_file(Path::new(spec))?)
            }
        }
    };
    if with_symmetry {
        input.symmetry = symmetry_for(spec, &input)?;
    }
    Ok(input)
}

fn symmetry_for(spec: &str, input: &Input) -> Result<Option<Symmetry>> {
    if spec == "c5" || spec.starts_with("cycle:") {
        return Symmetry::cycle(&input.graph).map(Some);
    }
    match input.kneser {
        Some((k, n)) if n <= KNESER_SYMMETRY_MAX_N => {
            Symmetry::kneser(&input.graph, k, n).map(Some)
        }
        _ => Ok(None),
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "dot" || e == "gv") {
        from_dot(&text)
    } else {
        from_json(&text)
    }
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    Hypergraph::from_json(&std::fs::read_to_string(path)?)
}

/// Comma-separated vertex tokens: labels when the graph has them, else indices.
pub fn parse_vertices(g: &Graph, list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| g.vertex_by_token(t))
        .collect()
}

/// Comma-separated k-subsets of [n], each written as in `12` or `1-2`.
pub fn parse_kneser_labels(list: &str, k: usize, n: usize) -> Result<Vec<KneserLabel>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| KneserLabel::parse(t, k, n))
        .collect()
}
