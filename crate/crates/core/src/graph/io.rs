//! JSON and DOT serialization for graphs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// On-disk graph: `{"n": .., "edges": [[u, v], ..], "labels": [..]?, "absolute": [..]?, "hash": ..?}`.
///
/// `absolute` is only written for polarity graphs; readers that don't care
/// ignore it. A `hash`, when present, must match the graph read back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub absolute: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hash: Option<String>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
            absolute: None,
            hash: Some(g.hash().to_string()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(self.n, &edges, self.labels.clone())?;
        if let Some(h) = &self.hash {
            if h != g.hash() {
                return Err(Error::HashMismatch {
                    expected: h.clone(),
                    found: g.hash().to_string(),
                });
            }
        }
        Ok(g)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph JSON serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

/// DOT export. Every vertex is declared (so isolated vertices survive), with
/// its label when present; edges follow in canonical order.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match g.labels() {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", escape(&l[v])).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(d) = chars.next() {
                out.push(d);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Reads the subset of DOT written by [`to_dot`]: numeric node ids, optional
/// `label` attributes and `--` edges, one statement per line.
pub fn from_dot(text: &str) -> Result<Graph> {
    let mut labels: Vec<(usize, Option<String>)> = Vec::new();
    let mut edges = Vec::new();
    let bad = |line: &str| Error::invalid(format!("unsupported DOT statement `{line}`"));
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with("graph") || line == "}" || line.starts_with("//") {
            continue;
        }
        let stmt = line.strip_suffix(';').unwrap_or(line).trim();
        if let Some((a, b)) = stmt.split_once("--") {
            let u = a.trim().parse::<usize>().map_err(|_| bad(line))?;
            let v = b.trim().parse::<usize>().map_err(|_| bad(line))?;
            edges.push((u, v));
        } else if let Some((id, attrs)) = stmt.split_once('[') {
            let v = id.trim().parse::<usize>().map_err(|_| bad(line))?;
            let attrs = attrs.trim().strip_suffix(']').ok_or_else(|| bad(line))?;
            let value = attrs
                .trim()
                .strip_prefix("label=\"")
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| bad(line))?;
            labels.push((v, Some(unescape(value))));
        } else {
            let v = stmt.parse::<usize>().map_err(|_| bad(line))?;
            labels.push((v, None));
        }
    }
    let n = labels.len();
    let mut names = vec![None; n];
    for (v, l) in labels {
        if v >= n {
            return Err(Error::invalid(format!(
                "DOT node ids must be 0..{n}, found {v}"
            )));
        }
        names[v] = Some(l);
    }
    let names: Option<Vec<_>> = names.into_iter().collect::<Option<Vec<_>>>();
    let names = names.ok_or_else(|| Error::invalid("duplicate DOT node declaration"))?;
    let labels = if names.iter().all(Option::is_some) {
        Some(names.into_iter().map(Option::unwrap).collect())
    } else if names.iter().all(Option::is_none) {
        None
    } else {
        return Err(Error::invalid(
            "DOT nodes must be all labelled or all unlabelled",
        ));
    };
    Graph::from_edges(n, &edges, labels)
}
