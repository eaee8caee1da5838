use crate::error::{Error, Result};
use crate::geometry::PolarityGraph;
use crate::graph::{is_moore_diam2, Graph};
use crate::vertex_set::VertexSet;

/// (N(u) ∪ N(v)) \ {u, v, w} for a k-regular Moore graph of diameter 2 with
/// k ≥ 3, v ∈ N(u) and w ∈ N(v) \ {u}. The set has 2k − 3 vertices.
pub fn moore_resolving(g: &Graph, u: usize, v: usize, w: usize) -> Result<Vec<usize>> {
    let k = is_moore_diam2(g)
        .ok_or_else(|| Error::invalid("graph is not a Moore graph of diameter 2"))?;
    if k < 3 {
        return Err(Error::invalid(format!(
            "the construction needs degree at least 3, got {k}"
        )));
    }
    for x in [u, v, w] {
        g.check_vertex(x)?;
    }
    if !g.adjacent(u, v) {
        return Err(Error::invalid(format!("{v} is not a neighbor of {u}")));
    }
    if w == u || !g.adjacent(v, w) {
        return Err(Error::invalid(format!("{w} is not in N({v}) minus {u}")));
    }
    let mut s = g.neighbor_set(u).union(g.neighbor_set(v));
    for x in [u, v, w] {
        s.remove(x);
    }
    Ok(s.to_vec())
}

/// [`moore_resolving`] with u = 0, v its least neighbor and w the least
/// neighbor of v other than u.
pub fn moore_resolving_default(g: &Graph) -> Result<Vec<usize>> {
    if g.order() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    let u = 0;
    let v = *g
        .neighbors(u)
        .first()
        .ok_or_else(|| Error::invalid("vertex 0 is isolated"))?;
    let w = *g
        .neighbors(v)
        .iter()
        .find(|&&x| x != u)
        .ok_or_else(|| Error::invalid("no valid third vertex"))?;
    moore_resolving(g, u, v, w)
}

/// (N(u) ∪ N(v)) \ {u, v} where u is the least vertex of degree q and v its
/// least neighbor, for a graph of order q² + q + 1.
pub fn polarity_resolving_graph(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    let q = (1..=n).find(|&q| q * q + q + 1 >= n).unwrap_or(0);
    if q < 2 || q * q + q + 1 != n {
        return Err(Error::invalid(format!(
            "order {n} is not q^2 + q + 1 for any q >= 2"
        )));
    }
    let u = (0..n)
        .find(|&x| g.degree(x) == q)
        .ok_or_else(|| Error::invalid(format!("no vertex of degree q = {q}")))?;
    let v = g.neighbors(u)[0];
    let mut s: VertexSet = g.neighbor_set(u).union(g.neighbor_set(v));
    s.remove(u);
    s.remove(v);
    Ok(s.to_vec())
}

/// The construction on ER(q), starting from the least absolute vertex.
pub fn polarity_resolving(pg: &PolarityGraph) -> Result<Vec<usize>> {
    let q = pg.q as usize;
    let u = pg
        .absolute
        .first()
        .ok_or_else(|| Error::invalid("no absolute vertex"))?;
    if pg.graph.degree(u) != q {
        return Err(Error::invalid(format!(
            "absolute vertex {u} does not have degree {q}"
        )));
    }
    polarity_resolving_graph(&pg.graph)
}
