//! Explicit automorphism lists for the vertex-transitive families, used to
//! prune isomorphic branches in the exhaustive searches.

use super::kneser::k_subsets;
use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A group of automorphisms of one graph, stored element by element.
/// `perms[0]` is always the identity.
#[derive(Debug, Clone)]
pub struct Symmetry {
    n: usize,
    perms: Vec<Vec<u32>>,
}

/// Largest ground set for which the full S_n action on Kneser vertices is
/// materialized (8! = 40320 permutations).
pub const KNESER_SYMMETRY_MAX_N: usize = 8;

impl Symmetry {
    /// Checks that every permutation is a bijection preserving adjacency.
    pub fn from_permutations(g: &Graph, perms: Vec<Vec<u32>>) -> Result<Symmetry> {
        let n = g.order();
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut all = vec![identity.clone()];
        for p in perms {
            if p.len() != n {
                return Err(Error::invalid(
                    "permutation length differs from graph order",
                ));
            }
            let mut seen = vec![false; n];
            for &x in &p {
                let x = x as usize;
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::invalid("not a permutation"));
                }
            }
            for (u, v) in g.edges() {
                if !g.adjacent(p[u] as usize, p[v] as usize) {
                    return Err(Error::invalid(format!(
                        "permutation does not preserve edge {u}-{v}"
                    )));
                }
            }
            if p != identity {
                all.push(p);
            }
        }
        all[1..].sort();
        all.dedup();
        Ok(Symmetry { n, perms: all })
    }

    pub fn trivial(n: usize) -> Symmetry {
        Symmetry {
            n,
            perms: vec![(0..n as u32).collect()],
        }
    }

    /// The dihedral group of `cycle_graph(n)`.
    pub fn cycle(g: &Graph) -> Result<Symmetry> {
        let n = g.order();
        let mut perms = Vec::with_capacity(2 * n);
        for r in 0..n {
            perms.push((0..n).map(|i| ((i + r) % n) as u32).collect());
            perms.push((0..n).map(|i| ((n + r - i) % n) as u32).collect());
        }
        Self::from_permutations(g, perms)
    }

    /// The S_n action on `kneser_graph(k, n)` induced by permuting [n].
    pub fn kneser(g: &Graph, k: usize, n: usize) -> Result<Symmetry> {
        if n > KNESER_SYMMETRY_MAX_N {
            return Err(Error::invalid(format!(
                "Kneser symmetry is only materialized for n <= {KNESER_SYMMETRY_MAX_N}"
            )));
        }
        let subsets = k_subsets(n, k);
        if subsets.len() != g.order() {
            return Err(Error::invalid(format!("graph is not K({k},{n})")));
        }
        let mut perms = Vec::new();
        let mut sigma: Vec<u16> = (1..=n as u16).collect();
        loop {
            let p = subsets
                .iter()
                .map(|s| {
                    let mut img: Vec<u16> = s
                        .elements()
                        .iter()
                        .map(|&e| sigma[e as usize - 1])
                        .collect();
                    img.sort_unstable();
                    let label = super::KneserLabel::new(img, n).expect("image is a k-subset");
                    label.rank(n) as u32
                })
                .collect();
            perms.push(p);
            if !next_permutation(&mut sigma) {
                break;
            }
        }
        Self::from_permutations(g, perms)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn permutations(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub fn apply(&self, index: usize, set: &VertexSet) -> VertexSet {
        let p = &self.perms[index];
        VertexSet::from_vertices(self.n, set.iter().map(|v| p[v] as usize))
    }

    /// Indices of the group elements mapping `set` onto itself.
    pub fn stabilizer(&self, set: &VertexSet) -> Vec<usize> {
        (0..self.perms.len())
            .filter(|&i| set.iter().all(|v| set.contains(self.perms[i][v] as usize)))
            .collect()
    }

    /// Least image of `set` under the group, with the index of an element
    /// achieving it.
    pub fn canonical(&self, set: &VertexSet) -> (VertexSet, usize) {
        let mut best = set.clone();
        let mut arg = 0;
        for i in 1..self.perms.len() {
            let img = self.apply(i, set);
            if img < best {
                best = img;
                arg = i;
            }
        }
        (best, arg)
    }

    /// Inverse of element `index` as a permutation.
    pub fn inverse(&self, index: usize) -> Vec<u32> {
        let p = &self.perms[index];
        let mut inv = vec![0u32; self.n];
        for (i, &x) in p.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        inv
    }
}

fn next_permutation(a: &mut [u16]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
