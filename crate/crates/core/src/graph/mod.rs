//! Simple undirected d-regular graphs, edge boundaries and expansion.
//!
//! For a non-empty `S ⊊ V` the expansion is
//!
//! ```text
//!   φ(S) = |E(S, V∖S)| / (d · min(|S|, |V∖S|))
//! ```
//!
//! and the small-set expansion `φ_k(G)` is the minimum of `φ(S)` over all
//! non-empty `S` with `|S| ≤ k`. Callers choose `k` directly (usually
//! `⌊δn⌋`).

mod generate;
mod io;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::support::best_support;

pub use generate::{gen_planted_cut, gen_random_regular, GENERATION_RETRIES};
pub use io::{parse_graph, read_graph, write_graph};

/// A simple undirected d-regular graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularGraph {
    n: usize,
    d: usize,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists.
    neighbors: Vec<Vec<usize>>,
}

impl RegularGraph {
    /// Validates simplicity and regularity.
    pub fn new(n: usize, d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(param(format!("n and d must be positive (n={n}, d={d})")));
        }
        if d >= n {
            return Err(param(format!("degree {d} must be below vertex count {n}")));
        }
        if !(n * d).is_multiple_of(2) {
            return Err(param(format!("n·d = {} is odd", n * d)));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate edge {:?}", w[0])));
        }
        let mut neighbors = vec![Vec::with_capacity(d); n];
        for &(u, v) in &list {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        if let Some((vertex, adj)) = neighbors.iter().enumerate().find(|(_, a)| a.len() != d) {
            return Err(Error::InvalidInput(format!(
                "vertex {vertex} has degree {} (expected {d})",
                adj.len()
            )));
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Ok(Self {
            n,
            d,
            edges: list,
            neighbors,
        })
    }

    /// The cycle `C_n` (2-regular).
    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, 2, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The complete graph `K_n` ((n-1)-regular).
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, n.saturating_sub(1), edges)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(param(format!("degrees differ ({} vs {})", self.d, other.d)));
        }
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::new(self.n + other.n, self.d, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Edges with exactly one endpoint in the sorted slice `members`.
    pub(crate) fn boundary_of_sorted(&self, members: &[usize]) -> usize {
        members
            .iter()
            .flat_map(|&u| self.neighbors[u].iter())
            .filter(|v| members.binary_search(v).is_err())
            .count()
    }
}

/// A set of vertex ids, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members`; rejects ids `>= n`.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if let Some(&bad) = m.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInput(format!("vertex {bad} out of range for n={n}")));
        }
        Ok(Self(m))
    }

    /// Caller guarantees `members` is strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `V ∖ self` for a graph on `n` vertices.
    pub fn complement(&self, n: usize) -> Self {
        Self((0..n).filter(|v| !self.contains(*v)).collect())
    }

    /// 0/1 indicator vector of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<f64> {
        let mut x = vec![0.0; n];
        for &v in &self.0 {
            x[v] = 1.0;
        }
        x
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A cut side with its boundary size and expansion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutReport {
    pub set: VertexSet,
    pub boundary: usize,
    pub expansion: f64,
}

fn expansion_value(g: &RegularGraph, size: usize, boundary: usize) -> f64 {
    boundary as f64 / (g.d * size.min(g.n - size)) as f64
}

/// Boundary and expansion of `set` in `g`.
pub fn expansion(g: &RegularGraph, set: &VertexSet) -> Result<CutReport> {
    if set.is_empty() {
        return Err(Error::InvalidCut("set is empty".into()));
    }
    if set.len() >= g.n {
        return Err(Error::InvalidCut("set is the whole vertex set".into()));
    }
    if let Some(&bad) = set.members().last().filter(|&&v| v >= g.n) {
        return Err(Error::InvalidCut(format!("vertex {bad} out of range for n={}", g.n)));
    }
    let boundary = g.boundary_of_sorted(set.members());
    Ok(CutReport {
        set: set.clone(),
        boundary,
        expansion: expansion_value(g, set.len(), boundary),
    })
}

/// Exact `φ_k(G)` by enumerating every non-empty set of size at most `k`.
///
/// Ties go to the smallest set, then to the lexicographically smallest
/// member list.
pub fn min_expansion_small_sets(g: &RegularGraph, k: usize) -> Result<CutReport> {
    if k < 1 || 2 * k > g.n {
        return Err(param(format!("k={k} must lie in [1, n/2] for n={}", g.n)));
    }
    let mut best: Option<(usize, f64, Vec<usize>)> = None;
    for size in 1..=k {
        let found = best_support(
            g.n,
            size,
            |s| Some(g.boundary_of_sorted(s)),
            // Same size throughout, so fewer boundary edges is better.
            |a, b| b.cmp(a),
        );
        if let Some((boundary, set)) = found {
            let value = expansion_value(g, size, boundary);
            let replace = match &best {
                None => true,
                Some((_, v, _)) => value.total_cmp(v) == Ordering::Less,
            };
            if replace {
                best = Some((boundary, value, set));
            }
        }
    }
    let (boundary, expansion, set) = best.expect("k >= 1 yields at least one candidate");
    Ok(CutReport {
        set: VertexSet::from_sorted(set),
        boundary,
        expansion,
    })
}
