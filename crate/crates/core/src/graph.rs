//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row of the adjacency matrix, so neighbourhood
//! intersections and unions are single machine-word operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices backed by a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

/// Simple undirected graph with vertex set `0..n`.
///
/// Rows are kept symmetric and irreflexive, and no bit at or above `n` is
/// ever set; every constructor re-checks this in debug builds.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let mask = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::LoopEdge(u));
            }
            for v in BitIter(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency rows not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let mask = VertexSet::full(self.n).0;
        self.adj.iter().enumerate().all(|(u, &row)| {
            row & !mask == 0
                && row >> u & 1 == 0
                && BitIter(row).all(|v| self.adj[v] >> u & 1 == 1)
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let full = VertexSet::full(n).0;
        Ok(Self::from_rows_unchecked(
            (0..n).map(|v| full & !(1 << v)).collect(),
        ))
    }

    /// Path `P_n` on vertices `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    /// Cycle `C_n` on vertices `0-1-..-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle length {n} < 3")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Complete bipartite graph with the `a` side listed first.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::new(a + b, &edges)
    }

    /// Disjoint union, vertices of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Self::from_rows_unchecked(adj))
    }

    /// A copy with one extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Self> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        if !nbrs.is_subset(VertexSet::full(self.n)) {
            return Err(Error::VertexOutOfRange {
                vertex: nbrs.difference(VertexSet::full(self.n)).min().unwrap_or(0),
                n: self.n,
            });
        }
        let mut adj = self.adj.clone();
        for v in nbrs {
            adj[v] |= 1 << self.n;
        }
        adj.push(nbrs.0);
        Ok(Self::from_rows_unchecked(adj))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        Self::from_rows_unchecked(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & full & !(1 << v))
                .collect(),
        )
    }

    /// Subgraph induced by `s`, vertices renumbered in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if let Some(v) = s.difference(self.vertices()).min() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let vs = s.to_vec();
        Ok(self.induced_on(&vs))
    }

    /// Subgraph induced by the listed vertices, numbered in list order.
    /// The list must be duplicate-free and in range.
    pub fn induced_on(&self, vs: &[usize]) -> Graph {
        let rows = vs
            .iter()
            .map(|&u| {
                vs.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = BitIter(self.adj[u]).fold(0u64, |acc, v| acc | 1 << perm[v]);
        }
        Self::from_rows_unchecked(adj)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// `n = 0` and `n = 1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_within(0, self.vertices()) == self.vertices()
    }

    pub fn is_set_connected(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }
}

/// Serialised as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::graph6::parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}
