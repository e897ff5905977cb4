//! Exact clique number, independence number and chromatic number with
//! witnesses, odd hole / odd antihole search, and perfection tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};
use crate::graph6::to_graph6;

/// Evidence attached to a verdict. For `Coloring`, `vertices[v]` is the
/// colour of vertex `v`; for every other kind it lists host vertices
/// (cycle order for holes and antiholes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    OddHole,
    /// Vertices in the order of the odd cycle they induce in the complement.
    OddAntihole,
    /// An induced subgraph with chromatic number above its clique number.
    ChiExceedsOmega,
    Clique,
    IndependentSet,
    Coloring,
    /// Parts of an inflation, flattened; see `InflationPartition`.
    InflationPartition,
}

/// Maximum clique by branch and bound with a greedy colouring bound.
///
/// The colouring bound is computed greedily in input order and branching is
/// deterministic, so the witness is reproducible.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = VertexSet::EMPTY;
    let mut current = VertexSet::EMPTY;
    expand_clique(g, g.vertices().bits(), &mut current, &mut best);
    (best.len(), best)
}

/// Greedy sequential colouring of `cand`; returns vertices in colouring
/// order together with the colour (1-based) each received.
fn colour_bound(g: &Graph, cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.row(v);
            uncoloured &= !(1 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand_clique(g: &Graph, mut cand: u64, current: &mut VertexSet, best: &mut VertexSet) {
    let (order, bounds) = colour_bound(g, cand);
    // Highest colour first: a vertex of colour c closes at most c more
    // clique vertices among the candidates still in play.
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.insert(v);
        let next = cand & g.row(v);
        if next == 0 {
            if current.len() > best.len() {
                *best = *current;
            }
        } else {
            expand_clique(g, next, current, best);
        }
        current.remove(v);
        cand &= !(1 << v);
    }
}

pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}

/// Whether `colouring` is proper and uses colours `0..k` only.
pub fn is_proper_colouring(g: &Graph, colouring: &[usize], k: usize) -> bool {
    colouring.len() == g.n()
        && colouring.iter().all(|&c| c < k)
        && g.edges().iter().all(|&(u, v)| colouring[u] != colouring[v])
}

/// Exact k-colourability with DSATUR branching.
///
/// The vertices of `seed` (a clique) are precoloured `0..|seed|` in ascending
/// vertex order. Among uncoloured vertices the one with most distinct
/// neighbour colours is branched on, ties by uncoloured degree, then lowest
/// index; colours are tried ascending and a fresh colour is only opened as the
/// next unused index.
pub fn k_colouring(g: &Graph, k: usize, seed: VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    // n <= 64 colours always suffice
    let k = k.min(64);
    if k == 0 || seed.len() > k {
        return None;
    }
    let mut st = Dsatur {
        g,
        k,
        colour: vec![usize::MAX; n],
        nbr_count: vec![[0u8; 64]; n],
        forbidden: vec![0u64; n],
        uncoloured: g.vertices().bits(),
    };
    for (c, v) in seed.iter().enumerate() {
        st.assign(v, c);
    }
    let used = seed.len();
    if st.solve(used) {
        Some(st.colour)
    } else {
        None
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    nbr_count: Vec<[u8; 64]>,
    forbidden: Vec<u64>,
    uncoloured: u64,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured &= !(1 << v);
        for u in BitIter(self.g.row(v)) {
            self.nbr_count[u][c] += 1;
            self.forbidden[u] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        self.uncoloured |= 1 << v;
        for u in BitIter(self.g.row(v)) {
            self.nbr_count[u][c] -= 1;
            if self.nbr_count[u][c] == 0 {
                self.forbidden[u] &= !(1 << c);
            }
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncoloured == 0 {
            return true;
        }
        let all = if self.k == 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in BitIter(self.uncoloured) {
            let sat = (self.forbidden[v] & all).count_ones() as usize;
            if sat == self.k {
                return false;
            }
            let deg = (self.g.row(v) & self.uncoloured).count_ones() as usize;
            if pick == usize::MAX || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        let v = pick;
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Chromatic number and a colouring using exactly that many colours.
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let (omega, clique) = clique_number(g);
    for k in omega..=g.n() {
        if let Some(c) = k_colouring(g, k, clique) {
            return (k, c);
        }
    }
    unreachable!("every graph is n-colourable")
}

pub fn is_omega_colourable(g: &Graph) -> bool {
    let (omega, clique) = clique_number(g);
    k_colouring(g, omega, clique).is_some()
}

/// Exact invariants of one graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub max_degree: usize,
    pub clique: Vec<usize>,
    pub independent_set: Vec<usize>,
    pub colouring: Vec<usize>,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        let (omega, clique) = clique_number(g);
        let (alpha, indep) = independence_number(g);
        let (chi, colouring) = chromatic_number(g);
        InvariantReport {
            omega,
            alpha,
            chi,
            max_degree: g.max_degree(),
            clique: clique.to_vec(),
            independent_set: indep.to_vec(),
            colouring,
        }
    }
}

/// Depth-first growth of induced paths that close into chordless cycles.
///
/// Every cycle is reported once: it starts at its least vertex and its second
/// vertex is smaller than its last. Starting vertices and extensions are
/// tried in ascending order, so cycles of a given length arrive in
/// lexicographic order. The callback returns `false` to stop the search.
pub struct CycleSearch<'a> {
    g: &'a Graph,
    min_len: usize,
    max_len: usize,
}

impl<'a> CycleSearch<'a> {
    pub fn new(g: &'a Graph, min_len: usize, max_len: usize) -> Self {
        CycleSearch { g, min_len: min_len.max(4), max_len }
    }

    /// Returns `false` if the callback stopped the search.
    pub fn for_each(&self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut path = Vec::with_capacity(self.max_len);
        for start in 0..self.g.n() {
            path.push(start);
            let above = !(((1u64 << start) - 1) | (1u64 << start));
            let cont = self.grow(&mut path, 1 << start, 0, above, visit);
            path.pop();
            if !cont {
                return false;
            }
        }
        true
    }

    fn grow(
        &self,
        path: &mut Vec<usize>,
        on_path: u64,
        interior_nbrs: u64,
        above: u64,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let m = path.len();
        let start = path[0];
        let last = path[m - 1];
        let cand = self.g.row(last) & !on_path & !interior_nbrs & above;
        let next_interior = if m >= 2 { interior_nbrs | self.g.row(last) } else { interior_nbrs };
        for w in BitIter(cand) {
            let closes = m >= 2 && self.g.has_edge(w, start);
            if closes {
                let len = m + 1;
                if len >= self.min_len && len <= self.max_len && path[1] < w {
                    path.push(w);
                    let cont = visit(path);
                    path.pop();
                    if !cont {
                        return false;
                    }
                }
                continue;
            }
            if m + 1 >= self.max_len {
                continue;
            }
            path.push(w);
            let cont = self.grow(path, on_path | 1 << w, next_interior, above, visit);
            path.pop();
            if !cont {
                return false;
            }
        }
        true
    }

    /// First cycle in search order, if any.
    pub fn first(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each(&mut |c| {
            found = Some(c.to_vec());
            false
        });
        found
    }
}

/// Shortest odd hole (length at least 5), lexicographically least among the
/// shortest, as a vertex sequence in cycle order.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    (5..=g.n()).step_by(2).find_map(|len| CycleSearch::new(g, len, len).first())
}

/// An odd antihole, given in the cycle order of the complement. `C_5` is
/// reported as its own antihole.
pub fn find_odd_antihole(g: &Graph) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement())
}

/// Whether `cycle` lists a chordless cycle of `g` in order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let set = VertexSet::from_vertices(cycle.iter().copied());
    k >= 3
        && set.len() == k
        && cycle.iter().all(|&v| v < g.n())
        && (0..k).all(|i| {
            let expected = VertexSet::from_vertices([cycle[(i + 1) % k], cycle[(i + k - 1) % k]]);
            g.neighbors(cycle[i]).intersection(set) == expected
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PerfectionMethod {
    /// No odd hole and no odd antihole.
    Spgt,
    /// `chi = omega` on every induced subgraph.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub method: PerfectionMethod,
    pub certificate: Option<Certificate>,
}

/// Largest graph accepted by the direct (all induced subgraphs) test.
pub const DIRECT_LIMIT: usize = 14;

pub fn is_perfect(g: &Graph, method: PerfectionMethod) -> Result<PerfectionVerdict> {
    match method {
        PerfectionMethod::Spgt => Ok(perfect_by_holes(g)),
        PerfectionMethod::Direct => perfect_by_definition(g),
    }
}

fn perfect_by_holes(g: &Graph) -> PerfectionVerdict {
    let certificate = find_odd_hole(g)
        .map(|c| Certificate { kind: CertificateKind::OddHole, vertices: c })
        .or_else(|| {
            find_odd_antihole(g).map(|c| Certificate { kind: CertificateKind::OddAntihole, vertices: c })
        });
    PerfectionVerdict { perfect: certificate.is_none(), method: PerfectionMethod::Spgt, certificate }
}

/// Tests connected induced subgraphs on at least 5 vertices, smallest first.
/// Graphs on at most 4 vertices are perfect, and a disconnected graph has
/// `chi = omega` whenever each component does.
fn perfect_by_definition(g: &Graph) -> Result<PerfectionVerdict> {
    let n = g.n();
    if n > DIRECT_LIMIT {
        return Err(Error::DirectTooLarge { n, limit: DIRECT_LIMIT });
    }
    let mut subsets: Vec<u64> = (0u64..1 << n).filter(|s| s.count_ones() >= 5).collect();
    subsets.sort_by_key(|&s| (s.count_ones(), s.reverse_bits()));
    for s in subsets {
        let set = VertexSet(s);
        if !g.is_set_connected(set) {
            continue;
        }
        let h = g.induced_subgraph(set)?;
        if !is_omega_colourable(&h) {
            return Ok(PerfectionVerdict {
                perfect: false,
                method: PerfectionMethod::Direct,
                certificate: Some(Certificate { kind: CertificateKind::ChiExceedsOmega, vertices: set.to_vec() }),
            });
        }
    }
    Ok(PerfectionVerdict { perfect: true, method: PerfectionMethod::Direct, certificate: None })
}

/// Re-checks a certificate against its host from scratch.
pub fn certificate_holds(g: &Graph, cert: &Certificate) -> bool {
    let vs = &cert.vertices;
    match cert.kind {
        CertificateKind::OddHole => vs.len() >= 5 && vs.len() % 2 == 1 && is_induced_cycle(g, vs),
        CertificateKind::OddAntihole => {
            vs.len() >= 5 && vs.len() % 2 == 1 && is_induced_cycle(&g.complement(), vs)
        }
        CertificateKind::ChiExceedsOmega => {
            vs.iter().all(|&v| v < g.n())
                && !is_omega_colourable(&g.induced_on(vs))
        }
        CertificateKind::Clique => g.is_clique(VertexSet::from_vertices(vs.iter().copied())),
        CertificateKind::IndependentSet => {
            g.is_independent(VertexSet::from_vertices(vs.iter().copied()))
        }
        CertificateKind::Coloring => {
            let k = vs.iter().max().map_or(0, |m| m + 1);
            is_proper_colouring(g, vs, k)
        }
        CertificateKind::InflationPartition => vs.len() == g.n(),
    }
}

/// Parts of a complete multipartite graph (the components of its
/// complement, ordered by least vertex), or `None`.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<VertexSet>> {
    let parts = g.complement().components();
    parts
        .iter()
        .all(|&p| g.is_independent(p))
        .then_some(parts)
}

/// The per-graph record behind the `check` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub max_degree: usize,
    pub perfect: bool,
    pub certificate: Option<Certificate>,
    pub clique: Vec<usize>,
    pub independent_set: Vec<usize>,
    pub colouring: Vec<usize>,
}

impl GraphReport {
    pub fn compute(g: &Graph) -> Self {
        let inv = InvariantReport::compute(g);
        let verdict = perfect_by_holes(g);
        GraphReport {
            graph6: to_graph6(g),
            n: g.n(),
            omega: inv.omega,
            alpha: inv.alpha,
            chi: inv.chi,
            max_degree: inv.max_degree,
            perfect: verdict.perfect,
            certificate: verdict.certificate,
            clique: inv.clique,
            independent_set: inv.independent_set,
            colouring: inv.colouring,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{pattern_graph, PatternId};

    fn c(n: usize) -> Graph {
        Graph::cycle(n).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(clique_number(&c(5)).0, 2);
        assert_eq!(chromatic_number(&c(7)).0, 3);
        assert_eq!(chromatic_number(&c(6)).0, 2);
        assert_eq!(independence_number(&c(7)).0, 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).0, 0);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()).0, 1);
    }

    #[test]
    fn omega_colourable_examples() {
        assert!(is_omega_colourable(&Graph::path(4).unwrap()));
        assert!(is_omega_colourable(&Graph::complete(5).unwrap()));
        assert!(!is_omega_colourable(&c(5)));
    }

    #[test]
    fn odd_hole_examples() {
        assert_eq!(find_odd_hole(&c(5)), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_odd_hole(&c(8)), None);
        assert_eq!(find_odd_hole(&Graph::complete_bipartite(3, 4).unwrap()), None);
        // C7 with one vertex doubled (vertex 7 twin of 0)
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(7, 0), (7, 1), (7, 6)]);
        let g = Graph::new(8, &edges).unwrap();
        let hole = find_odd_hole(&g).unwrap();
        assert_eq!(hole.len(), 7);
        assert!(is_induced_cycle(&g, &hole));
    }

    #[test]
    fn odd_antihole_examples() {
        let ah7 = c(7).complement();
        let w = find_odd_antihole(&ah7).unwrap();
        assert_eq!(w.len(), 7);
        assert!(find_odd_antihole(&c(5)).is_some());
        assert_eq!(find_odd_antihole(&Graph::path(6).unwrap()), None);
    }

    #[test]
    fn perfection_verdicts() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_perfect(&p4, PerfectionMethod::Spgt).unwrap().perfect);
        assert!(is_perfect(&p4, PerfectionMethod::Direct).unwrap().perfect);
        let v = is_perfect(&c(7), PerfectionMethod::Spgt).unwrap();
        assert!(!v.perfect);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.kind, CertificateKind::OddHole);
        assert!(certificate_holds(&c(7), &cert));
        let d = is_perfect(&c(7), PerfectionMethod::Direct).unwrap();
        assert!(!d.perfect && certificate_holds(&c(7), d.certificate.as_ref().unwrap()));
        assert!(matches!(
            is_perfect(&Graph::empty(15).unwrap(), PerfectionMethod::Direct),
            Err(Error::DirectTooLarge { .. })
        ));
    }

    #[test]
    fn multipartite_recognition() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let parts = complete_multipartite_parts(&k23).unwrap();
        let sizes: Vec<_> = parts.iter().map(|p| p.len()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(complete_multipartite_parts(&c(4)).unwrap().len(), 2);
        assert!(complete_multipartite_parts(&pattern_graph(&PatternId::Paw).unwrap()).is_none());
    }

    #[test]
    fn colouring_witness_is_exact() {
        let g = pattern_graph(&PatternId::FiveCap).unwrap();
        let (chi, col) = chromatic_number(&g);
        assert!(is_proper_colouring(&g, &col, chi));
        assert_eq!(col.iter().max().unwrap() + 1, chi);
    }

    #[test]
    fn cycle_search_enumerates_each_cycle_once() {
        // K4 has no induced cycles of length >= 4; C6 exactly one.
        let mut count = 0;
        CycleSearch::new(&Graph::complete(4).unwrap(), 4, 4).for_each(&mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 0);
        let mut seen = Vec::new();
        CycleSearch::new(&c(6), 4, 6).for_each(&mut |cy| {
            seen.push(cy.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1, 2, 3, 4, 5]]);
        // K_{3,3}: nine induced 4-cycles
        let mut count = 0;
        CycleSearch::new(&Graph::complete_bipartite(3, 3).unwrap(), 4, 6).for_each(&mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 9);
    }
}
