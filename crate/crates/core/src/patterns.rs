//! Named small graphs, induced-subgraph containment, and the shape of a
//! vertex's neighbourhood on an induced cycle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A named forbidden-subgraph pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    /// `K_{1,3}`
    Claw,
    /// Triangle with pendant vertices on two distinct corners.
    Bull,
    /// Two triangles sharing a vertex.
    Hourglass,
    /// `K_4` minus an edge.
    Diamond,
    /// `Z_1`: triangle plus a pendant vertex.
    Paw,
    /// `Z_2`: triangle plus a pendant path of length 2.
    Hammer,
    /// `C_6` plus one chord between vertices at distance 2.
    FiveCap,
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `kK_1`
    Independent(usize),
    /// `K_{2,3}`
    K23,
    /// Complement of `C_k`, `k >= 4`.
    Antihole(usize),
    /// Disjoint union of two or more patterns.
    Union(Vec<PatternId>),
}

impl PatternId {
    pub fn two_k2() -> Self {
        PatternId::Union(vec![PatternId::Complete(2), PatternId::Complete(2)])
    }

    pub fn k1_k3() -> Self {
        PatternId::Union(vec![PatternId::Complete(1), PatternId::Complete(3)])
    }

    pub fn two_k1_k2() -> Self {
        PatternId::Union(vec![PatternId::Independent(2), PatternId::Complete(2)])
    }

    pub fn k2_k3() -> Self {
        PatternId::Union(vec![PatternId::Complete(2), PatternId::Complete(3)])
    }

    pub fn graph(&self) -> Result<Graph> {
        pattern_graph(self)
    }

    /// Number of vertices of the expanded graph.
    pub fn order(&self) -> usize {
        use PatternId::*;
        match self {
            Claw | Diamond | Paw => 4,
            Bull | Hourglass | Hammer | K23 => 5,
            FiveCap => 6,
            Complete(k) | Path(k) | Cycle(k) | Independent(k) | Antihole(k) => *k,
            Union(parts) => parts.iter().map(PatternId::order).sum(),
        }
    }
}

/// Expands a pattern to its concrete graph.
pub fn pattern_graph(p: &PatternId) -> Result<Graph> {
    use PatternId::*;
    let bad = |msg: String| Err(Error::InvalidPattern(msg));
    match p {
        Claw => Graph::complete_bipartite(1, 3),
        Bull => Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]),
        Hourglass => Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        Diamond => Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
        Paw => Graph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]),
        Hammer => Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]),
        FiveCap => Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]),
        Complete(k) if *k >= 1 => Graph::complete(*k),
        Path(k) if *k >= 1 => Graph::path(*k),
        Cycle(k) if *k >= 3 => Graph::cycle(*k),
        Independent(k) if *k >= 1 => Graph::empty(*k),
        K23 => Graph::complete_bipartite(2, 3),
        Antihole(k) if *k >= 4 => Ok(Graph::cycle(*k)?.complement()),
        Union(parts) if parts.len() >= 2 => {
            let mut g = Graph::empty(0)?;
            for part in parts {
                g = g.disjoint_union(&pattern_graph(part)?)?;
            }
            Ok(g)
        }
        Complete(k) | Path(k) | Independent(k) => bad(format!("{p}: k = {k} must be at least 1")),
        Cycle(k) => bad(format!("{p}: cycle length {k} must be at least 3")),
        Antihole(k) => bad(format!("{p}: antihole length {k} must be at least 4")),
        Union(_) => bad("a union needs at least two parts".into()),
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternId::*;
        match self {
            Claw => f.write_str("K1_3"),
            Bull => f.write_str("B"),
            Hourglass => f.write_str("H"),
            Diamond => f.write_str("D"),
            Paw => f.write_str("Z1"),
            Hammer => f.write_str("Z2"),
            FiveCap => f.write_str("THETA"),
            Complete(k) => write!(f, "K{k}"),
            Path(k) => write!(f, "P{k}"),
            Cycle(k) => write!(f, "C{k}"),
            Independent(k) => write!(f, "{k}K1"),
            K23 => f.write_str("K2_3"),
            Antihole(k) => write!(f, "AH{k}"),
            Union(parts) => {
                // runs of equal parts print with a multiplicity prefix
                let mut i = 0;
                while i < parts.len() {
                    let mut j = i + 1;
                    while j < parts.len() && parts[j] == parts[i] {
                        j += 1;
                    }
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    if j - i > 1 {
                        write!(f, "{}", j - i)?;
                    }
                    write!(f, "{}", parts[i])?;
                    i = j;
                }
                Ok(())
            }
        }
    }
}

fn parse_atom(tok: &str) -> Result<PatternId> {
    use PatternId::*;
    let num = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::InvalidPattern(format!("bad size in {tok:?}")))
    };
    let atom = match tok {
        "K1_3" | "CLAW" => Claw,
        "B" | "BULL" => Bull,
        "H" | "HOURGLASS" => Hourglass,
        "D" | "DIAMOND" => Diamond,
        "Z1" | "PAW" => Paw,
        "Z2" | "HAMMER" => Hammer,
        "THETA" => FiveCap,
        "K2_3" => K23,
        _ if tok.starts_with("AH") => Antihole(num(&tok[2..])?),
        _ if tok.starts_with('K') => Complete(num(&tok[1..])?),
        _ if tok.starts_with('P') => Path(num(&tok[1..])?),
        _ if tok.starts_with('C') => Cycle(num(&tok[1..])?),
        _ => return Err(Error::InvalidPattern(format!("unknown pattern {tok:?}"))),
    };
    pattern_graph(&atom)?;
    Ok(atom)
}

impl FromStr for PatternId {
    type Err = Error;

    /// Accepts the CLI tokens: `K1_3, B, H, D, Z1, Z2, THETA, P<k>, C<k>,
    /// K<k>, <k>K1, 2K2, K1+K3, 2K1+K2, K2+K3, K2_3, AH<k>`. Union terms are
    /// joined by `+` and may carry a multiplicity prefix.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        let mut parts = Vec::new();
        for term in s.split('+') {
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let (mult, atom) = term.split_at(digits);
            let mult = if mult.is_empty() {
                1
            } else {
                mult.parse::<usize>()
                    .ok()
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| Error::InvalidPattern(format!("bad multiplicity in {term:?}")))?
            };
            let atom = parse_atom(atom)?;
            if atom == PatternId::Complete(1) && mult > 1 {
                parts.push(PatternId::Independent(mult));
            } else {
                parts.extend(std::iter::repeat_n(atom, mult));
            }
        }
        let p = match parts.len() {
            0 => return Err(Error::InvalidPattern("empty pattern".into())),
            1 => parts.pop().expect("one part"),
            _ => PatternId::Union(parts),
        };
        pattern_graph(&p)?;
        Ok(p)
    }
}

impl Serialize for PatternId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `embedding[i]` is the host vertex playing pattern vertex `i`.
pub type Embedding = Vec<usize>;

/// Backtracking matcher for one pattern graph.
///
/// Pattern vertices are assigned in descending-degree order (ties by index)
/// and host candidates are tried in ascending order, so the first embedding
/// found is the lexicographically least in that assignment order.
pub struct Matcher<'p> {
    pattern: &'p Graph,
    order: Vec<usize>,
}

impl<'p> Matcher<'p> {
    pub fn new(pattern: &'p Graph) -> Self {
        let mut order: Vec<usize> = (0..pattern.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
        Matcher { pattern, order }
    }

    pub fn find(&self, host: &Graph) -> Option<Embedding> {
        self.find_with(host, None)
    }

    /// An embedding whose image contains `v`.
    pub fn find_through(&self, host: &Graph, v: usize) -> Option<Embedding> {
        (0..self.pattern.n()).find_map(|p| self.find_with(host, Some((p, v))))
    }

    fn find_with(&self, host: &Graph, fixed: Option<(usize, usize)>) -> Option<Embedding> {
        let k = self.pattern.n();
        if k > host.n() {
            return None;
        }
        if let Some((p, v)) = fixed {
            if host.degree(v) < self.pattern.degree(p) {
                return None;
            }
        }
        let mut map = vec![usize::MAX; k];
        if self.extend(host, 0, &mut map, 0, fixed) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(
        &self,
        host: &Graph,
        depth: usize,
        map: &mut [usize],
        used: u64,
        fixed: Option<(usize, usize)>,
    ) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = host.vertices().bits() & !used;
        for &q in &self.order[..depth] {
            let hq = host.row(map[q]);
            cand &= if self.pattern.has_edge(p, q) { hq } else { !hq };
        }
        match fixed {
            Some((fp, fv)) if fp == p => cand &= 1 << fv,
            Some((_, fv)) => cand &= !(1 << fv),
            None => {}
        }
        let need = self.pattern.degree(p);
        for h in VertexSet(cand) {
            if host.degree(h) < need {
                continue;
            }
            map[p] = h;
            if self.extend(host, depth + 1, map, used | 1 << h, fixed) {
                return true;
            }
        }
        map[p] = usize::MAX;
        false
    }
}

pub fn find_induced(g: &Graph, p: &PatternId) -> Result<Option<Embedding>> {
    let pg = pattern_graph(p)?;
    Ok(Matcher::new(&pg).find(g))
}

pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    Matcher::new(h).find(g).is_some()
}

pub fn is_free(g: &Graph, ps: &[PatternId]) -> Result<bool> {
    for p in ps {
        if find_induced(g, p)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pre-expanded pattern list for repeated freeness tests.
pub struct PatternSet {
    graphs: Vec<Graph>,
}

impl PatternSet {
    pub fn new(ps: &[PatternId]) -> Result<Self> {
        Ok(PatternSet { graphs: ps.iter().map(pattern_graph).collect::<Result<_>>()? })
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        self.graphs.iter().all(|p| Matcher::new(p).find(g).is_none())
    }

    /// Freeness of `g` given that `g - v` is already known to be free.
    pub fn is_free_through(&self, g: &Graph, v: usize) -> bool {
        self.graphs.iter().all(|p| Matcher::new(p).find_through(g, v).is_none())
    }
}

/// Isomorphism type of the subgraph induced by `N(x) ∩ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NeighborhoodShape {
    K2,
    P3,
    P4,
    C5,
    TwoK2,
    None,
    Other,
}

/// Cycle order of `c` if it induces a chordless cycle, else `None`.
pub fn cycle_order(g: &Graph, c: VertexSet) -> Option<Vec<usize>> {
    if c.len() < 3 || c.iter().any(|v| g.neighbors(v).intersection(c).len() != 2) {
        return None;
    }
    if !g.is_set_connected(c) {
        return None;
    }
    let start = c.min()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).intersection(c).min()?;
    while cur != start {
        order.push(cur);
        let next = g.neighbors(cur).intersection(c).difference(VertexSet::singleton(prev)).min()?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Classifies how `x` sees the induced cycle `c` (length at least 5).
///
/// `Other` only arises when the host contains a claw.
pub fn classify_cycle_neighborhood(g: &Graph, c: VertexSet, x: usize) -> Result<NeighborhoodShape> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if let Some(v) = c.difference(g.vertices()).min() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if c.contains(x) {
        return Err(Error::VertexOnCycle(x));
    }
    if c.len() < 5 || cycle_order(g, c).is_none() {
        return Err(Error::NotACycle);
    }
    let s = g.neighbors(x).intersection(c);
    if s.is_empty() {
        return Ok(NeighborhoodShape::None);
    }
    let h = g.induced_subgraph(s)?;
    let candidates = [
        (NeighborhoodShape::K2, Graph::complete(2)?),
        (NeighborhoodShape::P3, Graph::path(3)?),
        (NeighborhoodShape::P4, Graph::path(4)?),
        (NeighborhoodShape::C5, Graph::cycle(5)?),
        (NeighborhoodShape::TwoK2, pattern_graph(&PatternId::two_k2())?),
    ];
    let shape = candidates
        .iter()
        .find(|(_, p)| is_isomorphic(&h, p))
        .map_or(NeighborhoodShape::Other, |(s, _)| *s);
    debug_assert!(
        shape != NeighborhoodShape::Other || find_induced(g, &PatternId::Claw).ok().flatten().is_some(),
        "neighbourhood outside the claw-free shapes in a claw-free graph"
    );
    Ok(shape)
}
