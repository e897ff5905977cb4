//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! A graph on `n` vertices is produced from its canonical parent, the graph
//! obtained by deleting the vertex that canonical labelling places last (up
//! to automorphism). Children of one parent are deduplicated locally; children
//! of distinct parents are never isomorphic, so no global table is needed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_label, same_orbit, CanonicalLabel};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::independence_number;
use crate::patterns::{PatternId, PatternSet};

/// Largest vertex count the enumerator accepts.
pub const MAX_N: usize = 11;
/// Largest pattern usable as a hereditary prune.
pub const MAX_PRUNE_PATTERN: usize = 7;
/// Largest vertex count for the brute-force oracle.
pub const MAX_ORACLE_N: usize = 7;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub max_n: usize,
    pub connected_only: bool,
    /// Forbidden induced subgraphs; pruned during generation.
    pub free_of: Vec<PatternId>,
    /// Applied at emission only.
    pub min_alpha: Option<usize>,
    /// Drops `C_n` for odd `n >= 3`; applied at emission only.
    pub exclude_odd_cycles: bool,
}

impl EnumerationConfig {
    pub fn new(max_n: usize) -> Self {
        EnumerationConfig { max_n, ..Default::default() }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn free_of(mut self, ps: Vec<PatternId>) -> Self {
        self.free_of = ps;
        self
    }

    pub fn min_alpha(mut self, a: usize) -> Self {
        self.min_alpha = Some(a);
        self
    }

    pub fn exclude_odd_cycles(mut self) -> Self {
        self.exclude_odd_cycles = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_n > MAX_N {
            return Err(Error::EnumerationBounds(format!("max_n {} exceeds {MAX_N}", self.max_n)));
        }
        if let Some(p) = self.free_of.iter().find(|p| p.order() > MAX_PRUNE_PATTERN) {
            return Err(Error::EnumerationBounds(format!(
                "pattern {p} has more than {MAX_PRUNE_PATTERN} vertices"
            )));
        }
        Ok(())
    }

    /// The non-hereditary filters.
    pub fn emits(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected())
            && (!self.exclude_odd_cycles || !is_odd_cycle(g))
            && self.min_alpha.is_none_or(|a| independence_number(g).0 >= a)
    }
}

/// Whether `g` is `C_n` for some odd `n >= 3`.
pub fn is_odd_cycle(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && n % 2 == 1 && (0..n).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Visits one representative (in canonical labelling) of every isomorphism
/// class on `1..=max_n` vertices that satisfies `config`, in increasing
/// order of `n`. Returns the number of graphs visited.
pub fn enumerate(config: &EnumerationConfig, mut visit: impl FnMut(&Graph)) -> Result<usize> {
    let mut count = 0;
    for level in Levels::new(config)? {
        for g in level.iter().filter(|g| config.emits(g)) {
            visit(g);
            count += 1;
        }
    }
    Ok(count)
}

/// Collects the emitted graphs, grouped by vertex count (index `n - 1`).
pub fn enumerate_by_order(config: &EnumerationConfig) -> Result<Vec<Vec<Graph>>> {
    Levels::new(config)?
        .map(|level| Ok(level.into_iter().filter(|g| config.emits(g)).collect()))
        .collect()
}

/// Iterator over generation levels; level `n` holds every pattern-free class
/// on `n` vertices, including those the emission filters reject.
pub struct Levels {
    patterns: PatternSet,
    max_n: usize,
    next: Option<Vec<Graph>>,
}

impl Levels {
    pub fn new(config: &EnumerationConfig) -> Result<Self> {
        config.validate()?;
        let patterns = PatternSet::new(&config.free_of)?;
        let k1 = Graph::empty(1)?;
        let first = if config.max_n == 0 {
            None
        } else if patterns.is_free(&k1) {
            Some(vec![k1])
        } else {
            Some(Vec::new())
        };
        Ok(Levels { patterns, max_n: config.max_n, next: first })
    }
}

impl Iterator for Levels {
    type Item = Vec<Graph>;

    fn next(&mut self) -> Option<Vec<Graph>> {
        let current = self.next.take()?;
        let n = current.first().map(Graph::n);
        if let Some(n) = n {
            if n < self.max_n {
                let patterns = &self.patterns;
                let children: Vec<Vec<Graph>> =
                    current.par_iter().map(|p| children_of(p, patterns)).collect();
                self.next = Some(children.into_iter().flatten().collect());
            }
        }
        Some(current)
    }
}

/// Canonical children of `parent`: one per isomorphism class of one-vertex
/// extensions whose new vertex is the canonical deletion vertex.
pub fn children_of(parent: &Graph, patterns: &PatternSet) -> Vec<Graph> {
    let m = parent.n();
    let v = m;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        let g = parent.with_vertex(VertexSet(mask)).expect("capacity checked by MAX_N");
        if !patterns.is_empty() && !patterns.is_free_through(&g, v) {
            continue;
        }
        let canon = canonical_form(&g);
        let w = canon.last_vertex().expect("nonempty");
        if w != v && !same_orbit(&g, v, w) {
            continue;
        }
        if seen.insert(canon.graph.clone()) {
            out.push(canon.graph);
        }
    }
    out
}

/// Every labelled graph on `n` vertices, deduplicated by canonical label.
/// Exponential; a test oracle only.
pub fn oracle_enumerate(max_n: usize) -> Result<Vec<Vec<(CanonicalLabel, Graph)>>> {
    if max_n > MAX_ORACLE_N {
        return Err(Error::EnumerationBounds(format!("oracle limited to n <= {MAX_ORACLE_N}")));
    }
    (1..=max_n)
        .map(|n| {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let total = 1u64 << pairs.len();
            let mut classes: Vec<(CanonicalLabel, Graph)> = (0..total)
                .into_par_iter()
                .fold(
                    std::collections::BTreeMap::new,
                    |mut acc, bits| {
                        let edges: Vec<_> =
                            pairs.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, &e)| e).collect();
                        let g = Graph::new(n, &edges).expect("in range");
                        acc.entry(canonical_label(&g)).or_insert(g);
                        acc
                    },
                )
                .reduce(std::collections::BTreeMap::new, |mut a, b| {
                    for (k, g) in b {
                        a.entry(k).or_insert(g);
                    }
                    a
                })
                .into_iter()
                .collect();
            classes.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(classes)
        })
        .collect()
}
