//! Canonical labelling by colour refinement plus individualisation search.
//!
//! Every leaf of the search tree is a discrete ordered partition, i.e. a
//! relabelling of the graph; the canonical form is the lexicographically
//! least relabelled adjacency among all leaves. Subtrees that are images of
//! an explored subtree under an already discovered automorphism are skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{BitIter, Graph};
use crate::graph6::to_graph6;

/// graph6 string of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CanonicalLabel(pub String);

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canon {
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    /// The relabelled graph.
    pub graph: Graph,
    /// Sizes of the initial colour classes, in colour order.
    pub class_sizes: Vec<usize>,
}

impl Canon {
    pub fn label(&self) -> CanonicalLabel {
        CanonicalLabel(to_graph6(&self.graph))
    }

    /// The vertex placed last in canonical order.
    pub fn last_vertex(&self) -> Option<usize> {
        let n = self.perm.len();
        self.perm.iter().position(|&p| p + 1 == n)
    }
}

pub fn canonical_form(g: &Graph) -> Canon {
    canonical_form_coloured(g, &vec![0; g.n()])
}

/// Canonical form of a vertex-coloured graph. Colours are compared by value;
/// isomorphisms must map each colour class onto the class of equal rank.
pub fn canonical_form_coloured(g: &Graph, colours: &[usize]) -> Canon {
    assert_eq!(colours.len(), g.n(), "one colour per vertex");
    let mut distinct: Vec<usize> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut col: Vec<u32> = colours
        .iter()
        .map(|c| distinct.binary_search(c).expect("present") as u32)
        .collect();
    let class_sizes = distinct
        .iter()
        .map(|d| colours.iter().filter(|&c| c == d).count())
        .collect();
    if g.n() == 0 {
        return Canon { perm: Vec::new(), graph: g.clone(), class_sizes };
    }
    refine(g, &mut col);
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    search.descend(col, &mut Vec::new());
    let (graph, perm) = search.best.expect("search visits at least one leaf");
    Canon { perm, graph, class_sizes }
}

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    canonical_form(g).label()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).graph == canonical_form(h).graph
}

/// Whether some automorphism of `g` maps `v` to `w`.
pub fn same_orbit(g: &Graph, v: usize, w: usize) -> bool {
    if v == w {
        return true;
    }
    if g.degree(v) != g.degree(w) {
        return false;
    }
    let marked = |x: usize| -> Vec<usize> { (0..g.n()).map(|u| (u == x) as usize).collect() };
    canonical_form_coloured(g, &marked(v)).graph == canonical_form_coloured(g, &marked(w)).graph
}

/// Equitable refinement. New colours are ranks of `(old colour, neighbour
/// counts per colour)` signatures, so the result is labelling-invariant.
fn refine(g: &Graph, col: &mut [u32]) {
    let n = g.n();
    let mut cells = 1 + *col.iter().max().unwrap_or(&0) as usize;
    loop {
        let mut masks = vec![0u64; cells];
        for (v, &c) in col.iter().enumerate() {
            masks[c as usize] |= 1 << v;
        }
        let mut sigs: Vec<(Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let row = g.row(v);
                let mut s = Vec::with_capacity(cells + 1);
                s.push(col[v] as u8);
                s.extend(masks.iter().map(|m| (row & m).count_ones() as u8));
                (s, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            col[sigs[i].1] = rank;
        }
        let new_cells = rank as usize + 1;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Graph, Vec<usize>)>,
    best: Option<(Graph, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, col: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.g.n();
        let cells = 1 + *col.iter().max().expect("nonempty") as usize;
        if cells == n {
            self.leaf(col.iter().map(|&c| c as usize).collect());
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &col {
            sizes[c as usize] += 1;
        }
        let target = (0..cells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("a non-singleton cell exists") as u32;
        let members: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.equivalent_to_explored(prefix, &explored, v) {
                continue;
            }
            let mut child: Vec<u32> = col
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
                .collect();
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in self.autos.iter().filter(|a| prefix.iter().all(|&p| a[p] == p)) {
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let image = self.g.permute(&perm);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == image {
                // perm and reference.1 give the same image, so
                // reference^-1 . perm is an automorphism.
                let mut inv = vec![0; perm.len()];
                for (v, &p) in reference.1.iter().enumerate() {
                    inv[p] = v;
                }
                let auto: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                if auto.iter().enumerate().any(|(i, &a)| i != a) {
                    self.autos.push(auto);
                }
                return;
            }
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => image.rows() < b.rows(),
        };
        if self.first.is_none() {
            self.first = Some((image.clone(), perm.clone()));
        }
        if better {
            self.best = Some((image, perm));
        }
    }
}

/// Exhaustive permutation isomorphism test; exponential, for oracles only.
pub fn isomorphic_by_permutations(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| BitIter(g.row(u)).fold(0u64, |acc, v| acc | 1 << perm[v]) == h.row(perm[u])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
