//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search routines under test; everything is exhaustive over subsets,
//! permutations, colourings or partitions.
#![allow(dead_code)]

use clawfree::Graph;
use proptest::prelude::*;

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn adj(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut a, &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn iso_brute(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(n).iter().any(|p| {
        (0..n).all(|u| (u + 1..n).all(|v| adj(g, u, v) == adj(h, p[u], p[v])))
    })
}

/// Subsets of `0..n` as vertex lists.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect()
}

pub fn induced(g: &Graph, vs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if adj(g, vs[i], vs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(vs.len(), &edges).unwrap()
}

/// Whether `h` is an induced subgraph of `g`, by subsets and bijections.
pub fn contains_brute(g: &Graph, h: &Graph) -> bool {
    h.n() <= g.n() && subsets_of_size(g.n(), h.n()).iter().any(|s| iso_brute(&induced(g, s), h))
}

pub fn omega_brute(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| adj(g, u, v)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn alpha_brute(g: &Graph) -> usize {
    omega_brute(&complement_brute(g))
}

pub fn complement_brute(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !adj(g, u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Whether `g` has a proper `k`-colouring, by backtracking over vertices in
/// index order with every colour tried.
pub fn colourable_brute(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !adj(g, u, v) || col[u] != c) {
                col.push(c);
                if go(g, k, v + 1, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(g, k, 0, &mut Vec::new())
}

pub fn chi_brute(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| colourable_brute(g, k)).unwrap()
}

/// Perfection straight from the definition: every induced subgraph.
pub fn perfect_brute(g: &Graph) -> bool {
    let n = g.n();
    (1u64..1 << n).all(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let h = induced(g, &vs);
        chi_brute(&h) == omega_brute(&h)
    })
}

/// All set partitions of `0..n` as block lists.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    fn go(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(v + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(v + 1, n, blocks, out);
        blocks.pop();
    }
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn is_complete_multipartite_brute(g: &Graph) -> bool {
    set_partitions(g.n()).iter().any(|parts| {
        parts.iter().enumerate().all(|(i, p)| {
            p.iter().all(|&u| p.iter().all(|&v| !adj(g, u, v)))
                && parts[i + 1..].iter().all(|q| p.iter().all(|&u| q.iter().all(|&v| adj(g, u, v))))
        })
    })
}

/// The inflation definition checked on an ordered list of parts.
pub fn is_inflation_order(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let k = parts.len();
    if k < 4 {
        return false;
    }
    let clique = |p: &[usize]| p.iter().all(|&u| p.iter().all(|&v| u == v || adj(g, u, v)));
    if !parts.iter().all(|p| clique(p)) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            parts[i].iter().all(|&u| parts[j].iter().all(|&v| adj(g, u, v) == consecutive))
        })
    })
}

/// Whether `g` is an inflation of some `C_k`, `k >= 4`, by trying every
/// partition and every cyclic order of its blocks.
pub fn is_inflation_brute(g: &Graph) -> Option<usize> {
    for parts in set_partitions(g.n()) {
        let k = parts.len();
        if k < 4 {
            continue;
        }
        for p in permutations(k - 1) {
            let order: Vec<Vec<usize>> =
                std::iter::once(parts[0].clone()).chain(p.iter().map(|&i| parts[i + 1].clone())).collect();
            if is_inflation_order(g, &order) {
                return Some(k);
            }
        }
    }
    None
}

pub fn connected_brute(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj(g, u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
