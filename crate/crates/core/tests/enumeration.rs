mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use clawfree::enumerate::{enumerate, enumerate_by_order, oracle_enumerate, EnumerationConfig};
use clawfree::{canonical_label, CanonicalLabel, Graph, PatternId};
use common::*;

fn oracle() -> &'static Vec<Vec<(CanonicalLabel, Graph)>> {
    static ORACLE: OnceLock<Vec<Vec<(CanonicalLabel, Graph)>>> = OnceLock::new();
    ORACLE.get_or_init(|| oracle_enumerate(7).unwrap())
}

/// A connected 2-regular graph is a cycle.
fn is_odd_cycle_brute(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && n % 2 == 1 && connected_brute(g) && (0..n).all(|u| (0..n).filter(|&v| adj(g, u, v)).count() == 2)
}

/// Oracle catalogue filtered by `config` using brute-force predicates only.
fn filtered(config: &EnumerationConfig) -> Vec<BTreeSet<CanonicalLabel>> {
    let patterns: Vec<Graph> = config.free_of.iter().map(|p| p.graph().unwrap()).collect();
    oracle()[..config.max_n]
        .iter()
        .map(|level| {
            level
                .iter()
                .filter(|(_, g)| {
                    (!config.connected_only || connected_brute(g))
                        && patterns.iter().all(|h| !contains_brute(g, h))
                        && config.min_alpha.is_none_or(|a| alpha_brute(g) >= a)
                        && (!config.exclude_odd_cycles || !is_odd_cycle_brute(g))
                })
                .map(|(l, _)| l.clone())
                .collect()
        })
        .collect()
}

fn generated(config: &EnumerationConfig) -> Vec<BTreeSet<CanonicalLabel>> {
    enumerate_by_order(config)
        .unwrap()
        .iter()
        .map(|level| {
            let labels: BTreeSet<_> = level.iter().map(canonical_label).collect();
            assert_eq!(labels.len(), level.len(), "duplicate isomorphism class emitted");
            labels
        })
        .collect()
}

fn assert_matches_oracle(config: EnumerationConfig) {
    let want = filtered(&config);
    let got = generated(&config);
    assert_eq!(got, want, "config {config:?}");
}

#[test]
fn oracle_counts() {
    let sizes: Vec<usize> = oracle().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn unrestricted_matches_oracle() {
    assert_matches_oracle(EnumerationConfig::new(7));
}

#[test]
fn connected_matches_oracle() {
    assert_matches_oracle(EnumerationConfig::new(7).connected());
    let counts: Vec<usize> = generated(&EnumerationConfig::new(7).connected()).iter().map(|s| s.len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn triangle_free_matches_oracle() {
    assert_matches_oracle(EnumerationConfig::new(7).free_of(vec![PatternId::Complete(3)]));
    assert_matches_oracle(EnumerationConfig::new(5).connected().free_of(vec![PatternId::Complete(3)]));
}

#[test]
fn claw_free_matches_oracle() {
    assert_matches_oracle(EnumerationConfig::new(7).free_of(vec![PatternId::Claw]));
    assert_matches_oracle(EnumerationConfig::new(7).connected().free_of(vec![PatternId::Claw]));
}

#[test]
fn emission_filters_match_oracle() {
    assert_matches_oracle(
        EnumerationConfig::new(7)
            .connected()
            .free_of(vec![PatternId::Claw, PatternId::Bull])
            .min_alpha(3)
            .exclude_odd_cycles(),
    );
    assert_matches_oracle(EnumerationConfig::new(7).free_of(vec![PatternId::Path(4), PatternId::Cycle(4)]));
}

#[test]
fn eight_vertex_classes_are_distinct() {
    let levels = enumerate_by_order(&EnumerationConfig::new(8)).unwrap();
    assert_eq!(levels[7].len(), 12346);
    let labels: BTreeSet<_> = levels[7].iter().map(canonical_label).collect();
    assert_eq!(labels.len(), 12346);
}

#[test]
fn visit_order_is_deterministic() {
    let config = EnumerationConfig::new(7).connected().free_of(vec![PatternId::Claw]);
    let mut a = Vec::new();
    let mut b = Vec::new();
    enumerate(&config, |g| a.push(g.to_string())).unwrap();
    enumerate(&config, |g| b.push(g.to_string())).unwrap();
    assert_eq!(a, b);
    let ns: Vec<usize> = a.iter().map(|s| clawfree::parse_graph6(s).unwrap().n()).collect();
    assert!(ns.windows(2).all(|w| w[0] <= w[1]));
}
