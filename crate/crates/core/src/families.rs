//! The counterexample families `F_s^0 .. F_s^4` and cycle inflations
//! `C[n_1, .., n_k]`, plus a checker for every claim made about the families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6::to_graph6;
use crate::invariants::{chromatic_number, clique_number, independence_number};
use crate::patterns::{find_induced, PatternId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    F0,
    F1,
    F2,
    F3,
    F4,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::F0, Family::F1, Family::F2, Family::F3, Family::F4];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "F0" => Ok(Family::F0),
            "F1" => Ok(Family::F1),
            "F2" => Ok(Family::F2),
            "F3" => Ok(Family::F3),
            "F4" => Ok(Family::F4),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub s: usize,
}

impl FamilySpec {
    pub fn new(family: Family, s: usize) -> Result<Self> {
        let ok = match family {
            Family::F0 | Family::F3 => s >= 1,
            Family::F1 => s >= 3,
            Family::F2 => s >= 2,
            Family::F4 => s >= 3 && s % 2 == 1,
        };
        if !ok {
            return Err(Error::InvalidParameter(format!("{family} is undefined for s = {s}")));
        }
        let spec = FamilySpec { family, s };
        if spec.order() > MAX_VERTICES {
            return Err(Error::Capacity(spec.order()));
        }
        Ok(spec)
    }

    /// Vertex count of `F_s`.
    pub fn order(&self) -> usize {
        let s = self.s;
        match self.family {
            Family::F0 => s + 5,
            Family::F1 => 3 * s + 1,
            Family::F2 => 2 * s + 5,
            Family::F3 => 9 * s + 1,
            Family::F4 => 3 * s + 3,
        }
    }

    /// Edge count of `F_s`.
    pub fn size(&self) -> usize {
        let s = self.s;
        match self.family {
            Family::F0 => 5 + s * (s - 1) / 2 + 5 * s,
            Family::F1 => 5 * s + 1,
            Family::F2 => 2 * s + 12,
            Family::F3 => 18 * s + 1,
            Family::F4 => {
                let n = 3 * s + 3;
                n * (n - 1) / 2 - (6 * s + 3)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(s={})", self.family, self.s)
    }
}

/// A graph whose vertices carry the names used in the construction
/// (`u1`, `x2`, `x1^3`, `z`, ...). Identified vertices carry both names
/// joined by `=`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabelledGraph {
    /// Vertex carrying `name`, also matching either side of a merged label.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l.split('=').any(|part| part == name))
    }

    pub fn vertex_set(&self, names: &[&str]) -> Option<VertexSet> {
        names.iter().map(|n| self.vertex(n)).collect::<Option<Vec<_>>>().map(VertexSet::from_vertices)
    }
}

struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: Vec::new(), edges: Vec::new() }
    }

    fn add(&mut self, name: String) -> usize {
        self.labels.push(name);
        self.labels.len() - 1
    }

    fn at(&self, name: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l.split('=').any(|p| p == name))
            .unwrap_or_else(|| panic!("no vertex named {name}"))
    }

    fn join(&mut self, a: &str, b: &str) {
        let e = (self.at(a), self.at(b));
        self.edges.push(e);
    }

    /// Adds cycle edges over already-present names.
    fn close_cycle(&mut self, names: &[String]) {
        for i in 0..names.len() {
            self.join(&names[i], &names[(i + 1) % names.len()]);
        }
    }

    fn finish(self) -> Result<LabelledGraph> {
        Ok(LabelledGraph { graph: Graph::new(self.labels.len(), &self.edges)?, labels: self.labels })
    }
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

pub fn build_family(spec: FamilySpec) -> Result<LabelledGraph> {
    let spec = FamilySpec::new(spec.family, spec.s)?;
    let s = spec.s;
    let mut b = Builder::new();
    match spec.family {
        Family::F0 => {
            let u = names("u", 5);
            for n in &u {
                b.add(n.clone());
            }
            b.close_cycle(&u);
            let k = names("k", s);
            for n in &k {
                b.add(n.clone());
            }
            for (i, a) in k.iter().enumerate() {
                for c in &k[i + 1..] {
                    b.join(a, c);
                }
                for c in &u {
                    b.join(a, c);
                }
            }
        }
        Family::F1 => {
            let u = names("u", 2 * s + 1);
            for n in &u {
                b.add(n.clone());
            }
            b.close_cycle(&u);
            for i in 1..=s {
                let x = format!("x{i}");
                b.add(x.clone());
                for j in [2 * i - 1, 2 * i, 2 * i + 1] {
                    b.join(&x, &format!("u{j}"));
                }
            }
        }
        Family::F2 => {
            let u = names("u", 2 * s + 1);
            for n in &u {
                let name = match n.as_str() {
                    "u2" => "u2=x2".to_string(),
                    "u3" => "u3=x3".to_string(),
                    _ => n.clone(),
                };
                b.add(name);
            }
            b.close_cycle(&u);
            for x in ["x1", "x4", "x5"] {
                b.add(x.to_string());
            }
            let x = names("x", 5);
            // x2x3 coincides with u2u3; the duplicate edge collapses
            b.close_cycle(&x);
            b.add("z".to_string());
            for xi in &x {
                b.join("z", xi);
            }
            b.join("x1", "u1");
            b.join("x4", "u4");
        }
        Family::F3 => {
            let u = names("u", 6 * s + 1);
            for n in &u {
                b.add(n.clone());
            }
            b.close_cycle(&u);
            for i in 1..=s {
                let attach: [(usize, [usize; 4]); 3] = [
                    (1, [6 * i - 5, 6 * i - 4, 6 * i - 2, 6 * i - 1]),
                    (2, [6 * i - 4, 6 * i - 3, 6 * i - 1, 6 * i]),
                    (3, [6 * i - 3, 6 * i - 2, 6 * i, 6 * i + 1]),
                ];
                for (j, targets) in attach {
                    let x = format!("x{j}^{i}");
                    b.add(x.clone());
                    for t in targets {
                        b.join(&x, &format!("u{t}"));
                    }
                }
            }
        }
        Family::F4 => {
            // built as the complement, then complemented
            let u = names("u", 3 * s);
            for n in &u {
                b.add(n.clone());
            }
            b.close_cycle(&u);
            let x = names("x", 3);
            for n in &x {
                b.add(n.clone());
            }
            b.close_cycle(&x);
            for i in 1..=s {
                b.join("x1", &format!("u{}", 3 * i - 2));
                b.join("x2", &format!("u{}", 3 * i - 1));
                b.join("x3", &format!("u{}", 3 * i));
            }
            let mut lg = b.finish()?;
            lg.graph = lg.graph.complement();
            return Ok(lg);
        }
    }
    b.finish()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflationSpec {
    pub sizes: Vec<usize>,
}

impl InflationSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 4 {
            return Err(Error::InvalidParameter(format!(
                "inflation needs a cycle of length at least 4, got {}",
                sizes.len()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("inflation part sizes must be positive".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::Capacity(total));
        }
        Ok(InflationSpec { sizes })
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }
}

/// Builds `C[n_1, .., n_k]`; parts are consecutive in vertex order.
pub fn build_inflation(spec: &InflationSpec) -> Result<(Graph, Vec<VertexSet>)> {
    let spec = InflationSpec::new(spec.sizes.clone())?;
    let k = spec.k();
    let mut parts = Vec::with_capacity(k);
    let mut next = 0;
    for &size in &spec.sizes {
        parts.push(VertexSet::from_vertices(next..next + size));
        next += size;
    }
    let mut rows = vec![0u64; next];
    for (i, part) in parts.iter().enumerate() {
        let closed = part.union(parts[(i + 1) % k]).union(parts[(i + k - 1) % k]);
        for v in *part {
            rows[v] = closed.bits() & !(1 << v);
        }
    }
    Ok((Graph::from_rows(rows)?, parts))
}

/// Everything checked about one member of a family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyClaimReport {
    pub family: Family,
    pub s: usize,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub odd_cycle: bool,
    pub omega: usize,
    pub chi: usize,
    pub alpha: usize,
    /// The independent set named for the family, if it has one.
    pub alpha_witness: Option<Vec<String>>,
    pub free_of: Vec<PatternId>,
    pub failures: Vec<String>,
}

impl FamilyClaimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Patterns each family avoids.
pub fn freeness_claims(family: Family) -> Vec<PatternId> {
    use PatternId::*;
    match family {
        Family::F0 => vec![Independent(3), PatternId::two_k2(), PatternId::k1_k3()],
        Family::F1 => vec![Claw, Bull, Complete(4), Cycle(4), Cycle(5), Cycle(6)],
        Family::F2 => vec![Claw, Hourglass],
        Family::F3 => vec![Claw, Diamond],
        Family::F4 => vec![Claw, Independent(4), PatternId::two_k1_k2(), PatternId::k2_k3()],
    }
}

fn alpha_witness(family: Family) -> Option<[&'static str; 3]> {
    match family {
        Family::F0 => None,
        Family::F1 | Family::F3 => Some(["u1", "u3", "u5"]),
        Family::F2 => Some(["u1", "u3", "x5"]),
        Family::F4 => Some(["x1", "x2", "x3"]),
    }
}

/// Computes the report; every failed claim is listed in `failures`.
pub fn check_family_claims(spec: FamilySpec) -> Result<FamilyClaimReport> {
    let lg = build_family(spec)?;
    let g = &lg.graph;
    let s = spec.s;
    let mut failures = Vec::new();
    let mut claim = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    claim(g.n() == spec.order(), format!("|V| = {} expected {}", g.n(), spec.order()));
    claim(g.edge_count() == spec.size(), format!("|E| = {} expected {}", g.edge_count(), spec.size()));
    let connected = g.is_connected();
    claim(connected, "not connected".into());
    let odd_cycle = g.n() % 2 == 1 && g.n() >= 3 && is_isomorphic(g, &Graph::cycle(g.n())?);
    claim(!odd_cycle, "is an odd cycle".into());

    let (omega, _) = clique_number(g);
    let (alpha, _) = independence_number(g);
    let (chi, _) = chromatic_number(g);
    claim(chi > omega, format!("chi = {chi} does not exceed omega = {omega}"));

    match spec.family {
        Family::F0 => {
            claim(omega == s + 2, format!("omega = {omega}, expected {}", s + 2));
            claim(chi == s + 3, format!("chi = {chi}, expected {}", s + 3));
        }
        Family::F1 | Family::F2 | Family::F3 => {
            claim(omega == 3, format!("omega = {omega}, expected 3"));
        }
        Family::F4 => {
            claim(omega == (3 * s - 1) / 2, format!("omega = {omega}, expected {}", (3 * s - 1) / 2));
            let bound = (3 * s + 3) / 2;
            claim(chi >= bound, format!("chi = {chi}, expected at least {bound}"));
        }
    }

    let free_of = freeness_claims(spec.family);
    for p in &free_of {
        if let Some(e) = find_induced(g, p)? {
            claim(false, format!("contains {p} at {e:?}"));
        }
    }

    let witness = alpha_witness(spec.family);
    if let Some(names) = witness {
        let set = lg.vertex_set(&names).expect("family labels present");
        claim(set.len() == 3 && g.is_independent(set), format!("{names:?} is not independent"));
        claim(alpha >= 3, format!("alpha = {alpha} < 3"));
    }

    if spec.family == Family::F2 {
        let f10 = build_family(FamilySpec::new(Family::F0, 1)?)?.graph;
        claim(
            crate::patterns::contains_induced(g, &f10),
            "F_1^0 is not an induced subgraph".into(),
        );
    }

    Ok(FamilyClaimReport {
        family: spec.family,
        s,
        graph6: to_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        connected,
        odd_cycle,
        omega,
        chi,
        alpha,
        alpha_witness: witness.map(|w| w.iter().map(|s| s.to_string()).collect()),
        free_of,
        failures,
    })
}

/// Like [`check_family_claims`], but any failed claim is an error.
pub fn verify_family_claims(spec: FamilySpec) -> Result<FamilyClaimReport> {
    let report = check_family_claims(spec)?;
    if let Some(first) = report.failures.first() {
        return Err(Error::TheoremViolation { graph6: report.graph6.clone(), reason: format!("{spec}: {first}") });
    }
    Ok(report)
}
