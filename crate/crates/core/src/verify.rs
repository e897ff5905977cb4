//! Exhaustive verification campaigns over enumerated graph classes.
//!
//! Each [`TheoremId`] fixes a class (built from an [`EnumerationConfig`]) and
//! a per-graph predicate. Every class member failing the predicate becomes a
//! [`Counterexample`]; for the two equivalence theorems with a `Y` outside
//! their characterised family those are the expected witnesses rather than
//! violations.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_label;
use crate::enumerate::{EnumerationConfig, Levels, MAX_PRUNE_PATTERN};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6, to_graph6};
use crate::invariants::{
    chromatic_number, clique_number, find_odd_antihole, independence_number, is_perfect,
    CycleSearch, PerfectionMethod,
};
use crate::patterns::{
    classify_cycle_neighborhood, contains_induced, pattern_graph, NeighborhoodShape, PatternId,
    PatternSet,
};
use crate::structure::{classify_claw_bull_free, olariu_classify, recognize_inflation, StructureVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum TheoremId {
    T1_BRAUSE,
    T3_OLARIU,
    T4_NOALPHA,
    T5_ALPHA3,
    T6_BULL,
    L5_BENREBEA,
    L6_C5FREE,
    OBS2_NEIGHBORHOOD,
    SPGT_CROSSCHECK,
    L7_RULES,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1_BRAUSE,
        TheoremId::T3_OLARIU,
        TheoremId::T4_NOALPHA,
        TheoremId::T5_ALPHA3,
        TheoremId::T6_BULL,
        TheoremId::L5_BENREBEA,
        TheoremId::L6_C5FREE,
        TheoremId::OBS2_NEIGHBORHOOD,
        TheoremId::SPGT_CROSSCHECK,
        TheoremId::L7_RULES,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1_BRAUSE => "T1_BRAUSE",
            TheoremId::T3_OLARIU => "T3_OLARIU",
            TheoremId::T4_NOALPHA => "T4_NOALPHA",
            TheoremId::T5_ALPHA3 => "T5_ALPHA3",
            TheoremId::T6_BULL => "T6_BULL",
            TheoremId::L5_BENREBEA => "L5_BENREBEA",
            TheoremId::L6_C5FREE => "L6_C5FREE",
            TheoremId::OBS2_NEIGHBORHOOD => "OBS2_NEIGHBORHOOD",
            TheoremId::SPGT_CROSSCHECK => "SPGT_CROSSCHECK",
            TheoremId::L7_RULES => "L7_RULES",
        }
    }

    /// Short form accepted on the command line (`T5`, `OBS2`, ...).
    pub fn short(self) -> &'static str {
        self.name().split('_').next().unwrap_or_default()
    }

    pub fn needs_y(self) -> bool {
        matches!(self, TheoremId::T4_NOALPHA | TheoremId::T5_ALPHA3)
    }

    /// Statement-level caveat carried in reports.
    pub fn note(self) -> Option<&'static str> {
        self.needs_y().then_some(
            "(1)<=>(2) checked as a material implication over the enumerated class; \
             (2)=>(3) rests on infinite families and is only evidenced at bounded n",
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == t || id.short() == t)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub max_n: usize,
    pub y: Option<PatternId>,
    /// Number of class members examined.
    pub class_size: usize,
    /// For T4/T5: whether `Y` lies in the characterised family, i.e. whether
    /// counterexamples are violations (true) or expected witnesses (false).
    pub y_in_clause3: Option<bool>,
    pub all_perfect: Option<bool>,
    pub all_omega_colourable: Option<bool>,
    pub note: Option<String>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// True when no counterexample was found.
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// For T4/T5: every ω-colourable class implies a perfect one and
    /// conversely, over the examined graphs.
    pub fn equivalence_holds(&self) -> Option<bool> {
        Some(self.all_perfect? == self.all_omega_colourable?)
    }
}

/// Whether `y` is an induced subgraph of one of the graphs that
/// characterise the theorem (`P4`/`Z1` for T4, `P5`/`Z2` for T5).
pub fn y_in_clause3(theorem: TheoremId, y: &PatternId) -> Result<Option<bool>> {
    let hosts = match theorem {
        TheoremId::T4_NOALPHA => [PatternId::Path(4), PatternId::Paw],
        TheoremId::T5_ALPHA3 => [PatternId::Path(5), PatternId::Hammer],
        _ => return Ok(None),
    };
    let yg = pattern_graph(y)?;
    for h in hosts {
        if contains_induced(&pattern_graph(&h)?, &yg) {
            return Ok(Some(true));
        }
    }
    Ok(Some(false))
}

/// The enumerated class of `theorem`. Patterns too large to prune with are
/// returned separately and must be filtered at emission.
fn class_config(theorem: TheoremId, max_n: usize, y: Option<&PatternId>) -> (EnumerationConfig, Vec<PatternId>) {
    use PatternId::*;
    let base = EnumerationConfig::new(max_n);
    let (mut config, mut free) = match theorem {
        TheoremId::T1_BRAUSE => (base.connected().min_alpha(3), vec![Claw, PatternId::two_k2()]),
        TheoremId::T3_OLARIU => (base.connected(), vec![Paw]),
        TheoremId::T4_NOALPHA => (base.connected().exclude_odd_cycles(), vec![Claw]),
        TheoremId::T5_ALPHA3 => (base.connected().exclude_odd_cycles().min_alpha(3), vec![Claw]),
        TheoremId::T6_BULL => (base.connected().min_alpha(3), vec![Claw, Bull]),
        TheoremId::L5_BENREBEA => (base.connected().min_alpha(3), vec![Claw]),
        TheoremId::L6_C5FREE => (base.connected().min_alpha(3), vec![Claw, FiveCap]),
        TheoremId::OBS2_NEIGHBORHOOD => (base, vec![Claw]),
        TheoremId::SPGT_CROSSCHECK => (base, vec![]),
        TheoremId::L7_RULES => (base.connected(), vec![Claw, Bull]),
    };
    if let Some(y) = y.filter(|_| theorem.needs_y()) {
        free.push(y.clone());
    }
    let (prune, post): (Vec<_>, Vec<_>) = free.into_iter().partition(|p| p.order() <= MAX_PRUNE_PATTERN);
    config.free_of = prune;
    (config, post)
}

/// Class membership decided directly on one graph.
pub fn in_class(theorem: TheoremId, y: Option<&PatternId>, g: &Graph) -> Result<bool> {
    let (config, post) = class_config(theorem, g.n(), y);
    Ok(crate::patterns::is_free(g, &config.free_of)?
        && crate::patterns::is_free(g, &post)?
        && config.emits(g))
}

/// Outcome of the predicate on one class member.
struct Outcome {
    failures: Vec<String>,
    perfect: Option<bool>,
    omega_colourable: Option<bool>,
}

impl Outcome {
    fn from_failures(failures: Vec<String>) -> Self {
        Outcome { failures, perfect: None, omega_colourable: None }
    }
}

fn c5_free(g: &Graph) -> bool {
    CycleSearch::new(g, 5, 5).first().is_none()
}

fn long_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    CycleSearch::new(g, 7, g.n()).for_each(&mut |c| {
        if c.len() % 2 == 1 {
            found = Some(c.to_vec());
            false
        } else {
            true
        }
    });
    found
}

fn check(theorem: TheoremId, clause3: bool, g: &Graph) -> Result<Outcome> {
    let mut failures = Vec::new();
    match theorem {
        TheoremId::T4_NOALPHA | TheoremId::T5_ALPHA3 => {
            let verdict = is_perfect(g, PerfectionMethod::Spgt)?;
            let (omega, _) = clique_number(g);
            let (chi, _) = chromatic_number(g);
            if let Some(cert) = &verdict.certificate {
                failures.push(format!("imperfect: {:?} {:?}", cert.kind, cert.vertices));
            }
            if chi > omega {
                failures.push(format!("not omega-colourable: chi={chi} > omega={omega}"));
            }
            if theorem == TheoremId::T5_ALPHA3 && clause3 {
                if let Some(c) = long_odd_hole(g) {
                    failures.push(format!("induced odd cycle of length {} >= 7: {c:?}", c.len()));
                }
                if !c5_free(g) {
                    failures.push("contains an induced C5".into());
                }
            }
            return Ok(Outcome { failures, perfect: Some(verdict.perfect), omega_colourable: Some(chi == omega) });
        }
        TheoremId::T1_BRAUSE => {
            if let Some(cert) = is_perfect(g, PerfectionMethod::Spgt)?.certificate {
                failures.push(format!("imperfect: {:?} {:?}", cert.kind, cert.vertices));
            }
        }
        TheoremId::T3_OLARIU => {
            if let Err(e) = olariu_classify(g) {
                failures.push(e.to_string());
            }
        }
        TheoremId::T6_BULL => match classify_claw_bull_free(g) {
            Ok(StructureVerdict::OutOfClass { reason, .. }) => {
                failures.push(format!("classified out of class ({reason:?})"))
            }
            Ok(_) => {}
            Err(e) => failures.push(e.to_string()),
        },
        TheoremId::L5_BENREBEA => {
            if let Some(a) = find_odd_antihole(g) {
                if c5_free(g) {
                    failures.push(format!("odd antihole {a:?} but no induced C5"));
                }
            }
        }
        TheoremId::L6_C5FREE => {
            if let Some(c) = CycleSearch::new(g, 5, 5).first() {
                failures.push(format!("induced C5 {c:?}"));
            }
        }
        TheoremId::OBS2_NEIGHBORHOOD => {
            let mut err = None;
            CycleSearch::new(g, 5, g.n()).for_each(&mut |c| {
                let cs = VertexSet::from_vertices(c.iter().copied());
                for x in g.vertices().difference(cs) {
                    match classify_cycle_neighborhood(g, cs, x) {
                        Ok(NeighborhoodShape::Other) => {
                            failures.push(format!("vertex {x} sees cycle {c:?} outside the allowed shapes"));
                        }
                        Ok(_) => {}
                        Err(e) => err = Some(e),
                    }
                }
                err.is_none()
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        TheoremId::SPGT_CROSSCHECK => {
            let spgt = is_perfect(g, PerfectionMethod::Spgt)?;
            let direct = is_perfect(g, PerfectionMethod::Direct)?;
            if spgt.perfect != direct.perfect {
                failures.push(format!(
                    "SPGT says perfect={}, direct says perfect={}",
                    spgt.perfect, direct.perfect
                ));
            }
        }
        TheoremId::L7_RULES => failures = hole_rule_failures(g),
    }
    Ok(Outcome::from_failures(failures))
}

/// The adjacency rules for a hole of length at least 6 in a connected
/// `(K_{1,3}, B)`-free graph, plus the `C5`-freeness clause.
fn hole_rule_failures(g: &Graph) -> Vec<String> {
    let mut failures = Vec::new();
    if independence_number(g).0 >= 3 && !c5_free(g) {
        failures.push("alpha >= 3 but contains an induced C5".into());
    }
    let mut inflation_k = None;
    CycleSearch::new(g, 6, g.n()).for_each(&mut |c| {
        let cs = VertexSet::from_vertices(c.iter().copied());
        let outside = g.vertices().difference(cs);
        for x in outside {
            let seen = g.neighbors(x).intersection(cs);
            let p3 = seen.len() == 3
                && c.iter().enumerate().any(|(i, _)| {
                    let k = c.len();
                    VertexSet::from_vertices([c[i], c[(i + 1) % k], c[(i + 2) % k]]) == seen
                });
            if !p3 {
                failures.push(format!("vertex {x} does not see a P3 on hole {c:?}"));
            }
        }
        for w in outside {
            for w2 in outside.iter().filter(|&w2| w2 > w) {
                let common = g.neighbors(w).intersection(g.neighbors(w2)).intersection(cs).len();
                if g.has_edge(w, w2) != (common >= 2) {
                    failures.push(format!(
                        "vertices {w},{w2} share {common} neighbours on hole {c:?} but adjacency is {}",
                        g.has_edge(w, w2)
                    ));
                }
            }
        }
        let k = *inflation_k.get_or_insert_with(|| recognize_inflation(g).map(|p| p.k));
        if k != Some(c.len()) {
            failures.push(format!("hole {c:?} of length {} but inflation recognised with k={k:?}", c.len()));
        }
        failures.is_empty()
    });
    failures
}

/// Runs one verification campaign over every class member on at most
/// `max_n` vertices.
pub fn verify(theorem: TheoremId, max_n: usize, y: Option<PatternId>) -> Result<VerificationReport> {
    let start = Instant::now();
    if theorem.needs_y() && y.is_none() {
        return Err(Error::MissingY(theorem.to_string()));
    }
    let y = y.filter(|_| theorem.needs_y());
    let clause3 = match &y {
        Some(y) => y_in_clause3(theorem, y)?,
        None => None,
    };
    let (config, post) = class_config(theorem, max_n, y.as_ref());
    let post = PatternSet::new(&post)?;

    let mut class_size = 0;
    let mut all_perfect = true;
    let mut all_omega = true;
    let mut found: Vec<(usize, crate::canon::CanonicalLabel, Counterexample)> = Vec::new();
    for level in Levels::new(&config)? {
        let members: Vec<&Graph> =
            level.iter().filter(|g| config.emits(g) && (post.is_empty() || post.is_free(g))).collect();
        class_size += members.len();
        let outcomes: Vec<(usize, Outcome)> = members
            .par_iter()
            .enumerate()
            .map(|(i, g)| check(theorem, clause3.unwrap_or(false), g).map(|o| (i, o)))
            .collect::<Result<_>>()?;
        for (i, o) in outcomes {
            all_perfect &= o.perfect.unwrap_or(true);
            all_omega &= o.omega_colourable.unwrap_or(true);
            if !o.failures.is_empty() {
                let g = members[i];
                found.push((
                    g.n(),
                    canonical_label(g),
                    Counterexample { graph6: to_graph6(g), n: g.n(), reason: o.failures.join("; ") },
                ));
            }
        }
    }
    found.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let with_y = theorem.needs_y();
    Ok(VerificationReport {
        theorem,
        max_n,
        y,
        class_size,
        y_in_clause3: clause3,
        all_perfect: with_y.then_some(all_perfect),
        all_omega_colourable: with_y.then_some(all_omega),
        note: theorem.note().map(str::to_string),
        counterexamples: found.into_iter().map(|(_, _, c)| c).collect(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Re-checks a reported counterexample from its graph6 string alone:
/// class membership is decided directly and imperfection is re-derived with
/// the definitional test rather than the hole search.
pub fn revalidate(report: &VerificationReport, c: &Counterexample) -> Result<bool> {
    let g = parse_graph6(&c.graph6)?;
    if g.n() != c.n || !in_class(report.theorem, report.y.as_ref(), &g)? {
        return Ok(false);
    }
    match report.theorem {
        TheoremId::T4_NOALPHA | TheoremId::T5_ALPHA3 | TheoremId::T1_BRAUSE => {
            let direct = is_perfect(&g, PerfectionMethod::Direct)?;
            let chi_gap = chromatic_number(&g).0 > clique_number(&g).0;
            let extra = report.theorem == TheoremId::T5_ALPHA3
                && report.y_in_clause3 == Some(true)
                && (long_odd_hole(&g).is_some() || !c5_free(&g));
            Ok(!direct.perfect || chi_gap || extra)
        }
        t => Ok(!check(t, report.y_in_clause3.unwrap_or(false), &g)?.failures.is_empty()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown report format {s:?}"))),
        }
    }
}

/// One CSV row: the scalar fields repeated next to each counterexample.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    theorem: TheoremId,
    max_n: usize,
    y: Option<PatternId>,
    class_size: usize,
    y_in_clause3: Option<bool>,
    all_perfect: Option<bool>,
    all_omega_colourable: Option<bool>,
    elapsed_ms: u64,
    graph6: String,
    n: usize,
    reason: String,
}

const CSV_HEADER: &str =
    "theorem,max_n,y,class_size,y_in_clause3,all_perfect,all_omega_colourable,elapsed_ms,graph6,n,reason";

pub fn report_emit(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("report serialises"),
        ReportFormat::Csv => {
            if report.counterexamples.is_empty() {
                return format!("{CSV_HEADER}\n");
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &report.counterexamples {
                w.serialize(CsvRow {
                    theorem: report.theorem,
                    max_n: report.max_n,
                    y: report.y.clone(),
                    class_size: report.class_size,
                    y_in_clause3: report.y_in_clause3,
                    all_perfect: report.all_perfect,
                    all_omega_colourable: report.all_omega_colourable,
                    elapsed_ms: report.elapsed_ms,
                    graph6: c.graph6.clone(),
                    n: c.n,
                    reason: c.reason.clone(),
                })
                .expect("in-memory csv write");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("utf-8")
        }
    }
}

pub fn report_from_json(text: &str) -> Result<VerificationReport> {
    serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("report json: {e}")))
}

/// Parses CSV produced by [`report_emit`]. A header-only document carries no
/// scalar fields and yields `None`.
pub fn report_from_csv(text: &str) -> Result<Option<VerificationReport>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut report: Option<VerificationReport> = None;
    for row in r.deserialize::<CsvRow>() {
        let row = row.map_err(|e| Error::InvalidParameter(format!("report csv: {e}")))?;
        let rep = report.get_or_insert_with(|| VerificationReport {
            theorem: row.theorem,
            max_n: row.max_n,
            y: row.y.clone(),
            class_size: row.class_size,
            y_in_clause3: row.y_in_clause3,
            all_perfect: row.all_perfect,
            all_omega_colourable: row.all_omega_colourable,
            note: row.theorem.note().map(str::to_string),
            counterexamples: Vec::new(),
            elapsed_ms: row.elapsed_ms,
        });
        rep.counterexamples.push(Counterexample { graph6: row.graph6, n: row.n, reason: row.reason });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{build_family, Family, FamilySpec};

    #[test]
    fn theorem_names() {
        assert_eq!("t5".parse::<TheoremId>().unwrap(), TheoremId::T5_ALPHA3);
        assert_eq!("OBS2".parse::<TheoremId>().unwrap(), TheoremId::OBS2_NEIGHBORHOOD);
        assert_eq!("L7_RULES".parse::<TheoremId>().unwrap(), TheoremId::L7_RULES);
        assert!(matches!("T2".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
        for t in TheoremId::ALL {
            assert_eq!(t.short().parse::<TheoremId>().unwrap(), t);
        }
    }

    #[test]
    fn clause3_membership() {
        let t4 = TheoremId::T4_NOALPHA;
        let t5 = TheoremId::T5_ALPHA3;
        assert_eq!(y_in_clause3(t4, &PatternId::Path(3)).unwrap(), Some(true));
        assert_eq!(y_in_clause3(t4, &PatternId::Complete(3)).unwrap(), Some(true));
        assert_eq!(y_in_clause3(t4, &PatternId::Cycle(4)).unwrap(), Some(false));
        assert_eq!(y_in_clause3(t5, &PatternId::two_k2()).unwrap(), Some(true));
        assert_eq!(y_in_clause3(t5, &PatternId::Bull).unwrap(), Some(false));
        assert_eq!(y_in_clause3(TheoremId::L6_C5FREE, &PatternId::Bull).unwrap(), None);
    }

    #[test]
    fn missing_y() {
        assert!(matches!(verify(TheoremId::T5_ALPHA3, 5, None), Err(Error::MissingY(_))));
    }

    #[test]
    fn t4_c4_small() {
        let r = verify(TheoremId::T4_NOALPHA, 6, Some(PatternId::Cycle(4))).unwrap();
        assert_eq!(r.y_in_clause3, Some(false));
        let f = build_family(FamilySpec::new(Family::F0, 1).unwrap()).unwrap().graph;
        assert!(r
            .counterexamples
            .iter()
            .any(|c| is_isomorphic(&parse_graph6(&c.graph6).unwrap(), &f)));
        for c in &r.counterexamples {
            assert!(revalidate(&r, c).unwrap());
        }
        assert_eq!(r.equivalence_holds(), Some(true));
    }

    #[test]
    fn in_class_small_proofs() {
        for t in [TheoremId::T3_OLARIU, TheoremId::L6_C5FREE, TheoremId::SPGT_CROSSCHECK] {
            let r = verify(t, 6, None).unwrap();
            assert!(r.verified(), "{t}: {:?}", r.counterexamples);
            assert!(r.class_size > 0);
        }
    }

    #[test]
    fn spgt_class_size_counts_all_graphs() {
        let r = verify(TheoremId::SPGT_CROSSCHECK, 5, None).unwrap();
        assert_eq!(r.class_size, 1 + 2 + 4 + 11 + 34);
    }

    #[test]
    fn odd_cycles_excluded() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(!in_class(TheoremId::T4_NOALPHA, Some(&PatternId::Path(4)), &c7).unwrap());
        assert!(!in_class(TheoremId::T4_NOALPHA, Some(&PatternId::Path(4)), &Graph::complete(3).unwrap()).unwrap());
    }

    #[test]
    fn csv_and_json() {
        let mut r = verify(TheoremId::T4_NOALPHA, 6, Some(PatternId::Cycle(4))).unwrap();
        let json = report_emit(&r, ReportFormat::Json);
        assert_eq!(report_from_json(&json).unwrap(), r);
        let csv = report_emit(&r, ReportFormat::Csv);
        assert_eq!(csv.lines().count(), r.counterexamples.len() + 1);
        assert_eq!(report_from_csv(&csv).unwrap().unwrap(), r);

        r.counterexamples.clear();
        assert_eq!(report_emit(&r, ReportFormat::Csv), format!("{CSV_HEADER}\n"));
        assert_eq!(report_from_csv(&report_emit(&r, ReportFormat::Csv)).unwrap(), None);
        let v: serde_json::Value = serde_json::from_str(&report_emit(&r, ReportFormat::Json)).unwrap();
        assert_eq!(v["counterexamples"].to_string(), "[]");
    }

    #[test]
    fn csv_quotes_reasons() {
        let r = VerificationReport {
            theorem: TheoremId::L6_C5FREE,
            max_n: 3,
            y: None,
            class_size: 1,
            y_in_clause3: None,
            all_perfect: None,
            all_omega_colourable: None,
            note: None,
            counterexamples: vec![Counterexample { graph6: "Dhc".into(), n: 5, reason: "a, \"b\"".into() }],
            elapsed_ms: 0,
        };
        assert_eq!(report_from_csv(&report_emit(&r, ReportFormat::Csv)).unwrap().unwrap(), r);
    }
}
