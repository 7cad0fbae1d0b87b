//! Batch verification over graph streams.
//!
//! Every graph is run through a fixed registry of checks. Each check either
//! passes with a small certificate or fails with a counterexample payload.
//! Streams are processed in chunks on a worker pool; results are emitted in
//! input order, so serial and parallel runs produce identical output apart
//! from timings.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::augmentoid::{check_canonical_augmentoid_on, verify_lemmas_masks};
use crate::bits::bit;
use crate::decomposition::decompose_with;
use crate::error::{Error, Result};
use crate::format::{emit_graph6, parse_graph, InputFormat};
use crate::graph::Graph;
use crate::independence::{is_konig_egervary_within, FamilySurvey, LocalAlpha, SetFamily};
use crate::matching::max_matching;

/// Default upper bound on vertex count for exhaustive family enumeration.
pub const GUARDRAIL_MAX_N: usize = 12;

// ============================================================================
// Check registry
// ============================================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    InclusionChain,
    CanonicalAugmentoid,
    LemmasAllPairs,
    #[serde(rename = "decomposition_all_S")]
    DecompositionAllS,
    Counting,
    KePredicate,
    PereyraCrosscheck,
    NtExtension,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::InclusionChain,
        CheckName::CanonicalAugmentoid,
        CheckName::LemmasAllPairs,
        CheckName::DecompositionAllS,
        CheckName::Counting,
        CheckName::KePredicate,
        CheckName::PereyraCrosscheck,
        CheckName::NtExtension,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::InclusionChain => "inclusion_chain",
            CheckName::CanonicalAugmentoid => "canonical_augmentoid",
            CheckName::LemmasAllPairs => "lemmas_all_pairs",
            CheckName::DecompositionAllS => "decomposition_all_S",
            CheckName::Counting => "counting",
            CheckName::KePredicate => "ke_predicate",
            CheckName::PereyraCrosscheck => "pereyra_crosscheck",
            CheckName::NtExtension => "nt_extension",
        }
    }

    /// Checks of results that are cited rather than derived here.
    pub fn is_cited(self) -> bool {
        matches!(self, CheckName::PereyraCrosscheck)
    }

    /// Parses a comma-separated list; `all` selects the whole registry.
    pub fn parse_list(text: &str) -> std::result::Result<Vec<CheckName>, String> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                return Ok(Self::ALL.to_vec());
            }
            let c = item.parse::<CheckName>()?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        if out.is_empty() {
            return Err("no checks selected".into());
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
                format!(
                    "unknown check `{s}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

// ============================================================================
// Reports
// ============================================================================

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckOutcome {
    pub name: CheckName,
    pub pass: bool,
    pub certificate: Option<Value>,
    pub counterexample: Option<Value>,
}

impl CheckOutcome {
    fn pass(name: CheckName, certificate: Value) -> Self {
        CheckOutcome {
            name,
            pass: true,
            certificate: Some(certificate),
            counterexample: None,
        }
    }

    fn fail(name: CheckName, counterexample: Value) -> Self {
        CheckOutcome {
            name,
            pass: false,
            certificate: None,
            counterexample: Some(counterexample),
        }
    }
}

/// Result of running the selected checks on one graph. One JSON object per
/// graph in stream mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    /// graph6 encoding of the graph.
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub checks: Vec<CheckOutcome>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The report with timing removed, for comparisons across runs.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

// ============================================================================
// Per-graph checks
// ============================================================================

/// Runs `checks` on `g`.
pub fn verify_graph(g: &Graph, checks: &[CheckName]) -> VerificationReport {
    let start = Instant::now();
    let survey = FamilySurvey::compute(g);
    let outcomes = checks.iter().map(|&c| run_check(g, &survey, c)).collect();
    VerificationReport {
        graph_id: emit_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        checks: outcomes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn run_check(g: &Graph, survey: &FamilySurvey, check: CheckName) -> CheckOutcome {
    match check {
        CheckName::InclusionChain => inclusion_chain(g, survey),
        CheckName::CanonicalAugmentoid => canonical_augmentoid(g, survey),
        CheckName::LemmasAllPairs => lemmas_all_pairs(g, survey),
        CheckName::DecompositionAllS => decomposition_all_s(g, survey),
        CheckName::Counting => counting(g, survey),
        CheckName::KePredicate => ke_predicate(g, survey),
        CheckName::PereyraCrosscheck => pereyra_crosscheck(g, survey),
        CheckName::NtExtension => nt_extension(g, survey),
    }
}

fn name_mask(g: &Graph, mask: u64) -> String {
    g.format_set(&g.full_set().with_bits(mask))
}

fn first_missing(g: &Graph, sub: &SetFamily, sup: &SetFamily) -> Option<String> {
    sub.iter()
        .find(|s| !sup.contains(s))
        .map(|s| g.format_set(s))
}

fn inclusion_chain(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::InclusionChain;
    let empty = g.empty_set();
    let sizes = json!({
        "crit_indep": s.crit.len(),
        "crown": s.crown.len(),
        "psi": s.psi.len(),
        "omega": s.omega.len(),
        "d": s.critical.d_of_g,
    });
    let failures: [(&str, Option<String>); 3] = [
        ("CritIndep ⊆ Crown", first_missing(g, &s.crit, &s.crown)),
        ("Crown ⊆ Psi", first_missing(g, &s.crown, &s.psi)),
        ("Omega ⊆ Psi", first_missing(g, &s.omega, &s.psi)),
    ];
    if let Some((rule, Some(set))) = failures.iter().find(|(_, f)| f.is_some()) {
        return CheckOutcome::fail(name, json!({ "rule": rule, "set": set, "sizes": sizes }));
    }
    if !s.psi.contains(&empty) || !s.crown.contains(&empty) {
        return CheckOutcome::fail(
            name,
            json!({ "rule": "empty set in Psi and Crown", "sizes": sizes }),
        );
    }
    if s.crit.contains(&empty) != (s.critical.d_of_g == 0) {
        return CheckOutcome::fail(
            name,
            json!({ "rule": "empty set critical iff d(G) = 0", "sizes": sizes }),
        );
    }
    let witness = s.critical.witness.bits();
    let witness_ok = s.critical.d_of_g >= 0
        && crate::bits::is_independent(g.adjacency(), witness)
        && crate::independence::diff_mask(g.adjacency(), witness) == s.critical.d_of_g;
    if !witness_ok {
        return CheckOutcome::fail(
            name,
            json!({ "rule": "d(G) >= 0 attained by witness", "witness": name_mask(g, witness), "sizes": sizes }),
        );
    }
    CheckOutcome::pass(name, sizes)
}

fn canonical_augmentoid(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::CanonicalAugmentoid;
    let verdict = check_canonical_augmentoid_on(g, &s.psi);
    match verdict.counterexample {
        None => CheckOutcome::pass(name, json!({ "pairs": verdict.pairs_checked })),
        Some(cx) => CheckOutcome::fail(
            name,
            json!({
                "s": g.format_set(&cx.x),
                "t": g.format_set(&cx.y),
                "diagnosis": cx.diagnosis,
            }),
        ),
    }
}

fn lemmas_all_pairs(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::LemmasAllPairs;
    let mut local = LocalAlpha::new(g.adjacency());
    let mut pairs = 0;
    for a in s.psi.iter() {
        for b in s.psi.iter() {
            pairs += 1;
            let report = verify_lemmas_masks(g, &mut local, a.bits(), b.bits());
            if !report.all_pass() {
                let failed: Vec<Value> = report
                    .failures()
                    .map(|c| json!({ "lemma": c.name, "evidence": c.evidence }))
                    .collect();
                return CheckOutcome::fail(
                    name,
                    json!({ "s": g.format_set(a), "t": g.format_set(b), "failed": failed }),
                );
            }
        }
    }
    CheckOutcome::pass(name, json!({ "pairs": pairs }))
}

fn decomposition_all_s(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::DecompositionAllS;
    for set in s.psi.iter() {
        let r = decompose_with(g, s, set);
        if !r.parts.all_hold() {
            return CheckOutcome::fail(
                name,
                json!({
                    "s": g.format_set(set),
                    "alpha_identity": r.parts.alpha_identity,
                    "bijection": r.parts.bijection,
                    "omega_identity": r.parts.omega_identity,
                    "core_corona": r.parts.core_corona,
                    "alpha_g": r.alpha_g,
                    "alpha_h": r.alpha_h,
                }),
            );
        }
    }
    CheckOutcome::pass(name, json!({ "sets": s.psi.len() }))
}

fn counting(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::Counting;
    let mut total_psi = 0;
    let mut total_omega = 0;
    for set in s.psi.iter() {
        let r = decompose_with(g, s, set);
        let via_h = (r.psi_h.len(), r.omega_h.len());
        let direct = (
            r.psi_extensions_direct.len(),
            r.omega_extensions_direct.len(),
        );
        if via_h != direct {
            return CheckOutcome::fail(
                name,
                json!({ "s": g.format_set(set), "via_h": [via_h.0, via_h.1], "direct": [direct.0, direct.1] }),
            );
        }
        total_psi += via_h.0;
        total_omega += via_h.1;
    }
    CheckOutcome::pass(
        name,
        json!({ "sets": s.psi.len(), "psi_extensions": total_psi, "omega_extensions": total_omega }),
    )
}

/// α + μ ≤ n always; bipartite graphs are König–Egerváry; and
/// Crown(G) = Ψ(G) exactly when every G[N[S]], S ∈ Ψ(G), is König–Egerváry.
fn ke_predicate(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::KePredicate;
    let adj = g.adjacency();
    let mu = max_matching(g).len();
    let ke = s.alpha + mu == g.n();
    let bipartite = g.is_bipartite();
    let cert = json!({ "alpha": s.alpha, "mu": mu, "n": g.n(), "ke": ke, "bipartite": bipartite });
    if s.alpha + mu > g.n() {
        return CheckOutcome::fail(name, json!({ "rule": "alpha + mu <= n", "values": cert }));
    }
    if bipartite && !ke {
        return CheckOutcome::fail(
            name,
            json!({ "rule": "bipartite implies KE", "values": cert }),
        );
    }
    let crown_is_psi = s.crown.same_members(&s.psi);
    let non_ke = s
        .psi
        .iter()
        .find(|set| !is_konig_egervary_within(adj, crate::bits::closed_nbhd(adj, set.bits())));
    if crown_is_psi != non_ke.is_none() {
        return CheckOutcome::fail(
            name,
            json!({
                "rule": "Crown = Psi iff every G[N[S]] is KE",
                "crown_equals_psi": crown_is_psi,
                "non_ke_neighborhood_of": non_ke.map(|x| g.format_set(x)),
                "values": cert,
            }),
        );
    }
    CheckOutcome::pass(name, cert)
}

/// CritIndep(G) = Crown(G) exactly when d(G) = 0 (a cited result).
fn pereyra_crosscheck(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::PereyraCrosscheck;
    let equal = s.crit.same_members(&s.crown);
    let d = s.critical.d_of_g;
    let payload = json!({ "d": d, "crit_equals_crown": equal, "cited": true });
    if equal == (d == 0) {
        CheckOutcome::pass(name, payload)
    } else {
        let extra = first_missing(g, &s.crown, &s.crit);
        CheckOutcome::fail(
            name,
            json!({ "d": d, "crit_equals_crown": equal, "crown_not_critical": extra, "cited": true }),
        )
    }
}

fn nt_extension(g: &Graph, s: &FamilySurvey) -> CheckOutcome {
    let name = CheckName::NtExtension;
    let omega: Vec<u64> = s.omega.masks().collect();
    for set in s.psi.iter() {
        let b = set.bits();
        if !omega.iter().any(|&m| m & b == b) {
            return CheckOutcome::fail(name, json!({ "s": g.format_set(set) }));
        }
    }
    CheckOutcome::pass(name, json!({ "sets": s.psi.len(), "omega": omega.len() }))
}

// ============================================================================
// Graph sources
// ============================================================================

/// One element of an input stream.
#[derive(Clone, Debug)]
pub enum StreamItem {
    Graph { ordinal: usize, graph: Graph },
    Invalid { ordinal: usize, error: Error },
}

/// All labeled graphs on `n` vertices, ordered by the graph6 bit string read
/// as a little-endian edge mask (pair `k` in column-major upper-triangle
/// order is bit `k`).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count: u128 = 1u128 << pairs.len();
    (0..count).map(move |mask| {
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
        Graph::from_adjacency(adj).expect("enumerated adjacency is valid")
    })
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u128 {
    1u128 << (n * n.saturating_sub(1) / 2)
}

/// All labeled graphs with `0..=max_n` vertices, as a stream.
pub fn enumerate_up_to(max_n: usize) -> impl Iterator<Item = StreamItem> {
    (0..=max_n)
        .flat_map(labeled_graphs)
        .enumerate()
        .map(|(ordinal, graph)| StreamItem::Graph { ordinal, graph })
}

/// A graph6 stream, one graph per line. Blank lines are ignored; undecodable
/// lines become [`StreamItem::Invalid`].
pub fn graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = StreamItem> {
    reader
        .lines()
        .filter(|l| l.as_ref().map(|s| !s.trim().is_empty()).unwrap_or(true))
        .enumerate()
        .map(|(ordinal, line)| match line {
            Ok(text) => match crate::format::parse_graph6(&text) {
                Ok(graph) => StreamItem::Graph { ordinal, graph },
                Err(error) => StreamItem::Invalid { ordinal, error },
            },
            Err(e) => StreamItem::Invalid {
                ordinal,
                error: Error::MalformedGraph6(e.to_string()),
            },
        })
}

/// Every file in `dir` (sorted by name) parsed as one graph.
pub fn directory_stream(dir: &Path, format: InputFormat) -> std::io::Result<Vec<StreamItem>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .enumerate()
        .map(|(ordinal, path)| {
            let parsed = std::fs::read_to_string(&path)
                .map_err(|e| Error::MalformedEdgeList {
                    line: 0,
                    reason: format!("{}: {e}", path.display()),
                })
                .and_then(|text| parse_graph(&text, format));
            match parsed {
                Ok(graph) => StreamItem::Graph { ordinal, graph },
                Err(error) => StreamItem::Invalid { ordinal, error },
            }
        })
        .collect())
}

// ============================================================================
// Batch runner
// ============================================================================

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub checks: Vec<CheckName>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Graphs above this many vertices are skipped.
    pub max_vertices: usize,
    pub chunk_size: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            checks: CheckName::ALL.to_vec(),
            jobs: 0,
            max_vertices: GUARDRAIL_MAX_N,
            chunk_size: 1024,
        }
    }
}

#[derive(Clone, Debug)]
pub enum StreamOutcome {
    Report {
        ordinal: usize,
        report: VerificationReport,
    },
    Skipped {
        ordinal: usize,
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub checks: usize,
    pub failures: usize,
    pub failed_graphs: usize,
    pub skipped: usize,
    /// Verified graphs per vertex count.
    pub graphs_by_order: BTreeMap<usize, usize>,
    pub per_check: BTreeMap<CheckName, CheckTally>,
}

impl VerifySummary {
    pub fn all_pass(&self) -> bool {
        self.failures == 0
    }

    fn absorb(&mut self, outcome: &StreamOutcome) {
        match outcome {
            StreamOutcome::Skipped { .. } => self.skipped += 1,
            StreamOutcome::Report { report, .. } => {
                self.graphs += 1;
                *self.graphs_by_order.entry(report.n).or_default() += 1;
                let mut failed = false;
                for c in &report.checks {
                    self.checks += 1;
                    let tally = self.per_check.entry(c.name).or_default();
                    if c.pass {
                        tally.passed += 1;
                    } else {
                        tally.failed += 1;
                        self.failures += 1;
                        failed = true;
                    }
                }
                if failed {
                    self.failed_graphs += 1;
                }
            }
        }
    }
}

fn process(item: StreamItem, config: &VerifyConfig) -> StreamOutcome {
    match item {
        StreamItem::Invalid { ordinal, error } => StreamOutcome::Skipped {
            ordinal,
            reason: error.to_string(),
        },
        StreamItem::Graph { ordinal, graph } if graph.n() > config.max_vertices => {
            StreamOutcome::Skipped {
                ordinal,
                reason: Error::GuardrailExceeded {
                    n: graph.n(),
                    limit: config.max_vertices,
                }
                .to_string(),
            }
        }
        StreamItem::Graph { ordinal, graph } => StreamOutcome::Report {
            ordinal,
            report: verify_graph(&graph, &config.checks),
        },
    }
}

/// Verifies every graph of `items`, handing each outcome to `sink` in input
/// order.
pub fn run_verify<I, F>(
    items: I,
    config: &VerifyConfig,
    mut sink: F,
) -> Result<VerifySummary, String>
where
    I: IntoIterator<Item = StreamItem>,
    F: FnMut(&StreamOutcome),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let mut summary = VerifySummary::default();
    let mut items = items.into_iter().peekable();
    let chunk = config.chunk_size.max(1);
    while items.peek().is_some() {
        let batch: Vec<StreamItem> = items.by_ref().take(chunk).collect();
        let outcomes: Vec<StreamOutcome> = if config.jobs == 1 {
            batch.into_iter().map(|i| process(i, config)).collect()
        } else {
            pool.install(|| batch.into_par_iter().map(|i| process(i, config)).collect())
        };
        for o in &outcomes {
            summary.absorb(o);
            sink(o);
        }
    }
    Ok(summary)
}

/// Rejects exhaustive enumeration above `limit` vertices unless forced.
pub fn guardrail(n: usize, limit: usize, force: bool) -> Result<()> {
    if n > limit && !force {
        return Err(Error::GuardrailExceeded { n, limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_edge_list;

    #[test]
    fn check_names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.as_str()));
        }
        assert_eq!(CheckName::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            CheckName::parse_list("counting,inclusion_chain,counting").unwrap(),
            vec![CheckName::InclusionChain, CheckName::Counting]
        );
        assert!(CheckName::parse_list("bogus").is_err());
        assert!(CheckName::parse_list("").is_err());
    }

    #[test]
    fn labeled_graph_counts() {
        for n in 0..=5 {
            assert_eq!(labeled_graphs(n).count() as u128, labeled_graph_count(n));
        }
        assert_eq!(labeled_graph_count(6), 32768);
        let first: Vec<String> = labeled_graphs(3).map(|g| emit_graph6(&g)).collect();
        assert_eq!(first[0], "B?");
        assert_eq!(first[7], "Bw");
    }

    #[test]
    fn all_checks_pass_on_example_graphs() {
        for text in [
            "x a\nx b\nx c",
            "a b\nb c\nc a\nb d",
            "b a\na c\nc d\nc e\nc f",
        ] {
            let g = parse_edge_list(text).unwrap();
            let r = verify_graph(&g, &CheckName::ALL);
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
            assert_eq!(r.checks.len(), 8);
        }
    }

    #[test]
    fn report_json_shape() {
        let g = parse_edge_list("a b\nb c\nc a\nb d").unwrap();
        let r = verify_graph(
            &g,
            &[CheckName::InclusionChain, CheckName::PereyraCrosscheck],
        );
        let v: Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, vec!["checks", "elapsed_ms", "graph_id", "m", "n"]);
        assert_eq!(v["checks"][0]["name"], "inclusion_chain");
        assert!(v["checks"][0]["counterexample"].is_null());
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn invalid_items_are_skipped() {
        let input = "C~\nnot graph6\n\n@\n";
        let items: Vec<StreamItem> = graph6_stream(input.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        let config = VerifyConfig {
            jobs: 1,
            ..VerifyConfig::default()
        };
        let summary = run_verify(items, &config, |_| {}).unwrap();
        assert_eq!(summary.graphs, 2);
        assert_eq!(summary.skipped, 1);
        assert!(summary.all_pass());
    }

    #[test]
    fn guardrail_skips_large_graphs() {
        let g = Graph::empty(13).unwrap();
        let items = vec![StreamItem::Graph {
            ordinal: 0,
            graph: g,
        }];
        let summary = run_verify(items, &VerifyConfig::default(), |_| {}).unwrap();
        assert_eq!(summary.skipped, 1);
        assert!(guardrail(13, 12, false).is_err());
        assert!(guardrail(13, 12, true).is_ok());
    }
}
