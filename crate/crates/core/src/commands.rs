//! Implementations of the `lmis` subcommands.
//!
//! Each command writes its report to `out`, diagnostics to `err`, and returns
//! a [`Status`] that maps onto the process exit code.

use std::fmt::Write as _;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use crate::augmentoid::{canonical_augment, verify_lemmas, AugmentationResult, LemmaReport};
use crate::decomposition::{decompose, decompose_unchecked, DecompositionReport};
use crate::error::Error;
use crate::format::{emit_graph6, parse_edge_list, parse_graph, parse_graph6, InputFormat};
use crate::graph::{Graph, VertexSet};
use crate::harness::{
    directory_stream, enumerate_up_to, graph6_stream, guardrail, run_verify, verify_graph,
    CheckName, StreamItem, StreamOutcome, VerificationReport, VerifyConfig, VerifySummary,
    GUARDRAIL_MAX_N,
};
use crate::independence::{
    diff, is_crown, is_konig_egervary, BaseFamily, FamilySurvey, LocalAlpha, SetFamily,
};
use crate::matching::max_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Analyze,
    Augment,
    Decompose,
    Verify,
    Examples,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
    /// All labeled graphs on `0..=max_n` vertices.
    Enumerate(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub input: InputSource,
    /// `None` picks a format from the input.
    pub format: Option<InputFormat>,
    pub checks: Vec<CheckName>,
    pub output: OutputMode,
    pub jobs: usize,
    pub force: bool,
    pub s: Option<String>,
    pub t: Option<String>,
}

impl RunConfig {
    pub fn new(mode: Mode) -> Self {
        RunConfig {
            mode,
            input: InputSource::Stdin,
            format: None,
            checks: CheckName::ALL.to_vec(),
            output: OutputMode::Text,
            jobs: 0,
            force: false,
            s: None,
            t: None,
        }
    }

    fn json(&self) -> bool {
        self.output == OutputMode::Json
    }
}

/// Outcome of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

/// Errors that abort a command before any verdict. All map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Graph(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CommandError {
    pub const EXIT_CODE: u8 = 2;
}

pub type CommandResult = Result<Status, CommandError>;

/// Dispatches on `config.mode`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> CommandResult {
    match config.mode {
        Mode::Analyze => {
            let g = load_single(config)?;
            cmd_analyze(&g, config, out)
        }
        Mode::Augment => {
            let g = load_single(config)?;
            let s = required_set(&g, config.s.as_deref(), "--s")?;
            let t = required_set(&g, config.t.as_deref(), "--t")?;
            cmd_augment(&g, &s, &t, config, out)
        }
        Mode::Decompose => {
            let g = load_single(config)?;
            let s = required_set(&g, config.s.as_deref(), "--s")?;
            cmd_decompose(&g, &s, config, out)
        }
        Mode::Verify => cmd_verify(config, out, err),
        Mode::Examples => cmd_examples(config, out),
    }
}

// ============================================================================
// Input
// ============================================================================

fn read_input(source: &InputSource) -> Result<String, CommandError> {
    match source {
        InputSource::Stdin => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
        InputSource::Path(p) => std::fs::read_to_string(p)
            .map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", p.display()))),
        InputSource::Enumerate(_) => Err(CommandError::Usage(
            "--max-n is only valid for verify; pass a graph with --input".into(),
        )),
    }
}

/// Guesses the format of a single-graph input: one whitespace-free token is
/// graph6, anything else an edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    match (lines.next(), lines.next()) {
        (Some(line), None) if !line.contains(char::is_whitespace) && !line.contains(':') => {
            if parse_graph6(line).is_ok() {
                InputFormat::Graph6
            } else {
                InputFormat::EdgeList
            }
        }
        _ => InputFormat::EdgeList,
    }
}

/// Reads the one graph a single-graph command operates on.
pub fn load_single(config: &RunConfig) -> Result<Graph, CommandError> {
    let text = read_input(&config.input)?;
    let format = config.format.unwrap_or_else(|| detect_format(&text));
    Ok(parse_graph(&text, format)?)
}

fn required_set(g: &Graph, text: Option<&str>, flag: &str) -> Result<VertexSet, CommandError> {
    let text = text.ok_or_else(|| CommandError::Usage(format!("{flag} is required")))?;
    Ok(g.parse_vertex_set(text)?)
}

// ============================================================================
// Rendering helpers
// ============================================================================

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

/// `=` for equal families, `<` for a proper subfamily, `!<=` otherwise.
fn relation(a: &SetFamily, b: &SetFamily) -> &'static str {
    if a.same_members(b) {
        "="
    } else if a.is_subfamily_of(b) {
        "<"
    } else {
        "!<="
    }
}

fn chain_text(s: &FamilySurvey) -> (String, bool) {
    let r1 = relation(&s.crit, &s.crown);
    let r2 = relation(&s.crown, &s.psi);
    let holds = r1 != "!<=" && r2 != "!<=";
    (format!("CritIndep {r1} Crown {r2} Psi"), holds)
}

fn family_line(out: &mut String, g: &Graph, label: &str, f: &SetFamily) {
    let _ = writeln!(out, "{label} ({}): {}", f.len(), f.format(g));
}

fn set_list(g: &Graph, f: &SetFamily) -> Vec<String> {
    f.iter().map(|s| g.format_set(s)).collect()
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

// ============================================================================
// analyze
// ============================================================================

/// Everything `analyze` reports about one graph.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub d: i64,
    pub critical_witness: String,
    pub konig_egervary: bool,
    pub bipartite: bool,
    pub core: String,
    pub corona: String,
    pub omega: Vec<String>,
    pub psi: Vec<String>,
    pub crown: Vec<String>,
    pub crit_indep: Vec<String>,
    pub inclusion_chain: String,
    pub inclusion_chain_holds: bool,
}

pub fn analysis(g: &Graph, survey: &FamilySurvey) -> Analysis {
    let (chain, holds) = chain_text(survey);
    let core = g.full_set().with_bits(survey.omega.intersection_mask());
    let corona = g.full_set().with_bits(survey.omega.union_mask());
    Analysis {
        graph6: emit_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        alpha: survey.alpha,
        mu: max_matching(g).len(),
        d: survey.critical.d_of_g,
        critical_witness: g.format_set(&survey.critical.witness),
        konig_egervary: is_konig_egervary(g),
        bipartite: g.is_bipartite(),
        core: g.format_set(&core),
        corona: g.format_set(&corona),
        omega: set_list(g, &survey.omega),
        psi: set_list(g, &survey.psi),
        crown: set_list(g, &survey.crown),
        crit_indep: set_list(g, &survey.crit),
        inclusion_chain: chain,
        inclusion_chain_holds: holds,
    }
}

pub fn render_analysis(g: &Graph, survey: &FamilySurvey, a: &Analysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: {} (n = {}, m = {})", a.graph6, a.n, a.m);
    let _ = writeln!(out, "alpha(G) = {}", a.alpha);
    let _ = writeln!(out, "mu(G) = {}", a.mu);
    let _ = writeln!(out, "d(G) = {} (witness {})", a.d, a.critical_witness);
    let _ = writeln!(out, "Konig-Egervary: {}", yes_no(a.konig_egervary));
    let _ = writeln!(out, "bipartite: {}", yes_no(a.bipartite));
    let _ = writeln!(out, "core = {}", a.core);
    let _ = writeln!(out, "corona = {}", a.corona);
    family_line(&mut out, g, "Omega", &survey.omega);
    family_line(&mut out, g, "Psi", &survey.psi);
    family_line(&mut out, g, "Crown", &survey.crown);
    family_line(&mut out, g, "CritIndep", &survey.crit);
    let _ = writeln!(
        out,
        "inclusion chain: {} [{}]",
        a.inclusion_chain,
        if a.inclusion_chain_holds {
            "holds"
        } else {
            "VIOLATED"
        }
    );
    out
}

fn render_checks(out: &mut String, report: &VerificationReport) {
    for c in &report.checks {
        let label = if c.name.is_cited() {
            " (cited-result cross-check)"
        } else {
            ""
        };
        let _ = writeln!(out, "check {}{}: {}", c.name, label, pass_fail(c.pass));
        if let Some(cx) = &c.counterexample {
            let _ = writeln!(out, "  counterexample: {cx}");
        }
    }
}

pub fn cmd_analyze(g: &Graph, config: &RunConfig, out: &mut dyn Write) -> CommandResult {
    guardrail(g.n(), GUARDRAIL_MAX_N, config.force)?;
    let survey = FamilySurvey::compute(g);
    let a = analysis(g, &survey);
    let report = verify_graph(g, &config.checks);
    let pass = report.all_pass() && a.inclusion_chain_holds;
    if config.json() {
        write_json(out, &json!({ "analysis": a, "report": report }))?;
    } else {
        let mut text = render_analysis(g, &survey, &a);
        render_checks(&mut text, &report);
        let _ = writeln!(text, "verdict: {}", pass_fail(pass));
        out.write_all(text.as_bytes())?;
    }
    Ok(Status::from_pass(pass))
}

// ============================================================================
// augment
// ============================================================================

pub fn render_augmentation(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    r: &AugmentationResult,
    lemmas: &LemmaReport,
) -> String {
    let f = |x: &VertexSet| g.format_set(x);
    let mut out = String::new();
    let _ = writeln!(out, "S = {}", f(s));
    let _ = writeln!(out, "T = {}", f(t));
    let _ = writeln!(out, "A = S - N[T] = {}", f(&r.a));
    let _ = writeln!(out, "B = T - N[S] = {}", f(&r.b));
    let _ = writeln!(out, "S+ = S u B = {}", f(&r.s_plus));
    let _ = writeln!(out, "T+ = T u A = {}", f(&r.t_plus));
    let _ = writeln!(out, "|S+| = |T+| = {}", r.common_size);
    let cross = lemmas
        .cross_matching
        .as_ref()
        .map(|m| m.format(g))
        .unwrap_or_else(|| "none".into());
    let _ = writeln!(out, "cross matching S n N(T) <-> T n N(S): {cross}");
    for c in &lemmas.checks {
        let _ = writeln!(out, "lemma {}: {}", c.name, pass_fail(c.pass));
    }
    out
}

fn augmentation_json(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    r: &AugmentationResult,
    lemmas: &LemmaReport,
) -> Value {
    let f = |x: &VertexSet| g.format_set(x);
    json!({
        "s": f(s),
        "t": f(t),
        "a": f(&r.a),
        "b": f(&r.b),
        "s_plus": f(&r.s_plus),
        "t_plus": f(&r.t_plus),
        "common_size": r.common_size,
        "cross_matching": lemmas.cross_matching.as_ref().map(|m| m.format(g)),
        "lemmas": lemmas.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "evidence": c.evidence,
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_augment(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    config: &RunConfig,
    out: &mut dyn Write,
) -> CommandResult {
    let r = canonical_augment(g, s, t)?;
    let lemmas = verify_lemmas(g, s, t)?;
    if config.json() {
        write_json(out, &augmentation_json(g, s, t, &r, &lemmas))?;
    } else {
        out.write_all(render_augmentation(g, s, t, &r, &lemmas).as_bytes())?;
    }
    Ok(Status::from_pass(lemmas.all_pass()))
}

// ============================================================================
// decompose
// ============================================================================

pub fn render_decomposition(g: &Graph, r: &DecompositionReport) -> String {
    let f = |x: &VertexSet| g.format_set(x);
    let h = r.h.graph();
    let h_vertices = g.full_set().with_bits(r.h.support_mask());
    let mut out = String::new();
    let _ = writeln!(out, "S = {}", f(&r.s));
    let _ = writeln!(out, "H = G - N[S] on {}", f(&h_vertices));
    let _ = writeln!(
        out,
        "alpha(G) = {} ; |S| + alpha(H) = {} + {} = {}",
        r.alpha_g,
        r.s.len(),
        r.alpha_h,
        r.s.len() + r.alpha_h
    );
    family_line(&mut out, h, "Psi(H)", &r.psi_h);
    family_line(&mut out, h, "Omega(H)", &r.omega_h);
    family_line(&mut out, g, "Psi-extensions of S", &r.psi_extensions);
    family_line(&mut out, g, "Omega-extensions of S", &r.omega_extensions);
    let _ = writeln!(out, "core over extensions = {}", f(&r.core_s));
    let _ = writeln!(out, "corona over extensions = {}", f(&r.corona_s));
    let _ = writeln!(
        out,
        "(i) alpha identity: {}",
        pass_fail(r.parts.alpha_identity)
    );
    let _ = writeln!(out, "(ii) Psi bijection: {}", pass_fail(r.parts.bijection));
    let _ = writeln!(
        out,
        "(iii) Omega identity: {}",
        pass_fail(r.parts.omega_identity)
    );
    let _ = writeln!(out, "(iv) core/corona: {}", pass_fail(r.parts.core_corona));
    let _ = writeln!(
        out,
        "counting: |Psi(H)| = {}, |Omega(H)| = {}",
        r.psi_h.len(),
        r.omega_h.len()
    );
    out
}

fn decomposition_json(g: &Graph, r: &DecompositionReport) -> Value {
    let h = r.h.graph();
    json!({
        "s": g.format_set(&r.s),
        "h_vertices": g.format_set(&g.full_set().with_bits(r.h.support_mask())),
        "alpha_g": r.alpha_g,
        "alpha_h": r.alpha_h,
        "psi_h": set_list(h, &r.psi_h),
        "omega_h": set_list(h, &r.omega_h),
        "psi_extensions": set_list(g, &r.psi_extensions),
        "omega_extensions": set_list(g, &r.omega_extensions),
        "core": g.format_set(&r.core_s),
        "corona": g.format_set(&r.corona_s),
        "parts": {
            "alpha_identity": r.parts.alpha_identity,
            "bijection": r.parts.bijection,
            "omega_identity": r.parts.omega_identity,
            "core_corona": r.parts.core_corona,
        },
    })
}

/// Decomposes around `s`. With `force`, a set outside Ψ(G) is decomposed
/// anyway and the failing parts are reported.
pub fn cmd_decompose(
    g: &Graph,
    s: &VertexSet,
    config: &RunConfig,
    out: &mut dyn Write,
) -> CommandResult {
    guardrail(g.n(), GUARDRAIL_MAX_N, config.force)?;
    let r = if config.force {
        if !crate::independence::is_independent(g, s)? {
            return Err(Error::NotLocalMax {
                set: g.format_set(s),
                size: s.len(),
                local_alpha: None,
            }
            .into());
        }
        decompose_unchecked(g, s)
    } else {
        decompose(g, s)?
    };
    if config.json() {
        write_json(out, &decomposition_json(g, &r))?;
    } else {
        out.write_all(render_decomposition(g, &r).as_bytes())?;
    }
    Ok(Status::from_pass(r.parts.all_hold()))
}

// ============================================================================
// verify
// ============================================================================

pub fn render_summary(summary: &VerifySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "summary: {} graphs, {} checks, {} failures ({} graphs failing), {} skipped",
        summary.graphs, summary.checks, summary.failures, summary.failed_graphs, summary.skipped
    );
    for (n, count) in &summary.graphs_by_order {
        let _ = writeln!(out, "  n = {n}: {count} graphs");
    }
    for (name, tally) in &summary.per_check {
        let label = if name.is_cited() {
            " (cited-result cross-check)"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {name}{label}: {} passed, {} failed",
            tally.passed, tally.failed
        );
    }
    let _ = writeln!(out, "verdict: {}", pass_fail(summary.all_pass()));
    out
}

fn verify_items(config: &RunConfig) -> Result<Box<dyn Iterator<Item = StreamItem>>, CommandError> {
    match &config.input {
        InputSource::Enumerate(max_n) => {
            guardrail(*max_n, GUARDRAIL_MAX_N, config.force)?;
            Ok(Box::new(enumerate_up_to(*max_n)))
        }
        InputSource::Stdin => match config.format.unwrap_or(InputFormat::Graph6) {
            InputFormat::Graph6 => Ok(Box::new(graph6_stream(BufReader::new(io::stdin())))),
            InputFormat::EdgeList => {
                let text = read_input(&config.input)?;
                Ok(Box::new(std::iter::once(single_item(parse_edge_list(
                    &text,
                )))))
            }
        },
        InputSource::Path(p) if p.is_dir() => {
            let items = directory_stream(p, config.format.unwrap_or(InputFormat::EdgeList))
                .map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", p.display())))?;
            Ok(Box::new(items.into_iter()))
        }
        InputSource::Path(p) => match config.format.unwrap_or(InputFormat::Graph6) {
            InputFormat::Graph6 => {
                let file = std::fs::File::open(p).map_err(|e| {
                    CommandError::Usage(format!("cannot read {}: {e}", p.display()))
                })?;
                Ok(Box::new(graph6_stream(BufReader::new(file))))
            }
            InputFormat::EdgeList => {
                let text = read_input(&config.input)?;
                Ok(Box::new(std::iter::once(single_item(parse_edge_list(
                    &text,
                )))))
            }
        },
    }
}

fn single_item(parsed: crate::Result<Graph>) -> StreamItem {
    match parsed {
        Ok(graph) => StreamItem::Graph { ordinal: 0, graph },
        Err(error) => StreamItem::Invalid { ordinal: 0, error },
    }
}

/// Verifies a stream. JSON mode writes one report per line to `out` and the
/// summary to `err`; text mode lists failures and skips, then the summary.
pub fn cmd_verify(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> CommandResult {
    let items = verify_items(config)?;
    let verify_config = VerifyConfig {
        checks: config.checks.clone(),
        jobs: config.jobs,
        max_vertices: if config.force {
            usize::MAX
        } else {
            GUARDRAIL_MAX_N
        },
        ..VerifyConfig::default()
    };
    let json = config.json();
    let mut io_error = None;
    let summary = run_verify(items, &verify_config, |outcome| {
        if io_error.is_some() {
            return;
        }
        let written = match outcome {
            StreamOutcome::Report { report, .. } if json => write_json(out, report),
            StreamOutcome::Report { ordinal, report } if !report.all_pass() => {
                let mut text = format!(
                    "graph #{ordinal} {} (n = {}): FAIL\n",
                    report.graph_id, report.n
                );
                render_checks(&mut text, report);
                out.write_all(text.as_bytes())
            }
            StreamOutcome::Report { .. } => Ok(()),
            StreamOutcome::Skipped { ordinal, reason } => {
                writeln!(err, "skipped #{ordinal}: {reason}")
            }
        };
        if let Err(e) = written {
            io_error = Some(e);
        }
    })
    .map_err(CommandError::Usage)?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    if json {
        write_json(err, &summary)?;
    } else {
        out.write_all(render_summary(&summary).as_bytes())?;
    }
    Ok(Status::from_pass(summary.all_pass()))
}

// ============================================================================
// examples
// ============================================================================

pub const STAR: &str = "x a\nx b\nx c\n";
pub const TRIANGLE_PENDANT: &str = "a b\nb c\nc a\nb d\n";
pub const AUGMENTATION_GRAPH: &str = "b a\na c\nc d\nc e\nc f\n";

fn example_graph(text: &str) -> Graph {
    parse_edge_list(text).expect("built-in example parses")
}

fn set(g: &Graph, text: &str) -> VertexSet {
    g.parse_vertex_set(text)
        .expect("built-in example set parses")
}

fn edges_text(g: &Graph) -> String {
    let e: Vec<String> = g
        .edges()
        .map(|(u, v)| format!("{}-{}", g.label(u), g.label(v)))
        .collect();
    e.join(", ")
}

fn expect(out: &mut String, ok: &mut bool, claim: &str, holds: bool) {
    *ok &= holds;
    let _ = writeln!(out, "  [{}] {claim}", if holds { "ok" } else { "MISMATCH" });
}

fn example_star(out: &mut String) -> bool {
    let g = example_graph(STAR);
    let s = FamilySurvey::compute(&g);
    let leaves = set(&g, "a,b,c");
    let nbhd = g.open_neighborhood(&leaves).expect("own set");
    let d = diff(&g, &leaves).expect("own set");
    let mut ok = true;
    let _ = writeln!(out, "== star K_1,3 ==");
    let _ = writeln!(out, "edges: {}", edges_text(&g));
    let _ = writeln!(
        out,
        "d({}) = {} - {} = {}",
        g.format_set(&leaves),
        leaves.len(),
        nbhd.len(),
        d
    );
    let _ = writeln!(out, "d(G) = {}", s.critical.d_of_g);
    family_line(out, &g, "CritIndep", &s.crit);
    family_line(out, &g, "Crown", &s.crown);
    family_line(out, &g, "Psi", &s.psi);
    let (chain, _) = chain_text(&s);
    let _ = writeln!(out, "relation: {chain}");
    expect(
        out,
        &mut ok,
        "d({a,b,c}) = 2 and d(G) = 2",
        d == 2 && s.critical.d_of_g == 2,
    );
    expect(
        out,
        &mut ok,
        "{a,b,c} is the unique critical independent set",
        s.crit.len() == 1 && s.crit.contains(&leaves),
    );
    expect(
        out,
        &mut ok,
        "CritIndep < Crown = Psi",
        chain == "CritIndep < Crown = Psi",
    );
    ok
}

fn example_triangle(out: &mut String) -> bool {
    let g = example_graph(TRIANGLE_PENDANT);
    let s = FamilySurvey::compute(&g);
    let a = set(&g, "a");
    let mut local = LocalAlpha::new(g.adjacency());
    let local_a = local.local_alpha(a.bits());
    let a_crown = is_crown(&g, &a).expect("own set");
    let mut ok = true;
    let _ = writeln!(out, "== triangle with pendant ==");
    let _ = writeln!(out, "edges: {}", edges_text(&g));
    let _ = writeln!(
        out,
        "{{a}}: alpha(G[N[{{a}}]]) = {local_a}, in Psi: {}, crown: {}",
        yes_no(s.psi.contains(&a)),
        yes_no(a_crown)
    );
    let _ = writeln!(out, "d(G) = {}", s.critical.d_of_g);
    family_line(out, &g, "Crown", &s.crown);
    family_line(out, &g, "CritIndep", &s.crit);
    family_line(out, &g, "Psi", &s.psi);
    let (chain, _) = chain_text(&s);
    let _ = writeln!(out, "relation: {chain}");
    let expected = ["{}", "{d}", "{a,d}", "{c,d}"];
    expect(
        out,
        &mut ok,
        "Crown = CritIndep = {{}, {d}, {a,d}, {c,d}}",
        set_list(&g, &s.crown) == expected && s.crit.same_members(&s.crown),
    );
    expect(
        out,
        &mut ok,
        "{a} in Psi - Crown",
        s.psi.contains(&a) && !a_crown,
    );
    expect(out, &mut ok, "d(G) = 0", s.critical.d_of_g == 0);
    expect(out, &mut ok, "Konig-Egervary", is_konig_egervary(&g));
    ok
}

fn augmentation_block(
    out: &mut String,
    g: &Graph,
    s_text: &str,
    t_text: &str,
) -> Option<AugmentationResult> {
    let s = set(g, s_text);
    let t = set(g, t_text);
    let r = canonical_augment(g, &s, &t).ok()?;
    let lemmas = verify_lemmas(g, &s, &t).ok()?;
    out.push_str(&render_augmentation(g, &s, &t, &r, &lemmas));
    lemmas.all_pass().then_some(r)
}

fn example_augmentation(out: &mut String) -> bool {
    let g = example_graph(AUGMENTATION_GRAPH);
    let omega_local = |text: &str| {
        let x = set(&g, text);
        let h = g
            .induced_subgraph(&g.closed_neighborhood(&x).expect("own set"))
            .expect("own set");
        let omega = BaseFamily::Omega;
        let fam = crate::independence::enumerate_family(h.graph(), omega);
        fam.format(h.graph())
    };
    let mut ok = true;
    let _ = writeln!(out, "== canonical augmentation ==");
    let _ = writeln!(out, "edges: {}", edges_text(&g));
    let _ = writeln!(out, "Omega(G[N[S]]) = {}", omega_local("a,d,e"));
    let _ = writeln!(out, "Omega(G[N[T]]) = {}", omega_local("b,d,f"));
    let r = augmentation_block(out, &g, "a,d,e", "b,d,f");
    let shown = r.as_ref().map(|r| {
        (
            g.format_set(&r.a),
            g.format_set(&r.b),
            g.format_set(&r.s_plus),
            g.format_set(&r.t_plus),
            r.common_size,
        )
    });
    expect(
        out,
        &mut ok,
        "A = {e}, B = {f}",
        matches!(&shown, Some((a, b, _, _, _)) if a == "{e}" && b == "{f}"),
    );
    expect(
        out,
        &mut ok,
        "S+ = {a,d,e,f}, T+ = {b,d,e,f}, |S+| = |T+| = 4",
        matches!(&shown, Some((_, _, sp, tp, 4)) if sp == "{a,d,e,f}" && tp == "{b,d,e,f}"),
    );
    ok
}

fn example_previous_results(out: &mut String) -> bool {
    let g = example_graph(AUGMENTATION_GRAPH);
    let mut ok = true;
    let _ = writeln!(out, "== earlier augmentation results as special cases ==");
    let _ = writeln!(out, "edges: {}", edges_text(&g));
    let _ = writeln!(out, "-- disjoint S, T with S u T independent --");
    let r = augmentation_block(out, &g, "e", "f");
    expect(
        out,
        &mut ok,
        "A = S, B = T, S u T in Psi",
        matches!(&r, Some(r) if r.a.bits() == set(&g, "e").bits()
            && r.b.bits() == set(&g, "f").bits()
            && r.s_plus.bits() == set(&g, "e,f").bits()),
    );
    let _ = writeln!(out, "-- nested closed neighborhoods N[S] in N[T] --");
    let r = augmentation_block(out, &g, "e", "a,d,e");
    let t = set(&g, "a,d,e");
    expect(
        out,
        &mut ok,
        "A = {}, S u (T - N[S]) in Psi with size |T|",
        matches!(&r, Some(r) if r.a.is_empty() && r.s_plus.len() == t.len()),
    );
    ok
}

/// Replays the four worked examples. Byte-stable.
pub fn render_examples() -> (String, bool) {
    let mut out = String::new();
    let mut ok = example_star(&mut out);
    out.push('\n');
    ok &= example_triangle(&mut out);
    out.push('\n');
    ok &= example_augmentation(&mut out);
    out.push('\n');
    ok &= example_previous_results(&mut out);
    (out, ok)
}

pub fn cmd_examples(config: &RunConfig, out: &mut dyn Write) -> CommandResult {
    let (text, ok) = render_examples();
    if config.json() {
        write_json(out, &json!({ "text": text, "pass": ok }))?;
    } else {
        out.write_all(text.as_bytes())?;
    }
    Ok(Status::from_pass(ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_reproduce() {
        let (text, ok) = render_examples();
        assert!(ok, "{text}");
        assert!(text.contains("d({a,b,c}) = 3 - 1 = 2\n"));
        assert!(text.contains("Crown (4): {{}, {d}, {a,d}, {c,d}}\n"));
        assert!(text.contains("A = S - N[T] = {e}\nB = T - N[S] = {f}\n"));
        assert!(text.is_ascii());
        assert_eq!(render_examples().0, text);
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("C~\n"), InputFormat::Graph6);
        assert_eq!(detect_format("a b\n"), InputFormat::EdgeList);
        assert_eq!(detect_format("vertices: a\n"), InputFormat::EdgeList);
        assert_eq!(detect_format("# c\nC~"), InputFormat::Graph6);
    }

    #[test]
    fn augment_renders_worked_pair() {
        let g = example_graph(AUGMENTATION_GRAPH);
        let mut out = Vec::new();
        let config = RunConfig::new(Mode::Augment);
        let status =
            cmd_augment(&g, &set(&g, "a,d,e"), &set(&g, "b,d,f"), &config, &mut out).unwrap();
        assert_eq!(status, Status::Pass);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("S+ = S u B = {a,d,e,f}\n"));
        assert!(text.contains("T+ = T u A = {b,d,e,f}\n"));
        assert!(text.contains("|S+| = |T+| = 4\n"));
    }

    #[test]
    fn augment_rejects_non_member() {
        let g = example_graph(AUGMENTATION_GRAPH);
        let config = RunConfig::new(Mode::Augment);
        let err = cmd_augment(
            &g,
            &set(&g, "a"),
            &set(&g, "b,d,f"),
            &config,
            &mut Vec::new(),
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("{a}") && msg.contains("alpha(G[N[S]]) = 2"),
            "{msg}"
        );
    }

    #[test]
    fn forced_decomposition_reports_failure() {
        let g = example_graph(AUGMENTATION_GRAPH);
        let mut config = RunConfig::new(Mode::Decompose);
        assert!(cmd_decompose(&g, &set(&g, "c"), &config, &mut Vec::new()).is_err());
        config.force = true;
        let mut out = Vec::new();
        let status = cmd_decompose(&g, &set(&g, "c"), &config, &mut out).unwrap();
        assert_eq!(status, Status::Fail);
        assert!(String::from_utf8(out)
            .unwrap()
            .contains("(i) alpha identity: FAIL"));
    }

    #[test]
    fn analyze_star() {
        let g = example_graph(STAR);
        let config = RunConfig::new(Mode::Analyze);
        let mut out = Vec::new();
        assert_eq!(cmd_analyze(&g, &config, &mut out).unwrap(), Status::Pass);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("d(G) = 2"));
        assert!(text.contains("inclusion chain: CritIndep < Crown = Psi [holds]"));
    }
}
