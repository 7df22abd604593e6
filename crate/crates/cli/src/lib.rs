//! Command implementations behind the `matchpoly` binary.
//!
//! Each `cmd_*` function returns an [`Outcome`] holding the exit code and
//! whatever would go to stdout and stderr, so the commands can be tested
//! without spawning a process.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use rand::Rng;
use serde::Serialize;

use matchpoly::export::{structure_json, StructureJson};
use matchpoly::generate::{gnp, rng};
use matchpoly::{
    build_skeleton, count_matchings, degree_closed_form, degree_of_matching, enumerate_good_cycles,
    enumerate_good_paths, enumerate_matchings, export_dot, has_common_neighbors, parse_graph,
    parse_matching, verify_with, ClosedFormBreakdown, DegreeBreakdown, Error, Graph, InputFormat,
    Matching, Report, VerificationReport, VerifyOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_MATCHING: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Random graphs generated by `verify --random` above this many matchings are
/// skipped rather than verified.
pub const RANDOM_BATCH_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Path(PathBuf),
    Stdin,
    /// Graph text supplied directly, as if read from a file.
    Text(String),
    /// `count` random graphs on 6–8 vertices with edge probability 0.4,
    /// drawn from the configured seed.
    Random { count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub input: Input,
    pub input_format: InputFormat,
    pub output_format: OutputFormat,
    pub max_vertices: usize,
    pub seed: u64,
}

impl CliConfig {
    pub fn new(input: Input) -> Self {
        CliConfig {
            input,
            input_format: InputFormat::Auto,
            output_format: OutputFormat::Text,
            max_vertices: matchpoly::DEFAULT_MAX_VERTICES,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::TooManyMatchings { .. } => EXIT_CAP,
        _ => EXIT_INVALID_MATCHING,
    }
}

fn from_error(err: Error) -> Outcome {
    Outcome::fail(exit_code(&err), format!("error: {err}"))
}

fn read_text(input: &Input) -> Result<String, Outcome> {
    let read = match input {
        Input::Path(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        Input::Stdin => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map(|_| s)
                .map_err(|e| format!("stdin: {e}"))
        }
        Input::Text(s) => Ok(s.clone()),
        Input::Random { .. } => Err("this command needs an input graph".to_string()),
    };
    read.map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {e}")))
}

fn load_graph(config: &CliConfig) -> Result<Graph, Outcome> {
    if config.max_vertices == 0 {
        return Err(Outcome::fail(EXIT_PARSE, "error: --max-vertices must be at least 1"));
    }
    let text = read_text(&config.input)?;
    parse_graph(&text, config.input_format).map_err(|e| from_error(e.into()))
}

fn unsupported(command: &str, format: OutputFormat) -> Outcome {
    Outcome::fail(
        EXIT_PARSE,
        format!("error: {command} does not support {format:?} output"),
    )
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn edge_list(g: &Graph, pick: impl Fn(matchpoly::EdgeId) -> bool) -> Vec<String> {
    g.edge_ids().filter(|&e| pick(e)).map(|e| g.edge_descriptor(e)).collect()
}

fn join_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

#[derive(Serialize)]
struct AnalyzeJson {
    #[serde(flatten)]
    report: Report,
    matching_count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    notice: Option<String>,
    bonds: Vec<String>,
    pendant_edges: Vec<String>,
    stars_and_triangles: bool,
}

/// Size, matching count, skeleton statistics (when within the cap), bonds,
/// pendant edges and the stars-and-triangles verdict.
pub fn cmd_analyze(config: &CliConfig) -> Outcome {
    let g = match load_graph(config) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let count = count_matchings(&g);
    let bonds = edge_list(&g, |e| g.is_bond(e));
    let pendants = edge_list(&g, |e| g.is_pendant_edge(e));
    let verdict = g.decompose_stars_triangles();

    let (stats, notice) = if count > config.max_vertices as u128 {
        (
            None,
            Some(format!(
                "skeleton not built: {count} matchings exceed the limit of {}",
                config.max_vertices
            )),
        )
    } else {
        match build_skeleton(&g, config.max_vertices) {
            Ok(s) => (Some(s.stats()), None),
            Err(e) => return from_error(e),
        }
    };

    match config.output_format {
        OutputFormat::Json => {
            let mut report = Report::new(&g);
            if let Some(st) = &stats {
                report = report.with_stats(st);
            }
            Outcome::ok(to_json(&AnalyzeJson {
                report,
                matching_count: count.to_string(),
                notice,
                bonds,
                pendant_edges: pendants,
                stars_and_triangles: verdict.is_stars_and_triangles,
            }))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "vertices: {}", g.vertex_count());
            let _ = writeln!(out, "edges: {}", g.edge_count());
            let _ = writeln!(out, "matchings: {count}");
            match &stats {
                Some(st) => {
                    let _ = writeln!(out, "skeleton vertices: {}", st.vertex_count);
                    let _ = writeln!(out, "skeleton edges: {}", st.edge_count);
                    let _ = writeln!(out, "min degree: {}", st.min_degree);
                    let _ = writeln!(out, "max degree: {}", st.max_degree);
                    let _ = writeln!(out, "regular: {}", if st.is_regular { "yes" } else { "no" });
                    let hist: Vec<String> = st
                        .degree_histogram
                        .iter()
                        .map(|(d, c)| format!("{d}:{c}"))
                        .collect();
                    let _ = writeln!(out, "degree histogram: {}", hist.join(" "));
                }
                None => {
                    let _ = writeln!(out, "{}", notice.as_deref().unwrap_or_default());
                }
            }
            let _ = writeln!(out, "bonds: {}", join_or_none(&bonds));
            let _ = writeln!(out, "pendant edges: {}", join_or_none(&pendants));
            let _ = writeln!(
                out,
                "stars and triangles: {}",
                if verdict.is_stars_and_triangles {
                    format!(
                        "yes (triangles: {}, stars: {:?})",
                        verdict.triangle_components, verdict.star_components
                    )
                } else {
                    "no".into()
                }
            );
            Outcome::ok(out)
        }
        f => unsupported("analyze", f),
    }
}

#[derive(Serialize)]
struct DegreeJson {
    matching: Vec<String>,
    breakdown: DegreeBreakdown,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<ClosedFormJson>,
    structures: Vec<StructureJson>,
}

#[derive(Serialize)]
struct ClosedFormJson {
    k: usize,
    edges: Vec<String>,
    s: Vec<usize>,
    total: usize,
}

fn closed_form_json(g: &Graph, c: &ClosedFormBreakdown) -> ClosedFormJson {
    ClosedFormJson {
        k: c.k,
        edges: c.edges.iter().map(|&e| g.edge_descriptor(e)).collect(),
        s: c.terms.clone(),
        total: c.total,
    }
}

/// Degree of one matching as counted from good paths and cycles, plus the
/// closed form when the matching has no common neighbours.
pub fn cmd_degree(config: &CliConfig, matching_spec: &str) -> Outcome {
    let g = match load_graph(config) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let m = match parse_matching(&g, matching_spec) {
        Ok(m) => m,
        Err(e) => return Outcome::fail(EXIT_INVALID_MATCHING, format!("error: {e}")),
    };
    let breakdown = degree_of_matching(&g, &m);
    let closed = if has_common_neighbors(&g, &m) {
        None
    } else {
        match degree_closed_form(&g, &m) {
            Ok(c) => Some(c),
            Err(e) => return from_error(e),
        }
    };
    let mut structures = enumerate_good_paths(&g, &m);
    structures.extend(enumerate_good_cycles(&g, &m));

    match config.output_format {
        OutputFormat::Json => Outcome::ok(to_json(&DegreeJson {
            matching: m.iter().map(|e| g.edge_descriptor(e)).collect(),
            breakdown,
            closed_form: closed.as_ref().map(|c| closed_form_json(&g, c)),
            structures: structures.iter().map(|s| structure_json(&g, s)).collect(),
        })),
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "matching: {}", m.describe(&g));
            let _ = writeln!(out, "oo paths: {}", breakdown.nu_oo);
            let _ = writeln!(out, "cc paths: {}", breakdown.nu_cc);
            let _ = writeln!(out, "oc paths: {}", breakdown.nu_oc);
            let _ = writeln!(out, "good cycles: {}", breakdown.nu_cycles);
            let _ = writeln!(out, "degree: {}", breakdown.total);
            match &closed {
                Some(c) => {
                    let s: Vec<String> = c.terms.iter().map(usize::to_string).collect();
                    let _ = writeln!(
                        out,
                        "closed form: k={} s=[{}] total={}",
                        c.k,
                        s.join(","),
                        c.total
                    );
                }
                None => {
                    let _ = writeln!(out, "closed form: not applicable (common neighbours)");
                }
            }
            for s in &structures {
                let js = structure_json(&g, s);
                let kind = serde_json::to_value(js.kind).expect("kind serialises");
                let _ = writeln!(out, "  {} {}", kind.as_str().unwrap_or("?"), js.edges.join(" "));
            }
            Outcome::ok(out)
        }
        f => unsupported("degree", f),
    }
}

/// The full skeleton as DOT (the default) or JSON. Output depends only on
/// the input bytes.
pub fn cmd_skeleton(config: &CliConfig) -> Outcome {
    let g = match load_graph(config) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let s = match build_skeleton(&g, config.max_vertices) {
        Ok(s) => s,
        Err(e) => return from_error(e),
    };
    match config.output_format {
        OutputFormat::Json => Outcome::ok(Report::new(&g).with_skeleton(&g, &s).to_json() + "\n"),
        OutputFormat::Dot | OutputFormat::Text => Outcome::ok(export_dot(&g, &s)),
    }
}

fn verify_options(config: &CliConfig) -> VerifyOptions {
    VerifyOptions {
        max_vertices: config.max_vertices,
        ..VerifyOptions::default()
    }
}

fn render_report(out: &mut String, r: &VerificationReport) {
    for c in &r.checks {
        let _ = writeln!(
            out,
            "{} {}{}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
        );
    }
    for s in &r.skipped {
        let _ = writeln!(out, "SKIP {s}");
    }
}

/// Runs every check on the input graph, or on a seeded batch of random
/// graphs for [`Input::Random`]. Exit 0 iff every check passed.
pub fn cmd_verify(config: &CliConfig) -> Outcome {
    if let Input::Random { count } = config.input {
        return verify_random(config, count);
    }
    let g = match load_graph(config) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let report = match verify_with(&g, &verify_options(config)) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let mut out = match config.output_format {
        OutputFormat::Json => {
            Report::new(&g).with_stats(&report.stats).with_checks(report.checks.clone()).to_json()
                + "\n"
        }
        OutputFormat::Text => {
            let mut out = String::new();
            render_report(&mut out, &report);
            out
        }
        f => return unsupported("verify", f),
    };
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    if config.output_format == OutputFormat::Text {
        let failed = report.failures().count();
        let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
    }
    Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

/// The graphs `verify --random count` would check, including those it skips.
pub fn random_batch(seed: u64, count: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(6..=8);
            gnp(n, 0.4, &mut r)
        })
        .collect()
}

fn verify_random(config: &CliConfig, count: usize) -> Outcome {
    let mut out = String::new();
    let mut reports = Vec::new();
    let (mut checked, mut skipped, mut failed) = (0, 0, 0);
    for (i, g) in random_batch(config.seed, count).iter().enumerate() {
        let matchings = count_matchings(g);
        if matchings > RANDOM_BATCH_LIMIT as u128 || matchings > config.max_vertices as u128 {
            skipped += 1;
            let _ = writeln!(out, "graph {i}: skipped ({matchings} matchings)");
            continue;
        }
        let report = match verify_with(g, &verify_options(config)) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        checked += 1;
        if !report.all_passed() {
            failed += 1;
        }
        let _ = writeln!(
            out,
            "graph {i}: n={} m={} matchings={} {}",
            g.vertex_count(),
            g.edge_count(),
            matchings,
            if report.all_passed() { "ok" } else { "FAILED" }
        );
        if !report.all_passed() {
            render_report(&mut out, &report);
        }
        reports.push(
            Report::new(g)
                .with_stats(&report.stats)
                .with_checks(report.checks),
        );
    }
    let code = if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = match config.output_format {
        OutputFormat::Json => to_json(&reports),
        OutputFormat::Text => {
            let _ = writeln!(out, "{checked} verified, {skipped} skipped, {failed} failed");
            out
        }
        f => return unsupported("verify", f),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

#[derive(Serialize)]
struct MinDegreeJson {
    edge_count: usize,
    matchings: Vec<Vec<String>>,
    cross_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    notice: Option<String>,
}

/// Matchings whose edges are all bonds or pendant edges, generated directly
/// from the subgraph of such edges.
pub fn min_degree_matchings(g: &Graph) -> Vec<Matching> {
    let special: Vec<matchpoly::EdgeId> = g
        .edge_ids()
        .filter(|&e| g.is_bond(e) || g.is_pendant_edge(e))
        .collect();
    let h = Graph::new(
        g.vertex_count(),
        special.iter().map(|&e| {
            let (u, v) = g.endpoints(e);
            (u.0, v.0)
        }),
    )
    .expect("subgraph of a simple graph");
    let mut out: Vec<Matching> = enumerate_matchings(&h)
        .map(|m| {
            matchpoly::make_matching(g, m.iter().map(|e| special[e.0]))
                .expect("matching of a subgraph")
        })
        .collect();
    out.sort();
    out
}

/// Lists the matchings of minimum skeleton degree (degree = edge count),
/// cross-checked against the skeleton when it fits within the cap.
pub fn cmd_min_degree(config: &CliConfig) -> Outcome {
    let g = match load_graph(config) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let predicted = min_degree_matchings(&g);
    let m = g.edge_count();
    let count = count_matchings(&g);

    let (cross_checked, notice, agrees) = if count <= config.max_vertices as u128 {
        let s = match build_skeleton(&g, config.max_vertices) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        let observed: Vec<Matching> = (0..s.vertex_count())
            .filter(|&i| s.degree(i) == m)
            .map(|i| s.matching(i).clone())
            .collect();
        let agrees = observed == predicted;
        let notice = (!agrees).then(|| {
            format!(
                "skeleton has {} matchings of degree {m}, predicate gives {}",
                observed.len(),
                predicted.len()
            )
        });
        (true, notice, agrees)
    } else {
        (
            false,
            Some(format!(
                "not cross-checked: {count} matchings exceed the limit of {}",
                config.max_vertices
            )),
            true,
        )
    };

    let code = if agrees { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = match config.output_format {
        OutputFormat::Json => to_json(&MinDegreeJson {
            edge_count: m,
            matchings: predicted
                .iter()
                .map(|x| x.iter().map(|e| g.edge_descriptor(e)).collect())
                .collect(),
            cross_checked,
            notice: notice.clone(),
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "minimum degree {m}, attained by {} matchings:", predicted.len());
            for x in &predicted {
                let _ = writeln!(out, "  {}", x.describe(&g));
            }
            let _ = writeln!(
                out,
                "{}",
                match (&notice, cross_checked) {
                    (Some(n), _) => n.clone(),
                    (None, true) => "cross-checked against skeleton degrees".into(),
                    (None, false) => String::new(),
                }
            );
            out
        }
        f => return unsupported("min-degree", f),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
