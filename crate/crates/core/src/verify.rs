//! Batch checker for the structural facts about the skeleton.
//!
//! `verify_all` builds the skeleton of one graph, recomputes every degree by
//! independent routes and tests each claimed property matching by matching.
//! Every entry of the report must pass on every valid input; a failing entry
//! names the first few counterexamples.

use std::collections::HashMap;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::Result;
use crate::exec::Execution;
use crate::good::{
    classify_alternating_path, degree_of_matching, enumerate_good_cycles, enumerate_good_paths,
    DegreeBreakdown, StructureKind,
};
use crate::graph::{EdgeId, Graph};
use crate::matching::{
    classify_adjacency, has_common_neighbors, is_adjacent_by_connectivity, saturated_vertices,
    Matching, WitnessKind,
};
use crate::skeleton::{
    build_skeleton_pairwise_with, build_skeleton_with, check_matching_cap, degree_closed_form,
    is_min_degree_matching, predict_regular, SkeletonGraph, SkeletonStats, DEFAULT_MAX_VERTICES,
};

/// Largest matching count for which the quadratic pairwise cross-checks run.
pub const DEFAULT_PAIRWISE_LIMIT: usize = 2000;

const MAX_REPORTED_FAILURES: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_vertices: usize,
    pub pairwise_limit: usize,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            pairwise_limit: DEFAULT_PAIRWISE_LIMIT,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub matching_count: usize,
    pub stats: SkeletonStats,
    pub checks: Vec<Check>,
    /// Checks not run, with the reason.
    pub skipped: Vec<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn outcome(name: &str, checked: usize, unit: &str, failures: Vec<String>) -> Check {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{checked} {unit} checked")
    } else {
        let shown: Vec<&str> = failures
            .iter()
            .take(MAX_REPORTED_FAILURES)
            .map(String::as_str)
            .collect();
        format!(
            "{} of {checked} {unit} failed: {}",
            failures.len(),
            shown.join("; ")
        )
    };
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn single(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

pub fn verify_all(g: &Graph, max_vertices: usize) -> Result<VerificationReport> {
    verify_with(
        g,
        &VerifyOptions {
            max_vertices,
            ..VerifyOptions::default()
        },
    )
}

pub fn verify_with(g: &Graph, opts: &VerifyOptions) -> Result<VerificationReport> {
    let hosoya = check_matching_cap(g, opts.max_vertices)?;
    let exec = opts.exec;
    let skeleton = build_skeleton_with(g, opts.max_vertices, exec)?;
    let matchings = skeleton.matchings();
    let m = g.edge_count();
    let breakdowns: Vec<DegreeBreakdown> = exec.map(matchings, |mt| degree_of_matching(g, mt));
    let degrees: Vec<usize> = breakdowns.iter().map(|b| b.total).collect();
    let index: HashMap<&EdgeSet, usize> = matchings
        .iter()
        .enumerate()
        .map(|(i, mt)| (mt.edges(), i))
        .collect();
    let stats = skeleton.stats();
    let ctx = Context {
        g,
        skeleton: &skeleton,
        breakdowns: &breakdowns,
        degrees: &degrees,
        index: &index,
    };

    let mut checks = Vec::new();
    let mut skipped = Vec::new();

    checks.push(single(
        "matching-count-agrees-with-hosoya-recurrence",
        matchings.len() == hosoya,
        format!("enumerated {}, recurrence {hosoya}", matchings.len()),
    ));
    checks.push(ctx.neighbour_lists_consistent());

    if matchings.len() <= opts.pairwise_limit {
        checks.push(ctx.adjacency_criteria_agree(exec));
        checks.push(ctx.matches_pairwise_skeleton(opts.max_vertices, exec)?);
    } else {
        skipped.push(format!(
            "pairwise cross-checks: {} matchings exceed the pairwise limit {}",
            matchings.len(),
            opts.pairwise_limit
        ));
    }

    checks.push(ctx.adjacent_sizes_differ_by_at_most_one());
    checks.push(single(
        "empty-matching-degree-equals-edge-count",
        matchings[0].is_empty() && degrees[0] == m,
        format!("d(∅) = {}, m = {m}", degrees[0]),
    ));
    checks.extend(ctx.without_common_neighbours(exec));
    checks.push(ctx.structures_well_formed(exec));
    checks.push(ctx.perfect_matchings_have_no_open_paths());
    checks.push(ctx.monotone_under_inclusion());
    checks.push(single(
        "minimum-degree-equals-edge-count",
        stats.min_degree == m,
        format!("minimum degree {}, m = {m}", stats.min_degree),
    ));
    checks.push(single(
        "skeleton-connected",
        skeleton.is_connected(),
        format!("{} vertices", skeleton.vertex_count()),
    ));
    checks.push(ctx.single_edge_minimum_degree());
    checks.push(ctx.minimum_degree_matchings());

    let regular = predict_regular(g);
    checks.push(single(
        "regular-iff-stars-and-triangles",
        regular == stats.is_regular && (!regular || stats.min_degree == m),
        format!(
            "stars-and-triangles {regular}, skeleton regular {} (degrees {}..={})",
            stats.is_regular, stats.min_degree, stats.max_degree
        ),
    ));
    if regular {
        let off: Vec<String> = matchings
            .iter()
            .zip(&degrees)
            .filter(|(_, &d)| d != m)
            .map(|(mt, d)| format!("d({}) = {d}", mt.name()))
            .collect();
        checks.push(outcome(
            "stars-and-triangles-constant-degree",
            matchings.len(),
            "matchings",
            off,
        ));
    }

    Ok(VerificationReport {
        matching_count: matchings.len(),
        stats,
        checks,
        skipped,
    })
}

struct Context<'a> {
    g: &'a Graph,
    skeleton: &'a SkeletonGraph,
    breakdowns: &'a [DegreeBreakdown],
    degrees: &'a [usize],
    index: &'a HashMap<&'a EdgeSet, usize>,
}

impl Context<'_> {
    fn matchings(&self) -> &[Matching] {
        self.skeleton.matchings()
    }

    fn neighbour_lists_consistent(&self) -> Check {
        let mut failures = Vec::new();
        if !self.skeleton.is_symmetric() {
            failures.push("adjacency is not symmetric or repeats a neighbour".to_string());
        }
        for (i, mt) in self.matchings().iter().enumerate() {
            if self.skeleton.degree(i) != self.degrees[i] {
                failures.push(format!(
                    "{}: {} neighbours but {} good structures",
                    mt.name(),
                    self.skeleton.degree(i),
                    self.degrees[i]
                ));
            }
        }
        outcome(
            "neighbour-lists-symmetric-and-distinct",
            self.matchings().len(),
            "matchings",
            failures,
        )
    }

    /// Path-or-cycle test against plain connectivity of the symmetric
    /// difference, over every unordered pair, plus witness shape.
    fn adjacency_criteria_agree(&self, exec: Execution) -> Check {
        let g = self.g;
        let ms = self.matchings();
        let per_row: Vec<Vec<String>> = exec.map_range(ms.len(), |i| {
            let mut failures = Vec::new();
            for j in i + 1..ms.len() {
                let (a, b) = (&ms[i], &ms[j]);
                let forward = classify_adjacency(g, a, b).expect("distinct matchings");
                let backward = classify_adjacency(g, b, a).expect("distinct matchings");
                let connected = is_adjacent_by_connectivity(g, a, b).expect("distinct matchings");
                let pair = || format!("({}, {})", a.name(), b.name());
                if (forward.kind != WitnessKind::NotAdjacent) != connected {
                    failures.push(format!("{}: witness {:?}, connected {connected}", pair(), forward.kind));
                }
                if forward.kind != backward.kind {
                    failures.push(format!("{}: asymmetric witness", pair()));
                }
                if forward.kind == WitnessKind::EvenCycle
                    && (forward.edges.len() < 4 || !forward.edges.len().is_multiple_of(2))
                {
                    failures.push(format!("{}: odd or short cycle", pair()));
                }
                let alternates = forward
                    .edges
                    .windows(2)
                    .all(|w| a.contains(w[0]) != a.contains(w[1]));
                let closes = forward.kind != WitnessKind::EvenCycle
                    || a.contains(forward.edges[0]) != a.contains(forward.edges[forward.edges.len() - 1]);
                if !alternates || !closes {
                    failures.push(format!("{}: witness does not alternate", pair()));
                }
            }
            failures
        });
        let pairs = ms.len() * ms.len().saturating_sub(1) / 2;
        outcome(
            "path-or-cycle-iff-connected-difference",
            pairs,
            "pairs",
            per_row.into_iter().flatten().collect(),
        )
    }

    fn matches_pairwise_skeleton(&self, max_vertices: usize, exec: Execution) -> Result<Check> {
        let pairwise = build_skeleton_pairwise_with(self.g, max_vertices, exec)?;
        let failures: Vec<String> = self
            .matchings()
            .iter()
            .enumerate()
            .filter(|&(i, _)| pairwise.neighbors(i) != self.skeleton.neighbors(i))
            .map(|(i, mt)| {
                format!(
                    "{}: good-structure degree {}, pairwise degree {}",
                    mt.name(),
                    self.degrees[i],
                    pairwise.degree(i)
                )
            })
            .collect();
        Ok(outcome(
            "good-structure-degrees-match-pairwise-scan",
            self.matchings().len(),
            "matchings",
            failures,
        ))
    }

    fn adjacent_sizes_differ_by_at_most_one(&self) -> Check {
        let ms = self.matchings();
        let mut checked = 0;
        let mut failures = Vec::new();
        for (i, j) in self.skeleton.edges() {
            checked += 1;
            let (a, b) = (&ms[i], &ms[j]);
            let gap = a.len().abs_diff(b.len());
            let even = a.edges().xor(b.edges()).len() % 2 == 0;
            if gap > 1 || (gap == 0) != even {
                failures.push(format!("({}, {})", a.name(), b.name()));
            }
        }
        outcome(
            "adjacent-matchings-differ-in-size-by-at-most-one",
            checked,
            "skeleton edges",
            failures,
        )
    }

    /// Closed form and structure bounds for matchings whose edges share no
    /// adjacent edge.
    fn without_common_neighbours(&self, exec: Execution) -> Vec<Check> {
        let g = self.g;
        let ms = self.matchings();
        let eligible: Vec<usize> = (0..ms.len())
            .filter(|&i| !has_common_neighbors(g, &ms[i]))
            .collect();
        let rows: Vec<[Option<String>; 3]> = exec.map(&eligible, |&i| {
            let mt = &ms[i];
            let closed = degree_closed_form(g, mt).expect("eligible matching");
            let formula = (closed.total != self.degrees[i]).then(|| {
                format!("{}: closed form {}, degree {}", mt.name(), closed.total, self.degrees[i])
            });
            let cycles = enumerate_good_cycles(g, mt);
            let no_cycles =
                (!cycles.is_empty()).then(|| format!("{}: {} good cycles", mt.name(), cycles.len()));
            let long = enumerate_good_paths(g, mt)
                .into_iter()
                .find(|p| p.len() > 3 || p.matched_edges() > 1)
                .map(|p| format!("{}: good path of length {}", mt.name(), p.len()));
            [formula, no_cycles, long]
        });
        let collect = |slot: usize| -> Vec<String> {
            rows.iter().filter_map(|r| r[slot].clone()).collect()
        };
        let n = eligible.len();
        vec![
            outcome("closed-form-degree-agrees", n, "matchings", collect(0)),
            outcome(
                "no-good-cycles-without-common-neighbours",
                n,
                "matchings",
                collect(1),
            ),
            outcome(
                "short-good-paths-without-common-neighbours",
                n,
                "matchings",
                collect(2),
            ),
        ]
    }

    /// Every enumerated structure alternates, has the reported kind in both
    /// orientations, and the per-kind counts add up.
    fn structures_well_formed(&self, exec: Execution) -> Check {
        let g = self.g;
        let ms = self.matchings();
        let rows: Vec<Vec<String>> = exec.map_range(ms.len(), |i| {
            let mt = &ms[i];
            let mut failures = Vec::new();
            let paths = enumerate_good_paths(g, mt);
            let cycles = enumerate_good_cycles(g, mt);
            for p in &paths {
                let reversed: Vec<EdgeId> = p.edges.iter().rev().copied().collect();
                let there = classify_alternating_path(g, mt, &p.edges).ok().flatten();
                let back = classify_alternating_path(g, mt, &reversed).ok().flatten();
                if there != Some(p.kind) || back != Some(p.kind) {
                    failures.push(format!("{}: path {:?} misclassified", mt.name(), p.edges));
                }
            }
            for c in &cycles {
                let len = c.len();
                let alternates = (0..len).all(|k| c.membership[k] != c.membership[(k + 1) % len]);
                if len < 4 || len % 2 != 0 || !alternates {
                    failures.push(format!("{}: bad cycle {:?}", mt.name(), c.edges));
                }
            }
            let b = &self.breakdowns[i];
            let count = |kind| paths.iter().filter(|p| p.kind == kind).count();
            let tallies = (
                count(StructureKind::OoPath),
                count(StructureKind::CcPath),
                count(StructureKind::OcPath),
                cycles.len(),
            );
            if tallies != (b.nu_oo, b.nu_cc, b.nu_oc, b.nu_cycles)
                || b.total != b.paths() + b.nu_cycles
            {
                failures.push(format!("{}: breakdown {:?} vs lists {:?}", mt.name(), b, tallies));
            }
            failures
        });
        outcome(
            "good-structures-well-formed",
            ms.len(),
            "matchings",
            rows.into_iter().flatten().collect(),
        )
    }

    fn perfect_matchings_have_no_open_paths(&self) -> Check {
        let n = self.g.vertex_count();
        let mut checked = 0;
        let mut failures = Vec::new();
        for (mt, b) in self.matchings().iter().zip(self.breakdowns) {
            if saturated_vertices(self.g, mt).len() == n {
                checked += 1;
                if b.nu_cc != 0 || b.nu_oc != 0 {
                    failures.push(format!("{}: {} cc, {} oc", mt.name(), b.nu_cc, b.nu_oc));
                }
            }
        }
        outcome(
            "perfect-matchings-have-only-oo-paths-and-cycles",
            checked,
            "perfect matchings",
            failures,
        )
    }

    fn monotone_under_inclusion(&self) -> Check {
        let mut checked = 0;
        let mut failures = Vec::new();
        for (j, big) in self.matchings().iter().enumerate() {
            for sub in big.edges().subsets() {
                if sub == *big.edges() {
                    continue;
                }
                checked += 1;
                let i = self.index[&sub];
                if self.degrees[i] > self.degrees[j] {
                    failures.push(format!(
                        "d({}) = {} > d({}) = {}",
                        self.matchings()[i].name(),
                        self.degrees[i],
                        big.name(),
                        self.degrees[j]
                    ));
                }
            }
        }
        outcome("degree-monotone-under-inclusion", checked, "nested pairs", failures)
    }

    fn single_edge_minimum_degree(&self) -> Check {
        let g = self.g;
        let m = g.edge_count();
        let failures = g
            .edge_ids()
            .filter_map(|e| {
                let i = self.index[&EdgeSet::from_edges(m, [e])];
                let minimal = self.degrees[i] == m;
                let predicted = g.is_bond(e) || g.is_pendant_edge(e);
                (minimal != predicted).then(|| {
                    format!("{}: degree {}, bond-or-pendant {predicted}", g.edge_descriptor(e), self.degrees[i])
                })
            })
            .collect();
        outcome("single-edge-degree-m-iff-bond-or-pendant", m, "edges", failures)
    }

    fn minimum_degree_matchings(&self) -> Check {
        let m = self.g.edge_count();
        let failures = self
            .matchings()
            .iter()
            .zip(self.degrees)
            .filter(|(mt, &d)| is_min_degree_matching(self.g, mt) != (d == m))
            .map(|(mt, d)| format!("{}: degree {d}", mt.name()))
            .collect();
        outcome(
            "degree-m-iff-all-edges-bond-or-pendant",
            self.matchings().len(),
            "matchings",
            failures,
        )
    }
}
