//! DOT and JSON renderings of graphs, skeletons and verification results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::good::{AlternatingStructure, StructureKind};
use crate::graph::Graph;
use crate::skeleton::{SkeletonGraph, SkeletonStats};
use crate::verify::Check;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Undirected DOT graph named `skeleton`. Node ids are matching names
/// (`e1,e3`, `∅`); labels use the vertex labels of `g`. Nodes and edges follow
/// the skeleton's vertex order.
pub fn export_dot(g: &Graph, s: &SkeletonGraph) -> String {
    let mut out = String::from("graph skeleton {\n");
    for m in s.matchings() {
        let _ = writeln!(out, "  {} [label={}];", quote(&m.name()), quote(&m.describe(g)));
    }
    for (i, j) in s.edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            quote(&s.matching(i).name()),
            quote(&s.matching(j).name())
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn new(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SkeletonJson {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub degree_histogram: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matchings: Option<Vec<VertexJson>>,
}

impl From<&SkeletonStats> for SkeletonJson {
    fn from(st: &SkeletonStats) -> Self {
        SkeletonJson {
            vertices: st.vertex_count,
            edges: st.edge_count,
            min_degree: st.min_degree,
            max_degree: st.max_degree,
            regular: st.is_regular,
            degree_histogram: st.degree_histogram.clone(),
            matchings: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexJson {
    pub id: usize,
    pub name: String,
    pub edges: Vec<String>,
    pub degree: usize,
    pub neighbors: Vec<usize>,
}

/// `{"graph": ..., "skeleton": ..., "checks": [...]}` with keys in that
/// order. `skeleton` is omitted when it was not built.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub graph: GraphJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<SkeletonJson>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(g: &Graph) -> Self {
        Report {
            graph: GraphJson::new(g),
            skeleton: None,
            checks: Vec::new(),
        }
    }

    pub fn with_stats(mut self, stats: &SkeletonStats) -> Self {
        self.skeleton = Some(SkeletonJson::from(stats));
        self
    }

    /// Adds stats plus the full vertex listing of `s`.
    pub fn with_skeleton(mut self, g: &Graph, s: &SkeletonGraph) -> Self {
        let mut sk = SkeletonJson::from(&s.stats());
        sk.matchings = Some(
            s.matchings()
                .iter()
                .enumerate()
                .map(|(i, m)| VertexJson {
                    id: i,
                    name: m.name(),
                    edges: m.iter().map(|e| g.edge_descriptor(e)).collect(),
                    degree: s.degree(i),
                    neighbors: s.neighbors(i).to_vec(),
                })
                .collect(),
        );
        self.skeleton = Some(sk);
        self
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureJson {
    pub kind: StructureKind,
    pub edges: Vec<String>,
}

pub fn structure_json(g: &Graph, s: &AlternatingStructure) -> StructureJson {
    StructureJson {
        kind: s.kind,
        edges: s.edges.iter().map(|&e| g.edge_descriptor(e)).collect(),
    }
}
