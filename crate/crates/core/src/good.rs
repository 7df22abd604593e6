//! M-good paths and cycles, and the degree of a matching counted from them.
//!
//! For a matching `M`, every skeleton neighbour `N` of `M` is `M Δ S` for
//! exactly one M-good path or cycle `S`, so counting those structures gives
//! the degree of `M` without materialising the skeleton.

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::{saturation_flags, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum StructureKind {
    /// Both end edges belong to `M`.
    #[serde(rename = "oo")]
    OoPath,
    /// Both end vertices are `M`-unsaturated.
    #[serde(rename = "cc")]
    CcPath,
    /// One end edge in `M`; the vertex at the other end is unsaturated.
    #[serde(rename = "oc")]
    OcPath,
    /// An `M`-alternating cycle.
    #[serde(rename = "cycle")]
    GoodCycle,
}

impl StructureKind {
    pub fn is_path(self) -> bool {
        self != StructureKind::GoodCycle
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AlternatingStructure {
    pub kind: StructureKind,
    pub edges: Vec<EdgeId>,
    /// `membership[i]` is whether `edges[i]` belongs to the matching.
    pub membership: Vec<bool>,
}

impl AlternatingStructure {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn matched_edges(&self) -> usize {
        self.membership.iter().filter(|&&b| b).count()
    }

    pub fn edge_set(&self, width: usize) -> EdgeSet {
        EdgeSet::from_edges(width, self.edges.iter().copied())
    }
}

/// Counts of good structures; `total` is the degree of the matching.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DegreeBreakdown {
    pub nu_oo: usize,
    pub nu_cc: usize,
    pub nu_oc: usize,
    pub nu_cycles: usize,
    pub total: usize,
}

impl DegreeBreakdown {
    pub fn paths(&self) -> usize {
        self.nu_oo + self.nu_cc + self.nu_oc
    }

    fn record(&mut self, kind: StructureKind) {
        match kind {
            StructureKind::OoPath => self.nu_oo += 1,
            StructureKind::CcPath => self.nu_cc += 1,
            StructureKind::OcPath => self.nu_oc += 1,
            StructureKind::GoodCycle => self.nu_cycles += 1,
        }
        self.total += 1;
    }
}

/// Classifies `path` (given as consecutive edges, in either orientation).
///
/// Returns `Ok(None)` when the path is not M-good, including when it does not
/// alternate. Fails if the edges do not form a simple path.
pub fn classify_alternating_path(
    g: &Graph,
    m: &Matching,
    path: &[EdgeId],
) -> Result<Option<StructureKind>> {
    if m.graph_id() != g.id() {
        return Err(Error::GraphMismatch);
    }
    let vertices = path_vertices(g, path)?;
    if path.windows(2).any(|w| m.contains(w[0]) == m.contains(w[1])) {
        return Ok(None);
    }
    let saturated = saturation_flags(g, m);
    Ok(path_kind(m, &saturated, path, &vertices))
}

fn path_vertices(g: &Graph, path: &[EdgeId]) -> Result<Vec<VertexId>> {
    let bad = |why: &str| Error::NotAPath(why.to_string());
    let (&first, rest) = path.split_first().ok_or_else(|| bad("empty edge sequence"))?;
    if let Some(e) = path.iter().find(|e| e.0 >= g.edge_count()) {
        return Err(Error::EdgeOutOfRange {
            index: e.0,
            edges: g.edge_count(),
        });
    }
    let (a, b) = g.endpoints(first);
    let start = match rest.first() {
        None => a,
        Some(&next) => {
            let (c, d) = g.endpoints(next);
            if b == c || b == d {
                a
            } else if a == c || a == d {
                b
            } else {
                return Err(bad("consecutive edges do not meet"));
            }
        }
    };
    let mut vertices = vec![start];
    let mut at = start;
    for &e in path {
        let (u, v) = g.endpoints(e);
        at = if u == at {
            v
        } else if v == at {
            u
        } else {
            return Err(bad("consecutive edges do not meet"));
        };
        vertices.push(at);
    }
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(bad("a vertex repeats"));
    }
    Ok(vertices)
}

/// Kind of an alternating path with the given vertex sequence.
fn path_kind(
    m: &Matching,
    saturated: &[bool],
    edges: &[EdgeId],
    vertices: &[VertexId],
) -> Option<StructureKind> {
    let first_in = m.contains(edges[0]);
    let last_in = m.contains(edges[edges.len() - 1]);
    let start_free = !saturated[vertices[0].0];
    let end_free = !saturated[vertices[vertices.len() - 1].0];
    match (first_in, last_in) {
        (true, true) => Some(StructureKind::OoPath),
        (false, false) if start_free && end_free => Some(StructureKind::CcPath),
        (true, false) if end_free => Some(StructureKind::OcPath),
        (false, true) if start_free => Some(StructureKind::OcPath),
        _ => None,
    }
}

/// Depth-first search over M-alternating paths and cycles.
///
/// Every good path is reported once, in the orientation whose edge sequence
/// is lexicographically smaller. Every good cycle is reported once, starting
/// at its smallest vertex, in the direction whose second vertex is smaller
/// than its last.
struct Walker<'a> {
    g: &'a Graph,
    m: &'a Matching,
    saturated: Vec<bool>,
    on_path: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl<'a> Walker<'a> {
    fn new(g: &'a Graph, m: &'a Matching) -> Self {
        Walker {
            g,
            m,
            saturated: saturation_flags(g, m),
            on_path: vec![false; g.vertex_count()],
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn run<F: FnMut(StructureKind, &[EdgeId])>(mut self, mut visit: F) {
        for s in self.g.vertices() {
            self.vertices.push(s);
            self.on_path[s.0] = true;
            self.extend_path(&mut visit);
            if self.saturated[s.0] {
                self.extend_cycle(s, &mut visit);
            }
            self.on_path[s.0] = false;
            self.vertices.pop();
        }
    }

    fn extend_path<F: FnMut(StructureKind, &[EdgeId])>(&mut self, visit: &mut F) {
        let g = self.g;
        let at = *self.vertices.last().expect("path has a start");
        for &f in g.incident_edges(at) {
            let (u, v) = g.endpoints(f);
            let next = if u == at { v } else { u };
            if self.on_path[next.0] {
                continue;
            }
            let in_m = self.m.contains(f);
            match self.edges.last() {
                Some(&last) if self.m.contains(last) == in_m => continue,
                // A non-matching first edge at a saturated start can never
                // end up good, whatever follows.
                None if !in_m && self.saturated[at.0] => continue,
                _ => {}
            }
            self.edges.push(f);
            self.vertices.push(next);
            self.on_path[next.0] = true;

            if let Some(kind) = path_kind(self.m, &self.saturated, &self.edges, &self.vertices) {
                if self.is_canonical_path() {
                    visit(kind, &self.edges);
                }
            }
            self.extend_path(visit);

            self.on_path[next.0] = false;
            self.vertices.pop();
            self.edges.pop();
        }
    }

    fn is_canonical_path(&self) -> bool {
        if self.edges.len() == 1 {
            return self.vertices[0] < self.vertices[1];
        }
        self.edges.iter().lt(self.edges.iter().rev())
    }

    fn extend_cycle<F: FnMut(StructureKind, &[EdgeId])>(&mut self, start: VertexId, visit: &mut F) {
        let g = self.g;
        let at = *self.vertices.last().expect("cycle has a start");
        for &f in g.incident_edges(at) {
            let (u, v) = g.endpoints(f);
            let next = if u == at { v } else { u };
            let in_m = self.m.contains(f);
            if matches!(self.edges.last(), Some(&last) if self.m.contains(last) == in_m) {
                continue;
            }
            if next == start {
                let closes = self.edges.len() >= 3
                    && self.m.contains(self.edges[0]) != in_m
                    && self.vertices[1] < at;
                if closes {
                    self.edges.push(f);
                    visit(StructureKind::GoodCycle, &self.edges);
                    self.edges.pop();
                }
                continue;
            }
            // Every vertex of an alternating cycle is saturated.
            if next < start || self.on_path[next.0] || !self.saturated[next.0] {
                continue;
            }
            self.edges.push(f);
            self.vertices.push(next);
            self.on_path[next.0] = true;
            self.extend_cycle(start, visit);
            self.on_path[next.0] = false;
            self.vertices.pop();
            self.edges.pop();
        }
    }
}

fn check_graph(g: &Graph, m: &Matching) {
    assert_eq!(m.graph_id(), g.id(), "matching belongs to a different graph");
}

/// Rotates a cycle to start at its smallest edge, heading towards the
/// smaller of that edge's two neighbours.
fn canonical_cycle(edges: &[EdgeId]) -> Vec<EdgeId> {
    let pivot = edges
        .iter()
        .enumerate()
        .min_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .expect("non-empty cycle");
    let mut out: Vec<EdgeId> = edges[pivot..].iter().chain(&edges[..pivot]).copied().collect();
    if out[out.len() - 1] < out[1] {
        out[1..].reverse();
    }
    out
}

fn structure(m: &Matching, kind: StructureKind, edges: Vec<EdgeId>) -> AlternatingStructure {
    let membership = edges.iter().map(|&e| m.contains(e)).collect();
    AlternatingStructure {
        kind,
        edges,
        membership,
    }
}

/// Every M-good path once, sorted by edge sequence.
pub fn enumerate_good_paths(g: &Graph, m: &Matching) -> Vec<AlternatingStructure> {
    check_graph(g, m);
    let mut out = Vec::new();
    Walker::new(g, m).run(|kind, edges| {
        if kind.is_path() {
            out.push(structure(m, kind, edges.to_vec()));
        }
    });
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Every M-alternating cycle once, in canonical rotation, sorted.
pub fn enumerate_good_cycles(g: &Graph, m: &Matching) -> Vec<AlternatingStructure> {
    check_graph(g, m);
    let mut out = Vec::new();
    Walker::new(g, m).run(|kind, edges| {
        if kind == StructureKind::GoodCycle {
            out.push(structure(m, kind, canonical_cycle(edges)));
        }
    });
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Degree of `m` on the skeleton, split by structure kind.
pub fn degree_of_matching(g: &Graph, m: &Matching) -> DegreeBreakdown {
    check_graph(g, m);
    let mut breakdown = DegreeBreakdown::default();
    Walker::new(g, m).run(|kind, _| breakdown.record(kind));
    breakdown
}

/// Edge masks of all skeleton neighbours of `m`, unsorted.
pub(crate) fn neighbor_masks(g: &Graph, m: &Matching) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    Walker::new(g, m).run(|_, edges| {
        let mut mask = m.edges().clone();
        for &e in edges {
            mask.toggle(e);
        }
        out.push(mask);
    });
    out
}

/// The matchings `m Δ S` over all good structures `S`, sorted.
pub fn neighbors_of_matching(g: &Graph, m: &Matching) -> Vec<Matching> {
    check_graph(g, m);
    let mut masks = neighbor_masks(g, m);
    masks.sort();
    masks
        .into_iter()
        .map(|mask| Matching::from_mask_unchecked(g, mask))
        .collect()
}
