//! The skeleton graph of the matching polytope and the closed-form degree.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::good::neighbor_masks;
use crate::graph::{EdgeId, Graph, GraphId};
use crate::matching::{
    classify_adjacency, common_neighbor_pair, count_matchings, enumerate_matchings,
    saturation_flags, Matching, WitnessKind,
};

pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// Vertices are the matchings of the base graph in increasing mask order
/// (vertex 0 is the empty matching); adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    source: GraphId,
    matchings: Vec<Matching>,
    adjacency: Vec<Vec<usize>>,
}

impl SkeletonGraph {
    pub fn source(&self) -> GraphId {
        self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.matchings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn matching(&self, i: usize) -> &Matching {
        &self.matchings[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.matchings.binary_search(m).ok()
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Iterates skeleton edges as `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Adjacency is symmetric, irreflexive and free of repeated entries.
    pub fn is_symmetric(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(i, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns.iter().all(|&j| j != i && j < self.vertex_count() && self.are_adjacent(j, i))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            for &j in &self.adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
        reached == n
    }

    pub fn stats(&self) -> SkeletonStats {
        let mut histogram = BTreeMap::new();
        for ns in &self.adjacency {
            *histogram.entry(ns.len()).or_insert(0) += 1;
        }
        let min_degree = histogram.keys().next().copied().unwrap_or(0);
        let max_degree = histogram.keys().next_back().copied().unwrap_or(0);
        SkeletonStats {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            min_degree,
            max_degree,
            degree_histogram: histogram,
            is_regular: min_degree == max_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub is_regular: bool,
}

/// Errors with the matching count when it exceeds `max_vertices`.
pub fn check_matching_cap(g: &Graph, max_vertices: usize) -> Result<usize> {
    let count = count_matchings(g);
    if count > max_vertices as u128 {
        return Err(Error::TooManyMatchings {
            count,
            limit: max_vertices,
        });
    }
    Ok(count as usize)
}

/// Builds the skeleton from the good structures of every matching.
pub fn build_skeleton(g: &Graph, max_vertices: usize) -> Result<SkeletonGraph> {
    build_skeleton_with(g, max_vertices, Execution::default())
}

pub fn build_skeleton_with(
    g: &Graph,
    max_vertices: usize,
    exec: Execution,
) -> Result<SkeletonGraph> {
    check_matching_cap(g, max_vertices)?;
    let matchings: Vec<Matching> = enumerate_matchings(g).collect();
    let index: HashMap<&EdgeSet, usize> = matchings
        .iter()
        .enumerate()
        .map(|(i, m)| (m.edges(), i))
        .collect();
    let adjacency = exec.map(&matchings, |m| {
        let mut ids: Vec<usize> = neighbor_masks(g, m)
            .iter()
            .map(|mask| index[mask])
            .collect();
        ids.sort_unstable();
        ids
    });
    let skeleton = SkeletonGraph {
        source: g.id(),
        matchings,
        adjacency,
    };
    debug_assert!(skeleton.is_symmetric());
    Ok(skeleton)
}

/// Builds the skeleton by testing every pair of matchings for a path or
/// cycle symmetric difference. Quadratic; meant as a cross-check.
pub fn build_skeleton_pairwise(g: &Graph, max_vertices: usize) -> Result<SkeletonGraph> {
    build_skeleton_pairwise_with(g, max_vertices, Execution::default())
}

pub fn build_skeleton_pairwise_with(
    g: &Graph,
    max_vertices: usize,
    exec: Execution,
) -> Result<SkeletonGraph> {
    check_matching_cap(g, max_vertices)?;
    let matchings: Vec<Matching> = enumerate_matchings(g).collect();
    let adjacency = exec.map_range(matchings.len(), |i| {
        (0..matchings.len())
            .filter(|&j| {
                j != i
                    && classify_adjacency(g, &matchings[i], &matchings[j])
                        .map(|w| w.kind != WitnessKind::NotAdjacent)
                        .unwrap_or(false)
            })
            .collect()
    });
    Ok(SkeletonGraph {
        source: g.id(),
        matchings,
        adjacency,
    })
}

/// Degree of a matching without common neighbours as
/// `k + Σ (d(u)d(v) - |N(u) ∩ N(v)|)` over its edges `uv`, where `k` counts
/// edges with both endpoints unsaturated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormBreakdown {
    pub k: usize,
    /// Matched edges, in canonical order.
    pub edges: Vec<EdgeId>,
    /// `s_i` for each matched edge.
    pub terms: Vec<usize>,
    pub total: usize,
}

pub fn degree_closed_form(g: &Graph, m: &Matching) -> Result<ClosedFormBreakdown> {
    if m.graph_id() != g.id() {
        return Err(Error::GraphMismatch);
    }
    if let Some((e, f)) = common_neighbor_pair(g, m) {
        return Err(Error::CommonNeighbors {
            first: g.edge_descriptor(e),
            second: g.edge_descriptor(f),
        });
    }
    let saturated = saturation_flags(g, m);
    let k = g
        .edges()
        .iter()
        .filter(|(u, v)| !saturated[u.0] && !saturated[v.0])
        .count();
    let edges: Vec<EdgeId> = m.iter().collect();
    let terms: Vec<usize> = edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            g.degree(u) * g.degree(v) - g.common_neighbors(u, v).len()
        })
        .collect();
    let total = k + terms.iter().sum::<usize>();
    Ok(ClosedFormBreakdown {
        k,
        edges,
        terms,
        total,
    })
}

/// Empty, or every edge is a bond or a pendant edge.
pub fn is_min_degree_matching(g: &Graph, m: &Matching) -> bool {
    m.iter().all(|e| g.is_bond(e) || g.is_pendant_edge(e))
}

/// Whether the skeleton is regular: the graph is a disjoint union of stars
/// and triangles (isolated vertices allowed).
pub fn predict_regular(g: &Graph) -> bool {
    g.decompose_stars_triangles().is_stars_and_triangles
}
