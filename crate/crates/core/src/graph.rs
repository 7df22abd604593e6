//! Immutable simple undirected graphs with a canonical edge order.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(pub usize);

/// Index of an edge in canonical order. Displayed 1-based (`e1`, `e2`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

/// Identity of a constructed graph; clones share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphId(u64);

impl GraphId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(0);
        GraphId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// A simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; edge
/// index `k` always refers to the `k`-th pair in that order. Everything else
/// (neighbour lists, incidence masks) is derived from the edge list at
/// construction and never changes.
#[derive(Clone)]
pub struct Graph {
    id: GraphId,
    labels: Vec<String>,
    edges: Vec<(VertexId, VertexId)>,
    neighbors: Vec<Vec<VertexId>>,
    incident: Vec<Vec<EdgeId>>,
    edge_incidence: Vec<Vec<EdgeId>>,
    incidence_masks: Vec<EdgeSet>,
    lookup: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` labelled by their index.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_labels((0..n).map(|i| i.to_string()).collect(), edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]` for display.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut pairs = Vec::new();
        for (line, (a, b)) in edges.into_iter().enumerate() {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, vertices: n });
                }
            }
            if a == b {
                return Err(crate::ParseError::Loop {
                    line: line + 1,
                    label: labels[a].clone(),
                }
                .into());
            }
            pairs.push((VertexId(a.min(b)), VertexId(a.max(b))));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(crate::ParseError::DuplicateEdge {
                line: 0,
                u: labels[u.0].clone(),
                v: labels[v.0].clone(),
            }
            .into());
        }
        Ok(Self::assemble(labels, pairs))
    }

    fn assemble(labels: Vec<String>, edges: Vec<(VertexId, VertexId)>) -> Graph {
        let n = labels.len();
        let m = edges.len();
        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        let mut lookup = HashMap::with_capacity(m);
        for (k, &(u, v)) in edges.iter().enumerate() {
            neighbors[u.0].push(v);
            neighbors[v.0].push(u);
            incident[u.0].push(EdgeId(k));
            incident[v.0].push(EdgeId(k));
            lookup.insert((u, v), EdgeId(k));
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let vertex_masks: Vec<EdgeSet> = incident
            .iter()
            .map(|es| EdgeSet::from_edges(m, es.iter().copied()))
            .collect();
        let incidence_masks: Vec<EdgeSet> = edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| {
                let mut mask = vertex_masks[u.0].union(&vertex_masks[v.0]);
                mask.remove(EdgeId(k));
                mask
            })
            .collect();
        let edge_incidence = incidence_masks.iter().map(|s| s.iter().collect()).collect();
        Graph {
            id: GraphId::fresh(),
            labels,
            edges,
            neighbors,
            incident,
            edge_incidence,
            incidence_masks,
            lookup,
        }
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.lookup.get(&(a.min(b), a.max(b))).copied()
    }

    /// Human-readable `u-v` form using the original vertex labels.
    pub fn edge_descriptor(&self, e: EdgeId) -> String {
        let (u, v) = self.endpoints(e);
        format!("{}-{}", self.label(u), self.label(v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v.0].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v.0]
    }

    /// Edges incident to `v`, in canonical order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    /// `I(e)`: the edges sharing an endpoint with `e`, excluding `e`.
    pub fn adjacent_edges(&self, e: EdgeId) -> &[EdgeId] {
        &self.edge_incidence[e.0]
    }

    pub(crate) fn adjacent_mask(&self, e: EdgeId) -> &EdgeSet {
        &self.incidence_masks[e.0]
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let (a, b) = (&self.neighbors[u.0], &self.neighbors[v.0]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// At least one endpoint has degree 1.
    pub fn is_pendant_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        self.degree(u) == 1 || self.degree(v) == 1
    }

    /// Both endpoints have degree 2 and exactly one common neighbour.
    pub fn is_bond(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        self.degree(u) == 2 && self.degree(v) == 2 && self.common_neighbors(u, v).len() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![VertexId(start)];
            let mut component = Vec::new();
            while let Some(v) = stack.pop() {
                component.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Classifies every component as a triangle, a star `S_{1,t}` or an
    /// isolated vertex.
    pub fn decompose_stars_triangles(&self) -> StarsTrianglesDecomposition {
        let mut triangle_components = 0;
        let mut star_components = Vec::new();
        let mut other_components = 0;
        for component in self.connected_components() {
            let size = component.len();
            if size == 1 {
                continue;
            }
            let edge_total: usize =
                component.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
            let max_degree = component.iter().map(|&v| self.degree(v)).max().unwrap_or(0);
            if size == 3 && edge_total == 3 {
                triangle_components += 1;
            } else if edge_total == size - 1 && max_degree == edge_total {
                star_components.push(edge_total);
            } else {
                other_components += 1;
            }
        }
        StarsTrianglesDecomposition {
            triangle_components,
            star_components,
            is_stars_and_triangles: other_components == 0,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field(
                "edges",
                &self
                    .edge_ids()
                    .map(|e| self.edge_descriptor(e))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl PartialEq for Graph {
    /// Structural equality: same vertex count and edge list. Labels and
    /// identity are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarsTrianglesDecomposition {
    /// Number of `K3` components.
    pub triangle_components: usize,
    /// Edge count `t` of every star component `S_{1,t}`, in component order.
    pub star_components: Vec<usize>,
    /// Every component with an edge is a triangle or a star.
    pub is_stars_and_triangles: bool,
}

impl StarsTrianglesDecomposition {
    /// `3r + Σ t_j`; equals the edge count when the decomposition holds.
    pub fn edge_total(&self) -> usize {
        3 * self.triangle_components + self.star_components.iter().sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;

    #[test]
    fn degrees() {
        let k3 = complete(3);
        assert!(k3.vertices().all(|v| k3.degree(v) == 2));
        let s = star(3);
        assert_eq!(s.degree(VertexId(0)), 3);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.degree(VertexId(2)), 0);
    }

    #[test]
    fn common_neighbour_counts() {
        assert_eq!(complete(3).common_neighbors(VertexId(0), VertexId(1)), vec![VertexId(2)]);
        assert!(cycle(4).common_neighbors(VertexId(0), VertexId(1)).is_empty());
        assert_eq!(complete(4).common_neighbors(VertexId(0), VertexId(1)).len(), 2);
    }

    #[test]
    fn pendant_edges() {
        assert!(star(1).is_pendant_edge(EdgeId(0)));
        assert!(!complete(3).edge_ids().any(|e| complete(3).is_pendant_edge(e)));
        let p3 = path(3);
        assert!(p3.edge_ids().all(|e| p3.is_pendant_edge(e)));
    }

    #[test]
    fn bonds() {
        let k3 = complete(3);
        assert!(k3.edge_ids().all(|e| k3.is_bond(e)));
        let c4 = cycle(4);
        assert!(!c4.edge_ids().any(|e| c4.is_bond(e)));
        let k4 = complete(4);
        assert!(!k4.edge_ids().any(|e| k4.is_bond(e)));
        // Triangle with a pendant at vertex 0: only the edge opposite keeps
        // both endpoints at degree 2.
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let bonds: Vec<_> = g.edge_ids().filter(|&e| g.is_bond(e)).collect();
        assert_eq!(bonds, vec![g.edge_between(VertexId(1), VertexId(2)).unwrap()]);
    }

    #[test]
    fn stars_and_triangles() {
        let d = triangle_plus_edge().decompose_stars_triangles();
        assert_eq!(d.triangle_components, 1);
        assert_eq!(d.star_components, vec![1]);
        assert!(d.is_stars_and_triangles);
        assert!(!cycle(4).decompose_stars_triangles().is_stars_and_triangles);
        let s = star(3).decompose_stars_triangles();
        assert_eq!((s.triangle_components, s.star_components.clone()), (0, vec![3]));
        assert!(s.is_stars_and_triangles);
        assert!(Graph::new(3, []).unwrap().decompose_stars_triangles().is_stars_and_triangles);
        assert!(!path(4).decompose_stars_triangles().is_stars_and_triangles);
    }

    #[test]
    fn components() {
        let sizes: Vec<usize> = triangle_plus_edge()
            .connected_components()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![3, 2]);
        assert_eq!(cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::new(3, []).unwrap().connected_components().len(), 3);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn canonical_edge_order() {
        let g = Graph::new(4, [(3, 2), (1, 0), (3, 0), (2, 1)]).unwrap();
        let pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.0, v.0)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
