//! Matchings as edge bitmasks, their enumeration, and skeleton adjacency.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, GraphId, VertexId};

/// A set of pairwise disjoint edges of one graph. The mask is the incidence
/// vector of the matching.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    graph: GraphId,
    edges: EdgeSet,
}

impl Matching {
    pub fn empty(g: &Graph) -> Matching {
        Matching {
            graph: g.id(),
            edges: EdgeSet::empty(g.edge_count()),
        }
    }

    /// Validates disjointness and wraps `edges`.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Matching> {
        if edges.width() != g.edge_count() {
            return Err(Error::GraphMismatch);
        }
        for e in edges.iter() {
            if let Some(f) = g.adjacent_mask(e).intersection(&edges).first() {
                return Err(Error::NotAMatching {
                    first: g.edge_descriptor(e),
                    second: g.edge_descriptor(f),
                });
            }
        }
        Ok(Matching {
            graph: g.id(),
            edges,
        })
    }

    /// Skips the disjointness check; callers guarantee it.
    pub(crate) fn from_mask_unchecked(g: &Graph, edges: EdgeSet) -> Matching {
        debug_assert!(Matching::new(g, edges.clone()).is_ok());
        Matching {
            graph: g.id(),
            edges,
        }
    }

    pub fn graph_id(&self) -> GraphId {
        self.graph
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter()
    }

    /// `e1,e3` style name; `∅` for the empty matching.
    pub fn name(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }

    /// `u-v,x-y` using the graph's vertex labels; `∅` when empty.
    pub fn describe(&self, g: &Graph) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.iter()
            .map(|e| g.edge_descriptor(e))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({})", self.name())
    }
}

pub fn make_matching<I>(g: &Graph, edges: I) -> Result<Matching>
where
    I: IntoIterator<Item = EdgeId>,
{
    let m = g.edge_count();
    let mut set = EdgeSet::empty(m);
    for e in edges {
        if e.0 >= m {
            return Err(Error::EdgeOutOfRange { index: e.0, edges: m });
        }
        set.insert(e);
    }
    Matching::new(g, set)
}

/// Parses a comma-separated matching: either edge descriptors `u-v` over the
/// vertex labels, or 1-based edge indices (`e1,e3` or `1,3`). The two forms
/// cannot be mixed. An empty string is the empty matching.
pub fn parse_matching(g: &Graph, spec: &str) -> Result<Matching> {
    let items: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let descriptors = items.iter().filter(|s| s.contains('-')).count();
    if descriptors != 0 && descriptors != items.len() {
        return Err(Error::MatchingSpec(
            "mixes edge descriptors and edge indices".into(),
        ));
    }
    let labels: HashMap<&str, VertexId> = g
        .vertices()
        .map(|v| (g.label(v), v))
        .collect();
    let mut edges = Vec::with_capacity(items.len());
    for item in items {
        let e = if descriptors > 0 {
            resolve_descriptor(g, &labels, item)?
        } else {
            let digits = item.strip_prefix('e').unwrap_or(item);
            let k: usize = digits
                .parse()
                .map_err(|_| Error::MatchingSpec(format!("{item:?} is not an edge index")))?;
            if k == 0 || k > g.edge_count() {
                return Err(Error::MatchingSpec(format!(
                    "edge index {k} outside 1..={}",
                    g.edge_count()
                )));
            }
            EdgeId(k - 1)
        };
        if edges.contains(&e) {
            return Err(Error::MatchingSpec(format!("edge {item:?} listed twice")));
        }
        edges.push(e);
    }
    make_matching(g, edges)
}

fn resolve_descriptor(g: &Graph, labels: &HashMap<&str, VertexId>, item: &str) -> Result<EdgeId> {
    // Labels may contain '-', so try every split point.
    for (i, _) in item.match_indices('-') {
        let (a, b) = (&item[..i], &item[i + 1..]);
        if let (Some(&u), Some(&v)) = (labels.get(a), labels.get(b)) {
            if let Some(e) = g.edge_between(u, v) {
                return Ok(e);
            }
        }
    }
    Err(Error::MatchingSpec(format!("{item:?} is not an edge of the graph")))
}

/// Lazily yields every matching of `g` exactly once, in increasing mask
/// order (so the empty matching comes first).
pub fn enumerate_matchings(g: &Graph) -> Matchings<'_> {
    let m = g.edge_count();
    Matchings {
        graph: g,
        stack: vec![Frame {
            undecided: m,
            chosen: EdgeSet::empty(m),
            blocked: EdgeSet::empty(m),
        }],
    }
}

struct Frame {
    /// Edges `0..undecided` are still open; higher ones are fixed.
    undecided: usize,
    chosen: EdgeSet,
    blocked: EdgeSet,
}

pub struct Matchings<'g> {
    graph: &'g Graph,
    stack: Vec<Frame>,
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        // Decide edges from the highest index down, excluding before
        // including: the masks then come out in increasing numeric order.
        while let Some(frame) = self.stack.pop() {
            if frame.undecided == 0 {
                return Some(Matching::from_mask_unchecked(self.graph, frame.chosen));
            }
            let e = EdgeId(frame.undecided - 1);
            if !frame.blocked.contains(e) {
                let mut chosen = frame.chosen.clone();
                chosen.insert(e);
                let blocked = frame.blocked.union(self.graph.adjacent_mask(e));
                self.stack.push(Frame {
                    undecided: e.0,
                    chosen,
                    blocked,
                });
            }
            self.stack.push(Frame {
                undecided: e.0,
                chosen: frame.chosen,
                blocked: frame.blocked,
            });
        }
        None
    }
}

/// Number of matchings (the Hosoya index), via the deletion recurrence
/// `Z(G) = Z(G - e) + Z(G - u - v)` for `e = uv`, memoised on the remaining
/// edge set. Saturates at `u128::MAX`.
pub fn count_matchings(g: &Graph) -> u128 {
    fn count(g: &Graph, remaining: EdgeSet, memo: &mut HashMap<EdgeSet, u128>) -> u128 {
        let Some(e) = remaining.first() else {
            return 1;
        };
        if let Some(&known) = memo.get(&remaining) {
            return known;
        }
        let mut without = remaining.clone();
        without.remove(e);
        let with = without.difference(g.adjacent_mask(e));
        let total = count(g, without, memo).saturating_add(count(g, with, memo));
        memo.insert(remaining, total);
        total
    }
    count(g, EdgeSet::full(g.edge_count()), &mut HashMap::new())
}

pub fn saturated_vertices(g: &Graph, m: &Matching) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = m
        .iter()
        .flat_map(|e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    out.sort_unstable();
    out
}

pub(crate) fn saturation_flags(g: &Graph, m: &Matching) -> Vec<bool> {
    let mut flags = vec![false; g.vertex_count()];
    for e in m.iter() {
        let (u, v) = g.endpoints(e);
        flags[u.0] = true;
        flags[v.0] = true;
    }
    flags
}

pub fn symmetric_difference(a: &Matching, b: &Matching) -> Result<EdgeSet> {
    if a.graph != b.graph {
        return Err(Error::GraphMismatch);
    }
    Ok(a.edges.xor(&b.edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    Path,
    EvenCycle,
    NotAdjacent,
}

/// Why two matchings are (or are not) adjacent on the skeleton.
///
/// For `Path` and `EvenCycle` the edges of the symmetric difference are listed
/// in traversal order: paths start at the end whose edge has the smaller
/// index; cycles start at their smallest edge and continue towards the smaller
/// of its two neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyWitness {
    pub kind: WitnessKind,
    pub edges: Vec<EdgeId>,
}

pub fn classify_adjacency(g: &Graph, a: &Matching, b: &Matching) -> Result<AdjacencyWitness> {
    let delta = symmetric_difference(a, b)?;
    if delta.is_empty() {
        return Err(Error::SameMatching);
    }
    Ok(classify_edge_set(g, &delta))
}

/// Decides whether the subgraph formed by `edges` is a single path or cycle.
pub(crate) fn classify_edge_set(g: &Graph, edges: &EdgeSet) -> AdjacencyWitness {
    let not_adjacent = AdjacencyWitness {
        kind: WitnessKind::NotAdjacent,
        edges: Vec::new(),
    };
    // Per-vertex incident edges inside the set; more than two means a branch.
    const NONE: EdgeId = EdgeId(usize::MAX);
    let mut local = vec![(0u8, [NONE; 2]); g.vertex_count()];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            let slot = &mut local[x.0];
            if slot.0 == 2 {
                return not_adjacent;
            }
            slot.1[slot.0 as usize] = e;
            slot.0 += 1;
        }
    }
    let total = edges.len();
    let ends: Vec<VertexId> = local
        .iter()
        .enumerate()
        .filter(|(_, slot)| slot.0 == 1)
        .map(|(v, _)| VertexId(v))
        .collect();
    let is_cycle = ends.is_empty();
    if !is_cycle && ends.len() != 2 {
        return not_adjacent;
    }

    // Walk from one end (or from the smallest edge of a cycle).
    let (mut at, first_edge) = if is_cycle {
        let e = edges.first().expect("non-empty");
        (g.endpoints(e).0, e)
    } else {
        (ends[0], local[ends[0].0].1[0])
    };
    let mut order = Vec::with_capacity(total);
    let mut edge = first_edge;
    loop {
        order.push(edge);
        let (u, v) = g.endpoints(edge);
        at = if u == at { v } else { u };
        let slot = &local[at.0];
        let next = slot.1[..slot.0 as usize].iter().copied().find(|&f| f != edge);
        match next {
            Some(f) if f != first_edge => edge = f,
            _ => break,
        }
    }
    if order.len() != total {
        // Disconnected: a path or cycle plus something else.
        return not_adjacent;
    }

    if is_cycle {
        if order.len() > 2 && order[order.len() - 1] < order[1] {
            order[1..].reverse();
        }
        AdjacencyWitness {
            kind: WitnessKind::EvenCycle,
            edges: order,
        }
    } else {
        if order[order.len() - 1] < order[0] {
            order.reverse();
        }
        AdjacencyWitness {
            kind: WitnessKind::Path,
            edges: order,
        }
    }
}

/// Adjacency decided only by connectivity of the symmetric difference,
/// using a union-find over its vertices.
pub fn is_adjacent_by_connectivity(g: &Graph, a: &Matching, b: &Matching) -> Result<bool> {
    let delta = symmetric_difference(a, b)?;
    if delta.is_empty() {
        return Err(Error::SameMatching);
    }
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in delta.iter() {
        let (u, v) = g.endpoints(e);
        let (ru, rv) = (find(&mut parent, u.0), find(&mut parent, v.0));
        parent[ru] = rv;
    }
    let mut roots = delta.iter().map(|e| find(&mut parent, g.endpoints(e).0 .0));
    let first = roots.next().expect("non-empty");
    Ok(roots.all(|r| r == first))
}

/// True when two distinct edges of `m` have a common adjacent edge.
pub fn has_common_neighbors(g: &Graph, m: &Matching) -> bool {
    common_neighbor_pair(g, m).is_some()
}

pub(crate) fn common_neighbor_pair(g: &Graph, m: &Matching) -> Option<(EdgeId, EdgeId)> {
    let edges: Vec<EdgeId> = m.iter().collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if !g.adjacent_mask(e).is_disjoint(g.adjacent_mask(f)) {
                return Some((e, f));
            }
        }
    }
    None
}
