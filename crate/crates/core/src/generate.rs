//! Seeded graph generators for test batches.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("G(n, p) is simple")
}

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer
/// sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::new(n, []).expect("trivial tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// A disjoint union of triangles and stars with at most `max_edges` edges
/// (at least one component), vertices shuffled.
pub fn random_stars_triangles<R: Rng>(max_edges: usize, rng: &mut R) -> Graph {
    assert!(max_edges >= 1);
    let mut budget = max_edges;
    let mut parts: Vec<Option<usize>> = Vec::new(); // None = triangle, Some(t) = star
    loop {
        if budget >= 3 && rng.random_bool(0.4) {
            parts.push(None);
            budget -= 3;
        } else {
            let t = rng.random_range(1..=budget.min(5));
            parts.push(Some(t));
            budget -= t;
        }
        if budget == 0 || rng.random_bool(0.25) {
            break;
        }
    }
    let mut edges = Vec::new();
    let mut next = 0;
    for part in parts {
        match part {
            None => {
                edges.extend([(next, next + 1), (next + 1, next + 2), (next, next + 2)]);
                next += 3;
            }
            Some(t) => {
                edges.extend((1..=t).map(|i| (next, next + i)));
                next += t + 1;
            }
        }
    }
    let mut relabel: Vec<usize> = (0..next).collect();
    relabel.shuffle(rng);
    Graph::new(next, edges.into_iter().map(|(u, v)| (relabel[u], relabel[v])))
        .expect("disjoint union is simple")
}

/// Every labelled simple graph on `n` vertices (`2^(n choose 2)` of them),
/// indexed by the bit pattern of the upper triangle.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 64, "too many graphs to list");
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges).expect("simple by construction")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_trees() {
        let mut r = rng(7);
        for n in 1..12 {
            let t = random_tree(n, &mut r);
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            assert_eq!(t.connected_components().len(), 1);
        }
    }

    #[test]
    fn stars_and_triangles_decompose() {
        let mut r = rng(3);
        for _ in 0..50 {
            let g = random_stars_triangles(14, &mut r);
            assert!(g.edge_count() <= 14 && g.edge_count() >= 1);
            let d = g.decompose_stars_triangles();
            assert!(d.is_stars_and_triangles);
            assert_eq!(d.edge_total(), g.edge_count());
        }
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(1).count(), 1);
        let edge_total: usize = all_labeled_graphs(3).map(|g| g.edge_count()).sum();
        assert_eq!(edge_total, 12);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gnp(8, 0.4, &mut rng(11));
        let b = gnp(8, 0.4, &mut rng(11));
        assert_eq!(a, b);
    }
}
