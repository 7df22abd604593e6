//! Small named graphs used throughout the docs and tests.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// `C_n` with vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// `S_{1,t}` with centre 0.
pub fn star(t: usize) -> Graph {
    Graph::new(t + 1, (1..=t).map(|i| (0, i))).expect("star is simple")
}

/// `K3 ∪ S_{1,1}`: triangle on 0,1,2 and the edge 3-4.
pub fn triangle_plus_edge() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).expect("simple")
}
