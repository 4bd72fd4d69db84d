//! Standard graphs used as fixtures.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid edges")
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)))).expect("valid edges")
}

/// `K_{n,n}` minus a perfect matching: `i ~ n + j` iff `i != j`.
pub fn complete_bipartite_minus_matching(n: usize) -> Graph {
    Graph::from_edges(2 * n, (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))))
        .expect("valid edges")
}

/// Vertex 0 on top, rings `1..=5` and `6..=10`, vertex 11 at the bottom.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 1..=5 {
        let next = i % 5 + 1;
        edges.push((0, i));
        edges.push((i, next));
        edges.push((5 + i, 5 + next));
        edges.push((11, 5 + i));
        edges.push((i, 5 + i));
        edges.push((i, 5 + next));
    }
    Graph::from_edges(12, edges).expect("valid edges")
}

/// Vertices are bit strings of length `d`, adjacent when they differ in one bit.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    Graph::from_edges(n, (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)))
        .expect("valid edges")
}

/// Outer 5-cycle `0..5`, spokes to `5..10`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("valid edges")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid edges")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid edges")
}
