use std::collections::HashMap;

use super::{Edge, Graph};

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::build(n, [], false, true).expect("empty graph")
    }

    /// Path `P_n`: `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|i| Edge::new(i - 1, i));
        Graph::build(n, edges, false, true).expect("path graph")
    }

    /// Cycle `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least three nodes");
        let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n));
        Graph::build(n, edges, false, true).expect("cycle graph")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)));
        Graph::build(n, edges, false, true).expect("complete graph")
    }

    /// Star `K_{1,leaves}` with the centre at node 0.
    pub fn star(leaves: usize) -> Graph {
        let edges = (1..=leaves).map(|i| Edge::new(0, i));
        Graph::build(leaves + 1, edges, false, true).expect("star graph")
    }

    /// `K_{a,b}`; nodes `0..a` form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| Edge::new(i, j)));
        Graph::build(a + b, edges, false, true).expect("complete bipartite graph")
    }

    /// Linear polyacene with `rings` fused hexagons (`4N + 2` carbons).
    ///
    /// Top row is nodes `0..=2N`, bottom row `2N+1..=4N+1`; rungs sit at
    /// even positions.
    pub fn polyacene(rings: usize) -> Graph {
        assert!(rings >= 1);
        let row = 2 * rings + 1;
        let mut edges = Vec::new();
        for i in 1..row {
            edges.push(Edge::new(i - 1, i));
            edges.push(Edge::new(row + i - 1, row + i));
        }
        for i in (0..row).step_by(2) {
            edges.push(Edge::new(i, row + i));
        }
        Graph::build(2 * row, edges, false, true).expect("polyacene graph")
    }
}

/// Benzenoid (hexagonal-lattice) graph made of the given hexagons, each named
/// by axial lattice coordinates `(q, r)`. Neighbouring hexagons share an edge.
///
/// Hexagon centres live on a triangular lattice in cube coordinates; each
/// corner is three times the centroid of the centre and two adjacent
/// neighbour centres, which keeps every vertex on integer coordinates so
/// shared corners coincide exactly.
pub fn benzenoid(hexagons: &[(i64, i64)]) -> Graph {
    const DIRS: [(i64, i64, i64); 6] =
        [(1, -1, 0), (1, 0, -1), (0, 1, -1), (-1, 1, 0), (-1, 0, 1), (0, -1, 1)];
    let mut index: HashMap<(i64, i64, i64), usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(q, r) in hexagons {
        let centre = (3 * q, 3 * r, -3 * q - 3 * r);
        let corners: Vec<usize> = (0..6)
            .map(|k| {
                let (a, b) = (DIRS[k], DIRS[(k + 1) % 6]);
                let p = (centre.0 + a.0 + b.0, centre.1 + a.1 + b.1, centre.2 + a.2 + b.2);
                let next = index.len();
                *index.entry(p).or_insert(next)
            })
            .collect();
        for k in 0..6 {
            let (u, v) = (corners[k], corners[(k + 1) % 6]);
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_pairs(index.len(), &edges).expect("benzenoid graph")
}
