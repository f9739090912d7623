//! Graph representation and the basic operators built on it.
//!
//! Nodes are dense indices `0..n`. Undirected edges are stored once; the
//! adjacency lists hold both directions so neighbourhood queries are
//! symmetric. Weights are real and default to `1.0`; a multiplicity above one
//! stands for that many parallel copies of the edge.

mod families;
mod matching;
mod measures;
mod paths;

pub use families::benzenoid;
pub use matching::Matching;
pub use measures::Clustering;
pub use paths::{Bipartition, Components, DistanceMatrix, Girth};

use std::collections::HashSet;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single stored edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: f64,
    pub multiplicity: u32,
}

impl Edge {
    pub fn new(source: usize, target: usize) -> Self {
        Edge { source, target, weight: 1.0, multiplicity: 1 }
    }

    pub fn weighted(source: usize, target: usize, weight: f64) -> Self {
        Edge { source, target, weight, multiplicity: 1 }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    /// The endpoint opposite to `node`.
    pub fn other(&self, node: usize) -> usize {
        if self.source == node {
            self.target
        } else {
            self.source
        }
    }
}

/// Immutable graph: node count, direction flag and weighted edge list.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    directed: bool,
    simple: bool,
    edges: Vec<Edge>,
    // (neighbour, edge index); for undirected graphs both directions are listed.
    out_adj: Vec<Vec<(usize, usize)>>,
    in_adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph. With `simple = true` self-loops, repeated edges and
    /// multiplicities above one are rejected; otherwise the `simple` flag of
    /// the result is derived from the edge list.
    pub fn build(
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
        directed: bool,
        simple: bool,
    ) -> Result<Graph> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let mut seen = HashSet::with_capacity(edges.len());
        let mut derived_simple = true;
        for e in &edges {
            for node in [e.source, e.target] {
                if node >= n {
                    return Err(Error::OutOfRange { node, n });
                }
            }
            if e.multiplicity == 0 {
                return Err(Error::BadParams(format!(
                    "edge ({}, {}) has zero multiplicity",
                    e.source, e.target
                )));
            }
            if !e.weight.is_finite() {
                return Err(Error::BadParams(format!(
                    "edge ({}, {}) has non-finite weight",
                    e.source, e.target
                )));
            }
            let key = if directed {
                (e.source, e.target)
            } else {
                (e.source.min(e.target), e.source.max(e.target))
            };
            if e.is_loop() {
                if simple {
                    return Err(Error::SelfLoopInSimpleGraph(e.source));
                }
                derived_simple = false;
            }
            if !seen.insert(key) || e.multiplicity > 1 {
                if simple {
                    return Err(Error::DuplicateEdgeInSimpleGraph(key.0, key.1));
                }
                derived_simple = false;
            }
        }

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            out_adj[e.source].push((e.target, idx));
            if directed {
                in_adj[e.target].push((e.source, idx));
            } else if !e.is_loop() {
                out_adj[e.target].push((e.source, idx));
            }
        }
        if !directed {
            in_adj.clone_from(&out_adj);
        }
        Ok(Graph { n, directed, simple: derived_simple, edges, out_adj, in_adj })
    }

    /// Undirected simple graph from unit-weight node pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Graph::build(n, pairs.iter().map(|&(u, v)| Edge::new(u, v)), false, true)
    }

    /// Directed simple graph from unit-weight arcs.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Graph> {
        Graph::build(n, arcs.iter().map(|&(u, v)| Edge::new(u, v)), true, true)
    }

    /// Undirected multigraph; parallel edges and loops are kept.
    pub fn multigraph(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Graph::build(n, pairs.iter().map(|&(u, v)| Edge::new(u, v)), false, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, counting multiplicities.
    pub fn m(&self) -> usize {
        self.edges.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn is_weighted(&self) -> bool {
        self.edges.iter().any(|e| e.weight != 1.0)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-neighbours (all neighbours when undirected), with repetition for
    /// parallel edges.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adj[u].iter().map(|&(v, _)| v)
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_adj[u].iter().map(|&(v, _)| v)
    }

    /// `(neighbour, edge index)` pairs leaving `u`.
    pub fn incident(&self, u: usize) -> &[(usize, usize)] {
        &self.out_adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].iter().any(|&(w, _)| w == v)
    }

    /// Degree counting multiplicities; out-degree for directed graphs. A loop
    /// contributes two to the degree of an undirected graph.
    pub fn degree(&self, u: usize) -> usize {
        let mut d: usize = self.out_adj[u]
            .iter()
            .map(|&(_, e)| self.edges[e].multiplicity as usize)
            .sum();
        if !self.directed {
            d += self.out_adj[u]
                .iter()
                .filter(|&&(_, e)| self.edges[e].is_loop())
                .map(|&(_, e)| self.edges[e].multiplicity as usize)
                .sum::<usize>();
        }
        d
    }

    pub fn in_degree(&self, u: usize) -> usize {
        if !self.directed {
            return self.degree(u);
        }
        self.in_adj[u].iter().map(|&(_, e)| self.edges[e].multiplicity as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `A_ij = w` when an edge joins `i` to `j` (summed over parallel copies).
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for e in &self.edges {
            let w = e.weight * e.multiplicity as f64;
            a[(e.source, e.target)] += w;
            if !self.directed && !e.is_loop() {
                a[(e.target, e.source)] += w;
            }
        }
        a
    }

    /// Diagonal matrix of weighted degrees.
    pub fn degree_matrix(&self) -> Result<DMatrix<f64>> {
        self.require_undirected()?;
        let a = self.adjacency_matrix();
        let sums: Vec<f64> = a.row_iter().map(|r| r.sum()).collect();
        Ok(DMatrix::from_diagonal(&nalgebra::DVector::from_vec(sums)))
    }

    /// `L = K - A`. Weights act as conductances; self-loops cancel.
    pub fn laplacian_matrix(&self) -> Result<DMatrix<f64>> {
        Ok(self.degree_matrix()? - self.adjacency_matrix())
    }

    /// Oriented incidence matrix with the source of every edge as its head
    /// (`+1`) and the target as its tail (`-1`).
    pub fn incidence_matrix(&self) -> Result<DMatrix<f64>> {
        let heads = vec![true; self.edges.len()];
        self.incidence_matrix_oriented(&heads)
    }

    /// Oriented incidence matrix. `source_is_head[j]` picks which end of edge
    /// `j` receives `+1`. Parallel copies each get their own column.
    pub fn incidence_matrix_oriented(&self, source_is_head: &[bool]) -> Result<DMatrix<f64>> {
        self.require_undirected()?;
        if source_is_head.len() != self.edges.len() {
            return Err(Error::BadParams(format!(
                "orientation has {} entries for {} edges",
                source_is_head.len(),
                self.edges.len()
            )));
        }
        if let Some(e) = self.edges.iter().find(|e| e.is_loop()) {
            return Err(Error::SelfLoopInSimpleGraph(e.source));
        }
        let mut nabla = DMatrix::zeros(self.n, self.m());
        let mut col = 0;
        for (e, &head_at_source) in self.edges.iter().zip(source_is_head) {
            let (head, tail) =
                if head_at_source { (e.source, e.target) } else { (e.target, e.source) };
            for _ in 0..e.multiplicity {
                nabla[(head, col)] = 1.0;
                nabla[(tail, col)] = -1.0;
                col += 1;
            }
        }
        Ok(nabla)
    }

    /// Subgraph induced by `nodes`; node `nodes[i]` becomes node `i`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.source] != usize::MAX && index[e.target] != usize::MAX)
            .map(|e| Edge { source: index[e.source], target: index[e.target], ..*e });
        Graph::build(nodes.len(), edges, self.directed, false)
            .expect("induced subgraph of a valid graph is valid")
    }

    /// The same graph with edge `idx` removed.
    pub fn without_edge(&self, idx: usize) -> Result<Graph> {
        if idx >= self.edges.len() {
            return Err(Error::NoSuchEdge(idx));
        }
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, e)| *e);
        Graph::build(self.n, edges, self.directed, false)
    }

    /// The same graph with an extra unit edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let edges = self.edges.iter().copied().chain(std::iter::once(Edge::new(u, v)));
        Graph::build(self.n, edges, self.directed, false)
    }

    /// Relabels node `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { source: perm[e.source], target: perm[e.target], ..*e });
        Graph::build(self.n, edges, self.directed, false).expect("permutation of a valid graph")
    }

    pub(crate) fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::DirectedUnsupported)
        } else {
            Ok(())
        }
    }
}
