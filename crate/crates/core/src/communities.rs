//! Community detection: modularity, Girvan-Newman divisive clustering,
//! spectral bisection and cosine similarity.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::centrality;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::spectral::eig_symmetric;

/// Disjoint blocks covering every node. Block ids are numbered by first
/// appearance, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    assignment: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Accepts any labelling and renumbers it canonically.
    pub fn from_assignment(labels: &[usize]) -> Partition {
        let mut map = std::collections::HashMap::new();
        let assignment = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition { assignment, count: map.len() }
    }

    /// Builds a partition from explicit blocks, checking they are nonempty,
    /// disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::OutOfRange { node: v, n });
                }
                if labels[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("node {v} appears twice")));
                }
                labels[v] = b;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("node {v} is not covered")));
        }
        Ok(Partition::from_assignment(&labels))
    }

    pub fn single_block(n: usize) -> Partition {
        Partition::from_assignment(&vec![0; n])
    }

    pub fn singletons(n: usize) -> Partition {
        Partition::from_assignment(&(0..n).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Members of each block in increasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &b) in self.assignment.iter().enumerate() {
            out[b].push(v);
        }
        out
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.n() == coarser.n()
            && self
                .blocks()
                .iter()
                .all(|b| b.iter().all(|&v| coarser.block_of(v) == coarser.block_of(b[0])))
    }
}

/// `Q = Σ_k [|E_k|/m - (Σ_{j∈V_k} k_j / 2m)²]`, with edge weights.
pub fn modularity(g: &Graph, partition: &Partition) -> Result<f64> {
    g.require_undirected()?;
    if partition.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} nodes, graph has {}",
            partition.n(),
            g.n()
        )));
    }
    let mut inside = vec![0.0; partition.count()];
    let mut degree = vec![0.0; partition.count()];
    let mut m = 0.0;
    for e in g.edges() {
        let w = e.weight * e.multiplicity as f64;
        m += w;
        let (bs, bt) = (partition.block_of(e.source), partition.block_of(e.target));
        degree[bs] += w;
        degree[bt] += w;
        if bs == bt {
            inside[bs] += w;
        }
    }
    if m == 0.0 {
        return Err(Error::EmptyGraph);
    }
    Ok(inside.iter().zip(&degree).map(|(e, d)| e / m - (d / (2.0 * m)).powi(2)).sum())
}

/// Shortest-path betweenness of every edge, indexed like [`Graph::edges`].
pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    centrality::brandes(g).1
}

/// One stage of a Girvan-Newman run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DendrogramStage {
    /// Edge removed to reach this stage; `None` for the starting graph.
    pub removed: Option<(usize, usize)>,
    pub partition: Partition,
    /// Modularity of `partition` on the original graph; `None` when the
    /// graph has no edges.
    pub modularity: Option<f64>,
}

/// Every stage of the divisive process, from the input graph down to
/// isolated nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dendrogram {
    pub stages: Vec<DendrogramStage>,
}

impl Dendrogram {
    /// Stage with the highest modularity; the earliest wins ties.
    pub fn best(&self) -> &DendrogramStage {
        let mut best = &self.stages[0];
        for s in &self.stages[1..] {
            if let (Some(q), Some(bq)) = (s.modularity, best.modularity) {
                if q > bq + 1e-12 {
                    best = s;
                }
            }
        }
        best
    }

    /// Distinct partitions in order of appearance.
    pub fn levels(&self) -> Vec<&Partition> {
        let mut out: Vec<&Partition> = Vec::new();
        for s in &self.stages {
            if out.last().is_none_or(|p| **p != s.partition) {
                out.push(&s.partition);
            }
        }
        out
    }
}

/// Girvan-Newman: repeatedly delete the edge of largest betweenness,
/// recomputing betweenness after every deletion. Ties go to the edge with
/// the lexicographically smallest `(min endpoint, max endpoint)`.
pub fn girvan_newman(g: &Graph) -> Result<Dendrogram> {
    g.require_undirected()?;
    let n = g.n();
    let score = |p: &Partition| modularity(g, p).ok();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| Edge { source: e.source.min(e.target), target: e.source.max(e.target), ..*e })
        .collect();
    let mut current = Graph::build(n, edges.iter().copied(), false, false)?;
    let start = Partition::from_assignment(&current.connected_components().labels);
    let mut stages = vec![DendrogramStage { removed: None, modularity: score(&start), partition: start }];
    while !edges.is_empty() {
        let eb = edge_betweenness(&current);
        let top = eb.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let tol = 1e-9 * top.abs().max(1.0);
        let pick = (0..edges.len())
            .filter(|&i| eb[i] >= top - tol)
            .min_by_key(|&i| (edges[i].source, edges[i].target))
            .expect("at least one edge");
        let gone = edges.remove(pick);
        current = Graph::build(n, edges.iter().copied(), false, false)?;
        let partition = Partition::from_assignment(&current.connected_components().labels);
        stages.push(DendrogramStage {
            removed: Some((gone.source, gone.target)),
            modularity: score(&partition),
            partition,
        });
    }
    Ok(Dendrogram { stages })
}

/// Matrix whose second eigenvector drives [`spectral_bisection`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BisectionMatrix {
    /// Eigenvector of the second-largest eigenvalue.
    Adjacency,
    /// Fiedler vector.
    Laplacian,
    /// `I - D^{-1/2} A D^{-1/2}`, second-smallest eigenvalue.
    NormalizedLaplacian,
}

/// Two-way split by the sign pattern of the second eigenvector.
///
/// The vector is oriented so its first clearly nonzero entry is positive;
/// entries within tolerance of zero join the positive block.
pub fn spectral_bisection(g: &Graph, matrix: BisectionMatrix) -> Result<Partition> {
    g.require_undirected()?;
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let a = g.adjacency_matrix();
    let (m, col) = match matrix {
        BisectionMatrix::Adjacency => (a, 1),
        BisectionMatrix::Laplacian => (g.laplacian_matrix()?, n - 2),
        BisectionMatrix::NormalizedLaplacian => {
            let d: Vec<f64> = a.row_iter().map(|r| r.sum()).collect();
            let norm = DMatrix::from_fn(n, n, |i, j| {
                let off = a[(i, j)] / (d[i] * d[j]).sqrt();
                if i == j { 1.0 - off } else { -off }
            });
            (norm, n - 2)
        }
    };
    let spec = eig_symmetric(&m)?;
    let v = spec.eigenvectors.column(col);
    let tol = 1e-10;
    let sign = v.iter().find(|x| x.abs() > tol).map_or(1.0, |x| x.signum());
    let labels: Vec<usize> = v.iter().map(|x| usize::from(sign * x < -tol)).collect();
    Ok(Partition::from_assignment(&labels))
}

/// `σ_ij = η_ij / √(k_i k_j)` with `η_ij` the number of common neighbours.
/// Pairs involving an isolated node score 0.
pub fn cosine_similarity(g: &Graph) -> Result<DMatrix<f64>> {
    g.require_undirected()?;
    let a = g.adjacency_matrix();
    let common = &a * &a;
    let k: Vec<f64> = a.row_iter().map(|r| r.sum()).collect();
    let n = g.n();
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let d = k[i] * k[j];
        if d > 0.0 { common[(i, j)] / d.sqrt() } else { 0.0 }
    }))
}
