//! Node centrality: degree, closeness, betweenness, Katz, eigenvector,
//! PageRank and subgraph centrality.

use std::collections::{BTreeMap, VecDeque};

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, MatrixFunction};

/// Default power-iteration tolerance (L1 change between iterates).
pub const POWER_TOL: f64 = 1e-12;
/// Default power-iteration cap.
pub const POWER_MAX_ITER: usize = 100_000;

/// Per-node scores of one measure together with the parameters used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityVector {
    pub measure: String,
    pub scores: Vec<f64>,
    pub params: BTreeMap<String, f64>,
    /// Set when the result is valid but its usual guarantees may not hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl CentralityVector {
    fn new(measure: &str, scores: Vec<f64>) -> Self {
        CentralityVector { measure: measure.into(), scores, params: BTreeMap::new(), warning: None }
    }

    fn with(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.into(), value);
        self
    }

    /// Nodes sorted by decreasing score, ties by index.
    pub fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.scores.len()).collect();
        idx.sort_by(|&a, &b| self.scores[b].total_cmp(&self.scores[a]).then(a.cmp(&b)));
        idx
    }
}

/// Weighted in-, out- and total degrees. `A_ij` counts an arc `i → j`, so
/// out-degrees are row sums and in-degrees column sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeCentrality {
    pub in_degree: Vec<f64>,
    pub out_degree: Vec<f64>,
    /// In plus out for digraphs; the plain degree for undirected graphs.
    pub total: Vec<f64>,
}

pub fn degree_centrality(g: &Graph) -> DegreeCentrality {
    let a = g.adjacency_matrix();
    let out_degree: Vec<f64> = a.row_iter().map(|r| r.sum()).collect();
    let in_degree: Vec<f64> = a.column_iter().map(|c| c.sum()).collect();
    let total = if g.is_directed() {
        in_degree.iter().zip(&out_degree).map(|(i, o)| i + o).collect()
    } else {
        out_degree.clone()
    };
    DegreeCentrality { in_degree, out_degree, total }
}

/// `CC(u) = (n-1)/Σ_v d(u,v)` over out-going hop distances. A lone node
/// scores 0.
pub fn closeness(g: &Graph) -> Result<CentralityVector> {
    let n = g.n();
    let scores = (0..n)
        .map(|u| {
            let total: usize = g
                .bfs_distances(u)
                .into_iter()
                .try_fold(0, |acc, d| d.map(|d| acc + d))
                .ok_or(Error::Disconnected)?;
            Ok(if total == 0 { 0.0 } else { (n - 1) as f64 / total as f64 })
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(CentralityVector::new("closeness", scores))
}

/// Shortest-path dependencies from one source (Brandes), as node and edge
/// contributions over ordered pairs `(source, t)`.
fn brandes_source(g: &Graph, s: usize, node: &mut [f64], edge: &mut [f64]) {
    let n = g.n();
    let mut sigma = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut preds: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    sigma[s] = 1.0;
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, e) in g.incident(v) {
            if w == v {
                continue;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                sigma[w] += sigma[v];
                preds[w].push((v, e));
            }
        }
    }
    let mut delta = vec![0.0; n];
    for &w in order.iter().rev() {
        for &(v, e) in &preds[w] {
            let c = sigma[v] / sigma[w] * (1.0 + delta[w]);
            delta[v] += c;
            edge[e] += c;
        }
        if w != s {
            node[w] += delta[w];
        }
    }
}

/// Node and edge betweenness totals. Undirected graphs count each unordered
/// pair once; digraphs count ordered pairs.
pub(crate) fn brandes(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    let (n, m) = (g.n(), g.m());
    let sources: Vec<usize> = (0..n).collect();
    // Fixed chunks summed in order keep the floating-point result
    // independent of thread scheduling.
    let partials: Vec<(Vec<f64>, Vec<f64>)> = sources
        .par_chunks(32)
        .map(|chunk| {
            let mut node = vec![0.0; n];
            let mut edge = vec![0.0; m];
            for &s in chunk {
                brandes_source(g, s, &mut node, &mut edge);
            }
            (node, edge)
        })
        .collect();
    let mut node = vec![0.0; n];
    let mut edge = vec![0.0; m];
    for (pn, pe) in partials {
        node.iter_mut().zip(pn).for_each(|(a, b)| *a += b);
        edge.iter_mut().zip(pe).for_each(|(a, b)| *a += b);
    }
    if !g.is_directed() {
        node.iter_mut().chain(edge.iter_mut()).for_each(|x| *x /= 2.0);
    }
    (node, edge)
}

/// `BC(k) = Σ_{i<j} ρ(i,k,j)/ρ(i,j)` with endpoints excluded, over hop-count
/// shortest paths.
pub fn betweenness(g: &Graph) -> CentralityVector {
    CentralityVector::new("betweenness", brandes(g).0)
}

/// Katz centrality with outgoing (row-sum) and incoming (column-sum) walks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KatzCentrality {
    pub outgoing: CentralityVector,
    pub incoming: CentralityVector,
}

/// `[(I - A/η)⁻¹ - I] 1` and its transpose counterpart. Requires `η` above
/// the spectral radius so the walk series converges.
pub fn katz(g: &Graph, eta: f64) -> Result<KatzCentrality> {
    let a = g.adjacency_matrix();
    let lambda_max = spectral::spectral_radius(&a)?;
    if !(eta > lambda_max && eta > 0.0) {
        return Err(Error::EtaTooSmall { eta, lambda_max });
    }
    let n = g.n();
    let id = DMatrix::identity(n, n);
    let r = (&id - &a / eta).lu().try_inverse().ok_or(Error::SingularResolvent(eta))? - id;
    let out: Vec<f64> = r.row_iter().map(|row| row.sum()).collect();
    let inc: Vec<f64> = r.column_iter().map(|col| col.sum()).collect();
    Ok(KatzCentrality {
        outgoing: CentralityVector::new("katz_out", out).with("eta", eta),
        incoming: CentralityVector::new("katz_in", inc).with("eta", eta),
    })
}

/// Which Perron vector [`eigenvector_centrality`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Undirected,
    /// `A φ = λ₁ φ`.
    Right,
    /// `Aᵀ φ = λ₁ φ`.
    Left,
}

/// Principal eigenvector, nonnegative with unit Euclidean norm, by power
/// iteration on `A + I` (the shift avoids oscillation on bipartite graphs).
///
/// Undirected graphs must be connected. A digraph that is not strongly
/// connected still gets a vector, flagged with a warning.
pub fn eigenvector_centrality(g: &Graph, direction: Direction) -> Result<CentralityVector> {
    let n = g.n();
    let mut a = g.adjacency_matrix();
    if direction == Direction::Left {
        a.transpose_mut();
    }
    let mut warning = None;
    if g.is_directed() {
        if !g.is_strongly_connected() {
            warning = Some("graph is not strongly connected; the Perron vector may not be positive".into());
        }
    } else if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 0 {
        return Ok(CentralityVector::new("eigenvector", vec![]));
    }
    let mut x = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let mut converged = false;
    let mut lambda = 0.0;
    for _ in 0..POWER_MAX_ITER {
        let mut next = &a * &x + &x;
        let norm = next.norm();
        if norm == 0.0 {
            return Err(Error::NoConvergence);
        }
        next /= norm;
        let change = (&next - &x).lp_norm(1);
        lambda = norm - 1.0;
        x = next;
        if change < POWER_TOL * n as f64 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }
    let scores = x.iter().map(|v| v.max(0.0)).collect();
    let mut cv = CentralityVector::new("eigenvector", scores).with("lambda1", lambda);
    cv.warning = warning;
    Ok(cv)
}

/// PageRank with teleport probability `1 - alpha`; dangling nodes jump
/// uniformly. Edge weights bias the walk.
pub fn pagerank(g: &Graph, alpha: f64, tol: f64) -> Result<CentralityVector> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::BadParams(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    let n = g.n();
    if n == 0 {
        return Ok(CentralityVector::new("pagerank", vec![]).with("alpha", alpha));
    }
    let edges = g.edges();
    // Row-normalised transition lists.
    let mut rows: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|i| {
            g.incident(i)
                .iter()
                .map(|&(j, e)| (j, edges[e].weight * edges[e].multiplicity as f64))
                .collect()
        })
        .collect();
    let out: Vec<f64> = rows.iter().map(|r| r.iter().map(|x| x.1).sum()).collect();
    for (row, &total) in rows.iter_mut().zip(&out) {
        row.iter_mut().for_each(|x| x.1 /= total);
    }
    let nf = n as f64;
    let mut pi = vec![1.0 / nf; n];
    for _ in 0..POWER_MAX_ITER {
        let dangling: f64 = (0..n).filter(|&i| out[i] == 0.0).map(|i| pi[i]).sum();
        let base = alpha * dangling / nf + (1.0 - alpha) / nf;
        let mut next = vec![base; n];
        for (i, row) in rows.iter().enumerate() {
            for &(j, h) in row {
                next[j] += alpha * pi[i] * h;
            }
        }
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= total);
        let change: f64 = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum();
        pi = next;
        if change < tol {
            return Ok(CentralityVector::new("pagerank", pi).with("alpha", alpha).with("tol", tol));
        }
    }
    Err(Error::NoConvergence)
}

/// Which closed walks [`subgraph_centrality`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkParity {
    /// `(e^A)_ii`.
    Total,
    /// `(sinh A)_ii`.
    Odd,
    /// `(cosh A)_ii`.
    Even,
}

/// Subgraph centrality: weighted count of closed walks at each node.
/// Digraphs use the general matrix exponential.
pub fn subgraph_centrality(g: &Graph, parts: WalkParity) -> Result<CentralityVector> {
    let a = g.adjacency_matrix();
    let m = if g.is_directed() {
        let e = a.exp();
        match parts {
            WalkParity::Total => e,
            WalkParity::Odd => (&e - (-&a).exp()) * 0.5,
            WalkParity::Even => (&e + (-&a).exp()) * 0.5,
        }
    } else {
        let f = match parts {
            WalkParity::Total => MatrixFunction::Exp,
            WalkParity::Odd => MatrixFunction::Sinh,
            WalkParity::Even => MatrixFunction::Cosh,
        };
        spectral::matrix_function(&a, f)?
    };
    let name = match parts {
        WalkParity::Total => "subgraph",
        WalkParity::Odd => "subgraph_odd",
        WalkParity::Even => "subgraph_even",
    };
    Ok(CentralityVector::new(name, m.diagonal().iter().copied().collect()))
}
