//! Effective resistance between nodes of a resistor network and the
//! random-walk commute times it determines.
//!
//! Edge weights are conductances; an unweighted edge is a unit resistor.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, eig_symmetric};

/// How [`resistance_distance`] evaluates `Ω(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResistanceMethod {
    /// `L⁺(u,u) + L⁺(v,v) - 2 L⁺(u,v)`.
    Pseudoinverse,
    /// Ratio of reduced Laplacian determinants.
    Determinant,
    /// Sum over the nonzero Laplacian eigenpairs.
    Spectral,
}

/// Pairwise effective resistances of a connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    omega: DMatrix<f64>,
}

impl ResistanceMatrix {
    pub fn n(&self) -> usize {
        self.omega.nrows()
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.omega[(u, v)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.omega
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.omega
    }

    /// Row-major copy, handy for serialisation.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.omega.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    /// Kirchhoff index: sum of `Ω(u, v)` over unordered pairs.
    pub fn kirchhoff_index(&self) -> f64 {
        self.omega.sum() / 2.0
    }
}

fn check_node(g: &Graph, u: usize) -> Result<()> {
    if u >= g.n() {
        return Err(Error::OutOfRange { node: u, n: g.n() });
    }
    Ok(())
}

/// The component holding `u` and `v` as its own graph, with their new labels.
fn shared_component(g: &Graph, u: usize, v: usize) -> Result<(Graph, usize, usize)> {
    check_node(g, u)?;
    check_node(g, v)?;
    let comps = g.connected_components();
    if comps.labels[u] != comps.labels[v] {
        return Err(Error::DifferentComponents(u, v));
    }
    if comps.count == 1 {
        return Ok((g.clone(), u, v));
    }
    let nodes: Vec<usize> = (0..g.n()).filter(|&w| comps.labels[w] == comps.labels[u]).collect();
    let pos = |x: usize| nodes.binary_search(&x).unwrap();
    Ok((g.induced_subgraph(&nodes), pos(u), pos(v)))
}

/// Natural log of `|det m|`, or `None` when `m` is singular.
fn log_abs_det(m: DMatrix<f64>) -> Option<f64> {
    if m.nrows() == 0 {
        return Some(0.0);
    }
    let lu = m.lu();
    let mut acc = 0.0;
    for i in 0..lu.u().nrows() {
        let d = lu.u()[(i, i)];
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        acc += d.abs().ln();
    }
    Some(acc)
}

fn remove_rows_cols(m: &DMatrix<f64>, drop: &[usize]) -> DMatrix<f64> {
    let keep: Vec<usize> = (0..m.nrows()).filter(|i| !drop.contains(i)).collect();
    DMatrix::from_fn(keep.len(), keep.len(), |r, c| m[(keep[r], keep[c])])
}

/// Effective resistance between `u` and `v`.
///
/// The pseudoinverse and spectral methods work inside the component holding
/// both nodes; the determinant method needs the whole graph connected.
pub fn resistance_distance(g: &Graph, u: usize, v: usize, method: ResistanceMethod) -> Result<f64> {
    g.require_undirected()?;
    let (h, a, b) = shared_component(g, u, v)?;
    if method == ResistanceMethod::Determinant && h.n() != g.n() {
        return Err(Error::Disconnected);
    }
    if a == b {
        return Ok(0.0);
    }
    let l = h.laplacian_matrix()?;
    match method {
        ResistanceMethod::Pseudoinverse => {
            let lp = spectral::laplacian_pseudoinverse(&l)?;
            Ok(lp[(a, a)] + lp[(b, b)] - 2.0 * lp[(a, b)])
        }
        ResistanceMethod::Determinant => {
            let num = log_abs_det(remove_rows_cols(&l, &[a, b])).ok_or(Error::Disconnected)?;
            let den = log_abs_det(remove_rows_cols(&l, &[a])).ok_or(Error::Disconnected)?;
            Ok((num - den).exp())
        }
        ResistanceMethod::Spectral => {
            let spec = eig_symmetric(&l)?;
            let tol = spec.tolerance();
            let vecs = &spec.eigenvectors;
            Ok(spec
                .eigenvalues
                .iter()
                .enumerate()
                .filter(|(_, mu)| mu.abs() > tol)
                .map(|(k, mu)| (vecs[(a, k)] - vecs[(b, k)]).powi(2) / mu)
                .sum())
        }
    }
}

/// All-pairs resistance matrix from `(L + J/n)⁻¹`.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    g.require_undirected()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let l = g.laplacian_matrix()?;
    let j = DMatrix::from_element(n, n, 1.0 / n as f64);
    let inv = (l + j).lu().try_inverse().ok_or(Error::Disconnected)?;
    let omega = DMatrix::from_fn(n, n, |i, k| {
        if i == k {
            0.0
        } else {
            inv[(i, i)] + inv[(k, k)] - inv[(i, k)] - inv[(k, i)]
        }
    });
    Ok(ResistanceMatrix { omega })
}

/// Recovers `L⁺` from a resistance matrix by double centring:
/// `L⁺ = -½ [Ω - (ΩJ + JΩ)/n + JΩJ/n²]`.
pub fn pseudoinverse_from_resistance(omega: &ResistanceMatrix) -> DMatrix<f64> {
    let o = omega.as_matrix();
    let n = o.nrows() as f64;
    let row: Vec<f64> = o.row_iter().map(|r| r.sum()).collect();
    let col: Vec<f64> = o.column_iter().map(|c| c.sum()).collect();
    let total = o.sum();
    DMatrix::from_fn(o.nrows(), o.ncols(), |i, j| {
        -0.5 * (o[(i, j)] - (row[i] + col[j]) / n + total / (n * n))
    })
}

/// One-step transition probability `w_uv / Σ_x w_ux` of the edge-weighted
/// random walk whose commute times [`commute_time`] gives.
pub fn transition_probability(g: &Graph, u: usize, v: usize) -> Result<f64> {
    check_node(g, u)?;
    check_node(g, v)?;
    let a = g.adjacency_matrix();
    let strength = a.row(u).sum();
    if strength == 0.0 {
        return Err(Error::BadParams(format!("node {u} has no edges to leave by")));
    }
    Ok(a[(u, v)] / strength)
}

fn total_weight(g: &Graph) -> f64 {
    g.edges().iter().map(|e| e.weight * e.multiplicity as f64).sum()
}

/// Expected commute time `2 (Σ_e w_e) Ω(u, v)` of the random walk.
pub fn commute_time(g: &Graph, u: usize, v: usize) -> Result<f64> {
    g.require_undirected()?;
    check_node(g, u)?;
    check_node(g, v)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let omega = resistance_distance(g, u, v, ResistanceMethod::Pseudoinverse)?;
    Ok(2.0 * total_weight(g) * omega)
}
