//! Statistical mechanics of a network whose energy levels are the adjacency
//! eigenvalues, and the communicability it induces.
//!
//! Boltzmann's constant is 1 throughout.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::{self, MatrixFunction};

/// Thermodynamic functionals at inverse temperature `beta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermoReport {
    pub beta: f64,
    /// `Z = Σ_j e^{βλ_j}`.
    pub z: f64,
    /// `ln Z`, finite even when `Z` overflows.
    pub log_z: f64,
    /// `p_j = e^{βλ_j}/Z`, matching the eigenvalues in descending order.
    pub probabilities: Vec<f64>,
    /// `S = -Σ_j p_j (βλ_j - ln Z)`.
    pub entropy: f64,
    /// `H = -Σ_j λ_j p_j`.
    pub energy: f64,
    /// `F = -ln Z / β`.
    pub free_energy: f64,
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

/// `Z(G; β) = Tr e^{βA}`.
pub fn network_partition(g: &Graph, beta: f64) -> Result<f64> {
    Ok(thermo_report(g, beta)?.z)
}

pub fn thermo_report(g: &Graph, beta: f64) -> Result<ThermoReport> {
    g.require_undirected()?;
    let lambdas = spectral::eigenvalues_symmetric(&g.adjacency_matrix())?;
    let exponents: Vec<f64> = lambdas.iter().map(|l| beta * l).collect();
    let log_z = log_sum_exp(&exponents);
    let probabilities: Vec<f64> = exponents.iter().map(|x| (x - log_z).exp()).collect();
    let entropy = -probabilities.iter().zip(&exponents).map(|(p, x)| p * (x - log_z)).sum::<f64>();
    let energy = -probabilities.iter().zip(&lambdas).map(|(p, l)| p * l).sum::<f64>();
    Ok(ThermoReport {
        beta,
        z: log_z.exp(),
        log_z,
        probabilities,
        entropy,
        energy,
        free_energy: -log_z / beta,
    })
}

/// Communicability matrix `G(β) = e^{βA}`.
pub fn communicability(g: &Graph, beta: f64) -> Result<DMatrix<f64>> {
    g.require_undirected()?;
    spectral::matrix_function(&g.adjacency_matrix(), MatrixFunction::ScaledExp(beta))
}

/// Closed-form communicability between nodes `r` and `s` (1-based) of the
/// path `P_n` at `β = 1`, from its sine eigenbasis.
pub fn path_communicability(n: usize, r: usize, s: usize) -> f64 {
    let nf = (n + 1) as f64;
    let (r, s) = (r as f64, s as f64);
    (1..=n)
        .map(|j| {
            let t = j as f64 * PI / nf;
            ((t * (r - s)).cos() - (t * (r + s)).cos()) * (2.0 * t.cos()).exp()
        })
        .sum::<f64>()
        / nf
}

/// Off-diagonal communicability of `K_n` at `β = 1`, `(e^n - 1)/(n e)`.
pub fn complete_communicability(n: usize) -> f64 {
    let nf = n as f64;
    nf.exp_m1() / (nf * std::f64::consts::E)
}
