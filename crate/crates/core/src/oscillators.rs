//! Ball-and-spring networks in a heat bath: partition functions and thermal
//! Green's functions, classical and quantum.
//!
//! Every node is a ball of mass `m` tied to the ground with constant
//! `K m ω²`; every edge is a spring of constant `m ω²`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, eig_symmetric};

/// Physical constants of the oscillator network. Natural units by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub mass: f64,
    /// Network spring frequency `ω`.
    pub omega: f64,
    /// Ground constant `K`; must exceed the largest adjacency eigenvalue.
    pub k_ground: f64,
    pub beta: f64,
    pub hbar: f64,
    /// Oscillator frequency `Ω`. `None` means `√(K/m)·ω`.
    pub big_omega: Option<f64>,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        OscillatorParams { mass: 1.0, omega: 1.0, k_ground: 1.0, beta: 1.0, hbar: 1.0, big_omega: None }
    }
}

impl OscillatorParams {
    /// Unit constants with the ground constant set to the graph's maximum
    /// degree plus one, which always exceeds the spectral radius.
    pub fn for_graph(g: &Graph) -> Self {
        OscillatorParams { k_ground: g.max_degree() as f64 + 1.0, ..Default::default() }
    }

    /// `Ω`, either as given or `√(K/m)·ω`.
    pub fn oscillator_frequency(&self) -> f64 {
        self.big_omega.unwrap_or_else(|| (self.k_ground / self.mass).sqrt() * self.omega)
    }

    /// `βħω²/(2Ω)`, the effective inverse temperature of the quantum network.
    pub fn quantum_coupling(&self) -> f64 {
        self.beta * self.hbar * self.omega.powi(2) / (2.0 * self.oscillator_frequency())
    }

    fn validate(&self) -> Result<()> {
        let named = [
            ("mass", self.mass),
            ("omega", self.omega),
            ("k_ground", self.k_ground),
            ("beta", self.beta),
            ("hbar", self.hbar),
            ("big_omega", self.big_omega.unwrap_or(1.0)),
        ];
        for (name, x) in named {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::BadParams(format!("{name} must be positive and finite, got {x}")));
            }
        }
        Ok(())
    }
}

/// Which Hamiltonian the classical Green's function comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GreenForm {
    /// Grounded network, `(I - A/K)⁻¹`.
    Adjacency,
    /// Free network, `L⁺`.
    Laplacian,
}

fn grounded_eigenvalues(g: &Graph, p: &OscillatorParams) -> Result<Vec<f64>> {
    g.require_undirected()?;
    p.validate()?;
    let lambdas = spectral::eigenvalues_symmetric(&g.adjacency_matrix())?;
    let lambda_max = lambdas.first().copied().unwrap_or(0.0);
    if p.k_ground <= lambda_max {
        return Err(Error::KTooSmall { k: p.k_ground, lambda_max });
    }
    Ok(lambdas.iter().map(|l| p.k_ground - l).collect())
}

/// `ln Z` of the classical grounded network,
/// `(n/2) ln(2π/(βmω²)) - ½ ln det(KI - A)`.
pub fn log_classical_partition(g: &Graph, p: &OscillatorParams) -> Result<f64> {
    let modes = grounded_eigenvalues(g, p)?;
    let n = g.n() as f64;
    let log_det: f64 = modes.iter().map(|l| l.ln()).sum();
    Ok(0.5 * n * (2.0 * PI / (p.beta * p.mass * p.omega.powi(2))).ln() - 0.5 * log_det)
}

/// Classical partition function of the grounded network.
pub fn classical_partition(g: &Graph, p: &OscillatorParams) -> Result<f64> {
    log_classical_partition(g, p).map(f64::exp)
}

/// The same partition function as a product over normal modes,
/// `Π_μ √(2π/(βmω²λ_μ))` with `λ_μ` the eigenvalues of `KI - A`.
pub fn classical_partition_by_modes(g: &Graph, p: &OscillatorParams) -> Result<f64> {
    let modes = grounded_eigenvalues(g, p)?;
    let c = 2.0 * PI / (p.beta * p.mass * p.omega.powi(2));
    Ok(modes.iter().map(|l| (c / l).sqrt()).product())
}

/// Full classical thermal Green's function matrix `⟨x_p x_q⟩`.
pub fn classical_green_matrix(g: &Graph, p: &OscillatorParams, form: GreenForm) -> Result<DMatrix<f64>> {
    g.require_undirected()?;
    p.validate()?;
    match form {
        GreenForm::Adjacency => {
            grounded_eigenvalues(g, p)?;
            let inv = spectral::resolvent(&g.adjacency_matrix(), p.k_ground)?;
            Ok(inv / (p.beta * p.mass * p.k_ground * p.omega.powi(2)))
        }
        GreenForm::Laplacian => {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            let lp = spectral::laplacian_pseudoinverse(&g.laplacian_matrix()?)?;
            Ok(lp / (p.beta * p.mass * p.omega.powi(2)))
        }
    }
}

/// Classical thermal Green's function `⟨x_u x_v⟩`.
pub fn classical_green(g: &Graph, p: &OscillatorParams, u: usize, v: usize, form: GreenForm) -> Result<f64> {
    check_nodes(g, &[u, v])?;
    Ok(classical_green_matrix(g, p, form)?[(u, v)])
}

/// Quantum Green's function matrix in the single-excitation regime,
/// `e^{-βħΩ} exp[(βħω²/2Ω) A]`.
///
/// Meaningful when `βħΩ ≫ 1` and `Ω ≫ ω`; the regime is not enforced.
pub fn quantum_green_matrix(g: &Graph, p: &OscillatorParams) -> Result<DMatrix<f64>> {
    g.require_undirected()?;
    p.validate()?;
    let big = p.oscillator_frequency();
    let expa = spectral::matrix_function(
        &g.adjacency_matrix(),
        spectral::MatrixFunction::ScaledExp(p.quantum_coupling()),
    )?;
    Ok(expa * (-p.beta * p.hbar * big).exp())
}

pub fn quantum_green(g: &Graph, p: &OscillatorParams, u: usize, v: usize) -> Result<f64> {
    check_nodes(g, &[u, v])?;
    Ok(quantum_green_matrix(g, p)?[(u, v)])
}

/// Vacuum-projected quantum partition function,
/// `Π_μ exp{-(βħΩ/2)[1 + ω²(λ_μ - K)/(2Ω²)]}` with `λ_μ` the eigenvalues of
/// `KI - A`.
pub fn quantum_partition(g: &Graph, p: &OscillatorParams) -> Result<f64> {
    log_quantum_partition(g, p).map(f64::exp)
}

pub fn log_quantum_partition(g: &Graph, p: &OscillatorParams) -> Result<f64> {
    g.require_undirected()?;
    p.validate()?;
    let big = p.oscillator_frequency();
    let lambdas = spectral::eigenvalues_symmetric(&g.adjacency_matrix())?;
    Ok(lambdas
        .iter()
        .map(|la| {
            let mode = p.k_ground - la;
            -0.5 * p.beta * p.hbar * big * (1.0 + p.omega.powi(2) * (mode - p.k_ground) / (2.0 * big * big))
        })
        .sum())
}

/// Laplacian-network correlation `1 + U₂(u) U₂(v) exp[-(βħω²/2Ω) μ₂]` built
/// from the Fiedler pair, evaluated at the given `Ω` rather than in a limit.
///
/// A diagnostic only: when `μ₂` is degenerate the Fiedler vector is not
/// unique and neither is the value.
pub fn laplacian_limit_correlation(g: &Graph, p: &OscillatorParams, u: usize, v: usize) -> Result<f64> {
    g.require_undirected()?;
    p.validate()?;
    check_nodes(g, &[u, v])?;
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = eig_symmetric(&g.laplacian_matrix()?)?;
    let k = g.n() - 2;
    let mu2 = spec.eigenvalues[k];
    let fiedler = spec.eigenvectors.column(k);
    Ok(1.0 + fiedler[u] * fiedler[v] * (-p.quantum_coupling() * mu2).exp())
}

fn check_nodes(g: &Graph, nodes: &[usize]) -> Result<()> {
    match nodes.iter().find(|&&u| u >= g.n()) {
        Some(&node) => Err(Error::OutOfRange { node, n: g.n() }),
        None => Ok(()),
    }
}
