use serde::{Deserialize, Serialize};

use super::multigraph::Multigraph;
use super::poly::{BivariatePolynomial, Polynomial};
use super::tutte::tutte_polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Chromatic polynomial in `q`, from `χ = q^k (−1)^{n−k} T(1−q, 0)`.
pub fn chromatic_polynomial(g: &Multigraph) -> Polynomial {
    chromatic_from_tutte(g, &tutte_polynomial(g))
}

pub fn chromatic_from_tutte(g: &Multigraph, t: &BivariatePolynomial) -> Polynomial {
    let k = g.component_count();
    let one_minus_q = Polynomial::linear(1, -1);
    let mut sum = Polynomial::zero();
    for ((i, j), c) in t.terms() {
        if j == 0 {
            sum = sum + one_minus_q.pow(i).scale(c);
        }
    }
    let sign = if (g.n - k).is_multiple_of(2) { 1 } else { -1 };
    &Polynomial::monomial(sign, k) * &sum
}

/// The two standard Potts Hamiltonians.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hamiltonian {
    /// `H1 = −J Σ δ(σ_i, σ_j)`.
    H1,
    /// `H2 = J Σ [1 − δ(σ_i, σ_j)]`.
    H2,
}

/// Exact Potts partition function as an integer polynomial in a Boltzmann
/// factor: `y = e^K` for `H1`, `w = e^{−K}` for `H2`, with `K = βJ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PottsPartition {
    pub q: u32,
    pub hamiltonian: Hamiltonian,
    pub polynomial: Polynomial,
}

impl PottsPartition {
    pub fn variable(&self) -> &'static str {
        match self.hamiltonian {
            Hamiltonian::H1 => "exp(K)",
            Hamiltonian::H2 => "exp(-K)",
        }
    }

    pub fn evaluate(&self, k: f64) -> f64 {
        match self.hamiltonian {
            Hamiltonian::H1 => self.polynomial.evaluate(k.exp()),
            Hamiltonian::H2 => self.polynomial.evaluate((-k).exp()),
        }
    }

    /// Readable form such as `2*exp(K)^4 + 12*exp(K)^2 + 2`.
    pub fn format(&self) -> String {
        self.polynomial.format_in(self.variable())
    }
}

/// `Z1 = q^k v^{n−k} T(G; (q+v)/v, e^K)` with `v = e^K − 1`, expanded exactly.
pub fn potts_partition(g: &Graph, q: u32, hamiltonian: Hamiltonian) -> Result<PottsPartition> {
    if q == 0 {
        return Err(Error::BadParams("Potts model needs q >= 1".into()));
    }
    let mg = Multigraph::from_graph(g)?;
    let t = tutte_polynomial(&mg);
    let k = mg.component_count();
    let rank = (mg.n - k) as u32;
    let q = q as i128;
    // In y = e^K: v = y − 1 and q + v = y + q − 1.
    let v = Polynomial::linear(-1, 1);
    let q_plus_v = Polynomial::linear(q - 1, 1);
    let mut z1 = Polynomial::zero();
    for ((i, j), c) in t.terms() {
        let term = &(&q_plus_v.pow(i) * &v.pow(rank - i)) * &Polynomial::monomial(c, j as usize);
        z1 = z1 + term;
    }
    let z1 = z1.scale(q.pow(k as u32));
    let polynomial = match hamiltonian {
        Hamiltonian::H1 => z1,
        Hamiltonian::H2 => {
            // Z2 = e^{−mK} Z1: y^j maps to w^{m−j}.
            let m = mg.m();
            let mut coeffs = vec![0; m + 1];
            for (j, &c) in z1.coeffs().iter().enumerate() {
                coeffs[m - j] = c;
            }
            Polynomial::from_coeffs(coeffs)
        }
    };
    Ok(PottsPartition { q: q as u32, hamiltonian, polynomial })
}

/// Zero-temperature antiferromagnetic limit: the number of proper
/// `q`-colourings, read off as the `e^K → 0` value of `Z1`.
pub fn chromatic_from_zero_t_limit(g: &Graph, q: u32) -> Result<i128> {
    Ok(potts_partition(g, q, Hamiltonian::H1)?.polynomial.coeff(0))
}

const STATE_LIMIT: u128 = 10_000_000;

fn agreements(g: &Graph, state: &[usize]) -> u32 {
    g.edges()
        .iter()
        .filter(|e| state[e.source] == state[e.target])
        .map(|e| e.multiplicity)
        .sum()
}

fn boltzmann_exponent(g: &Graph, agree: u32, k: f64, hamiltonian: Hamiltonian) -> f64 {
    match hamiltonian {
        Hamiltonian::H1 => k * agree as f64,
        Hamiltonian::H2 => -k * (g.m() as f64 - agree as f64),
    }
}

/// Brute-force `Σ_ω exp(−βH(ω))` over all `qⁿ` spin states.
pub fn enumerate_states(g: &Graph, q: u32, k: f64, hamiltonian: Hamiltonian) -> Result<f64> {
    g.require_undirected()?;
    let total = (q as u128).checked_pow(g.n() as u32).unwrap_or(u128::MAX);
    if total > STATE_LIMIT {
        return Err(Error::TooLarge { what: "Potts state space", size: total, limit: STATE_LIMIT });
    }
    if q == 0 {
        return Ok(if g.n() == 0 { 1.0 } else { 0.0 });
    }
    let q = q as usize;
    let mut state = vec![0usize; g.n()];
    let mut z = 0.0;
    loop {
        z += boltzmann_exponent(g, agreements(g, &state), k, hamiltonian).exp();
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == state.len() {
                return Ok(z);
            }
            state[pos] += 1;
            if state[pos] < q {
                break;
            }
            state[pos] = 0;
            pos += 1;
        }
    }
}

/// Probability `exp(−βH(ω)) / Z` of one spin configuration.
pub fn state_probability(
    g: &Graph,
    q: u32,
    k: f64,
    hamiltonian: Hamiltonian,
    state: &[usize],
) -> Result<f64> {
    if state.len() != g.n() || state.iter().any(|&s| s >= q as usize) {
        return Err(Error::BadParams(format!(
            "state must assign one of {q} spins to each of {} nodes",
            g.n()
        )));
    }
    let z = potts_partition(g, q, hamiltonian)?.evaluate(k);
    Ok(boltzmann_exponent(g, agreements(g, state), k, hamiltonian).exp() / z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colourings(g: &Graph, q: usize) -> i128 {
        let mut count = 0;
        let total = q.pow(g.n() as u32);
        for code in 0..total {
            let state: Vec<usize> = (0..g.n()).map(|i| code / q.pow(i as u32) % q).collect();
            if g.edges().iter().all(|e| state[e.source] != state[e.target]) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn chromatic_examples() {
        let k2 = Multigraph::from_graph(&Graph::complete(2)).unwrap();
        assert_eq!(chromatic_polynomial(&k2).format_in("q"), "q^2 - q");
        let c4 = Graph::cycle(4);
        let chi = chromatic_polynomial(&Multigraph::from_graph(&c4).unwrap());
        assert_eq!(chi.evaluate_int(2), colourings(&c4, 2));
        assert_eq!(chi.evaluate_int(2), 2);
        let k3 = Multigraph::from_graph(&Graph::complete(3)).unwrap();
        assert_eq!(chromatic_polynomial(&k3).evaluate_int(2), 0);
        assert_eq!(chromatic_polynomial(&k3).evaluate_int(3), 6);
    }

    #[test]
    fn c4_partition_function() {
        let z = potts_partition(&Graph::cycle(4), 2, Hamiltonian::H1).unwrap();
        assert_eq!(z.polynomial.coeffs(), &[2, 0, 12, 0, 2]);
        assert_eq!(z.format(), "2*exp(K)^4 + 12*exp(K)^2 + 2");
        for k in [-1.0f64, 0.0, 0.5, 1.0] {
            let expected = 12.0 * (2.0 * k).exp() + 2.0 * (4.0 * k).exp() + 2.0;
            assert!((z.evaluate(k) - expected).abs() < 1e-12 * expected);
            let brute = enumerate_states(&Graph::cycle(4), 2, k, Hamiltonian::H1).unwrap();
            assert!((brute - expected).abs() < 1e-12 * expected);
        }
    }

    #[test]
    fn single_edge_and_node() {
        let k2 = Graph::complete(2);
        let z = potts_partition(&k2, 2, Hamiltonian::H1).unwrap();
        assert_eq!(z.polynomial.coeffs(), &[2, 2]);
        assert_eq!(enumerate_states(&Graph::empty(1), 3, 0.4, Hamiltonian::H1).unwrap(), 3.0);
        let z2 = potts_partition(&k2, 2, Hamiltonian::H2).unwrap();
        assert!((z2.evaluate(0.3) - (-0.3f64).exp() * z.evaluate(0.3)).abs() < 1e-14);
    }

    #[test]
    fn state_probability_of_two_domain_walls() {
        let k: f64 = 0.8;
        // ω2: three up, one down, two satisfied bonds
        let p = state_probability(&Graph::cycle(4), 2, k, Hamiltonian::H1, &[0, 0, 0, 1]).unwrap();
        let expected = (2.0 * k).exp() / (12.0 * (2.0 * k).exp() + 2.0 * (4.0 * k).exp() + 2.0);
        assert!((p - expected).abs() < 1e-15);
    }

    #[test]
    fn zero_temperature_counts_colourings() {
        assert_eq!(chromatic_from_zero_t_limit(&Graph::cycle(4), 2).unwrap(), 2);
        assert_eq!(chromatic_from_zero_t_limit(&Graph::complete(3), 3).unwrap(), 6);
        assert_eq!(chromatic_from_zero_t_limit(&Graph::complete(2), 1).unwrap(), 0);
    }

    #[test]
    fn oversized_state_space_is_rejected() {
        let err = enumerate_states(&Graph::empty(30), 2, 0.0, Hamiltonian::H1).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }
}
