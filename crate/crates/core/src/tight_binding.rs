//! Hückel (tight-binding) electronic structure of molecular graphs, nullity
//! and the Lieb total spin of half-filled bipartite lattices.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::spectral::{eig_symmetric, eigenvalues_symmetric, GROUPING_TOL};

/// Orbital energies and ground-state filling of `H = αI + βA`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuckelResult {
    pub alpha: f64,
    pub beta: f64,
    /// Ascending orbital energies `E_j = α + βλ_j`.
    pub orbital_energies: Vec<f64>,
    /// Electrons in each orbital, aligned with `orbital_energies`.
    pub occupations: Vec<u8>,
    pub total_energy: f64,
}

/// Neutral molecule: one π-electron per carbon.
pub fn huckel_spectrum(g: &Graph, alpha: f64, beta: f64) -> Result<HuckelResult> {
    huckel_with_electrons(g, alpha, beta, g.n())
}

pub fn huckel_with_electrons(
    g: &Graph,
    alpha: f64,
    beta: f64,
    electrons: usize,
) -> Result<HuckelResult> {
    g.require_undirected()?;
    if electrons > 2 * g.n() {
        return Err(Error::BadParams(format!(
            "{electrons} electrons do not fit in {} orbitals",
            g.n()
        )));
    }
    let lambdas = eigenvalues_symmetric(&g.adjacency_matrix())?;
    let mut orbital_energies: Vec<f64> = lambdas.iter().map(|l| alpha + beta * l).collect();
    orbital_energies.sort_by(f64::total_cmp);
    let mut left = electrons;
    let occupations: Vec<u8> = orbital_energies
        .iter()
        .map(|_| {
            let take = left.min(2);
            left -= take;
            take as u8
        })
        .collect();
    let total_energy =
        orbital_energies.iter().zip(&occupations).map(|(e, &g)| e * g as f64).sum();
    Ok(HuckelResult { alpha, beta, orbital_energies, occupations, total_energy })
}

/// Ground-state π-energy in units of |β| from descending eigenvalues.
pub fn total_pi_energy(eigenvalues_desc: &[f64]) -> f64 {
    let n = eigenvalues_desc.len();
    let half = n / 2;
    let doubly: f64 = eigenvalues_desc[..half].iter().sum();
    if n.is_multiple_of(2) {
        2.0 * doubly
    } else {
        2.0 * doubly + eigenvalues_desc[half]
    }
}

/// Graph energy `Σ|λ_j|`.
pub fn graph_energy(eigenvalues: &[f64]) -> f64 {
    eigenvalues.iter().map(|l| l.abs()).sum()
}

/// Bounds on the graph energy `Σ|λ_j|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyBounds {
    /// `√(2m + n(n−1)|det A|^{2/n})`.
    pub lower: f64,
    /// `√(2mn)`.
    pub upper: f64,
    /// `4m/n + √((n−2)(2m − 8m²/n²))` for bipartite graphs when the radicand
    /// is nonnegative.
    pub bipartite_upper: Option<f64>,
}

pub fn energy_bounds(g: &Graph) -> Result<EnergyBounds> {
    g.require_undirected()?;
    let n = g.n() as f64;
    let m = g.m() as f64;
    let a = g.adjacency_matrix();
    let det = if g.n() == 0 { 0.0 } else { a.clone().lu().determinant().abs() };
    let lower = (2.0 * m + n * (n - 1.0) * det.powf(2.0 / n)).sqrt();
    let upper = (2.0 * m * n).sqrt();
    let bipartite_upper = if g.is_bipartite() && n > 0.0 {
        let radicand = (n - 2.0) * (2.0 * m - 8.0 * m * m / (n * n));
        (radicand >= 0.0).then(|| 4.0 * m / n + radicand.sqrt())
    } else {
        None
    };
    Ok(EnergyBounds { lower, upper, bipartite_upper })
}

/// Molecular families with a closed-form adjacency spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// Linear polyacene with `N` fused rings.
    Polyacene(usize),
}

impl Family {
    pub fn graph(self) -> Graph {
        match self {
            Family::Path(n) => Graph::path(n),
            Family::Cycle(n) => Graph::cycle(n),
            Family::Polyacene(rings) => Graph::polyacene(rings),
        }
    }
}

/// Closed-form eigenvalues, sorted descending.
pub fn closed_form_spectrum(family: Family) -> Vec<f64> {
    let mut out: Vec<f64> = match family {
        Family::Path(n) => {
            (1..=n).map(|j| 2.0 * (PI * j as f64 / (n as f64 + 1.0)).cos()).collect()
        }
        Family::Cycle(n) => (1..=n).map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos()).collect(),
        Family::Polyacene(rings) => {
            let mut v = vec![1.0, -1.0];
            for k in 1..=rings {
                let root = (9.0 + 8.0 * (k as f64 * PI / (rings as f64 + 1.0)).cos()).sqrt();
                for outer in [1.0, -1.0] {
                    for inner in [1.0, -1.0] {
                        v.push(outer * 0.5 * (1.0 + inner * root));
                    }
                }
            }
            v
        }
    };
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

fn zero_tolerance(a: &DMatrix<f64>) -> f64 {
    GROUPING_TOL * a.norm().max(1.0)
}

/// Multiplicity of the zero adjacency eigenvalue.
pub fn nullity(g: &Graph) -> Result<usize> {
    let a = g.adjacency_matrix();
    let tol = zero_tolerance(&a);
    Ok(eig_symmetric(&a)?.eigenvalues.iter().filter(|l| l.abs() <= tol).count())
}

/// Graph classes for which `η = n − 2M` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingClass {
    /// Trees and forests.
    Tree,
    /// Bipartite graphs with no cycle of length divisible by four.
    Bipartite,
    /// Benzenoid (hexagonal) systems; 4s-cycles are allowed.
    Benzenoid,
}

/// Limit on the DFS steps spent searching for 4s-cycles.
const CYCLE_SEARCH_LIMIT: u128 = 20_000_000;

/// `η = n − 2M` for the given class, after checking membership.
pub fn nullity_via_matching(g: &Graph, class: MatchingClass) -> Result<usize> {
    g.require_undirected()?;
    match class {
        MatchingClass::Tree => {
            if g.girth() != Girth::Acyclic {
                return Err(Error::NotAForest);
            }
        }
        MatchingClass::Bipartite => {
            g.bipartition()?;
            if has_cycle_length_multiple_of_four(g)? {
                return Err(Error::CycleOfLength4s);
            }
        }
        MatchingClass::Benzenoid => {
            g.bipartition()?;
        }
    }
    Ok(g.n() - 2 * g.maximum_matching()?.size)
}

/// `η = n − 2 rank(B)` for bipartite graphs, with `B` the `|V1| × |V2|`
/// block of the adjacency matrix that joins the two colour classes.
pub fn nullity_via_incidence_rank(g: &Graph) -> Result<usize> {
    g.require_undirected()?;
    let parts = g.bipartition()?;
    let a = g.adjacency_matrix();
    let b = DMatrix::from_fn(parts.left.len(), parts.right.len(), |i, j| {
        a[(parts.left[i], parts.right[j])]
    });
    let rank = if b.is_empty() { 0 } else { b.rank(zero_tolerance(&a)) };
    Ok(g.n() - 2 * rank)
}

/// Exhaustive search for a simple cycle whose length is a multiple of four.
fn has_cycle_length_multiple_of_four(g: &Graph) -> Result<bool> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.simple_neighbors(u)).collect();
    let mut steps: u128 = 0;
    let mut on_path = vec![false; n];
    for start in 0..n {
        // Cycles are rooted at their smallest node.
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        on_path[start] = true;
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            steps += 1;
            if steps > CYCLE_SEARCH_LIMIT {
                return Err(Error::TooLarge {
                    what: "cycle search",
                    size: steps,
                    limit: CYCLE_SEARCH_LIMIT,
                });
            }
            if let Some(&v) = adj[u].get(*pos) {
                *pos += 1;
                let len = stack.len();
                if v == start && len >= 3 && len.is_multiple_of(4) {
                    for &(w, _) in &stack {
                        on_path[w] = false;
                    }
                    return Ok(true);
                }
                if v > start && !on_path[v] {
                    on_path[v] = true;
                    stack.push((v, 0));
                }
            } else {
                on_path[u] = false;
                stack.pop();
            }
        }
    }
    Ok(false)
}

/// Upper bounds on the nullity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NullityBounds {
    /// Girth bound exactly as usually printed: `n − 2g + 2` when `g ≡ 0
    /// (mod 4)`, else `n − 2g`. It fails on `C4`, so it is reported only.
    pub girth_printed: Option<i64>,
    /// Girth bound in the Cheng-Liu form: `n − g + 2` when `g ≡ 0 (mod 4)`,
    /// else `n − g`.
    pub girth: Option<i64>,
    /// Tightest path-distance bound over all connected pairs.
    pub path: i64,
    /// Diameter bound; connected graphs only.
    pub diameter: Option<i64>,
}

fn parity_bound(n: i64, d: i64) -> i64 {
    if d % 2 == 0 {
        n - d
    } else {
        n - d - 1
    }
}

pub fn nullity_bounds(g: &Graph) -> Result<NullityBounds> {
    g.require_undirected()?;
    let n = g.n() as i64;
    let (girth_printed, girth) = match g.girth() {
        Girth::Cycle(gi) => {
            let gi = gi as i64;
            if gi % 4 == 0 {
                (Some(n - 2 * gi + 2), Some(n - gi + 2))
            } else {
                (Some(n - 2 * gi), Some(n - gi))
            }
        }
        Girth::Acyclic => (None, None),
    };
    let dist = g.shortest_path_distances();
    let path = (0..g.n())
        .flat_map(|u| dist.row(u).iter().flatten().map(|&d| parity_bound(n, d as i64)))
        .min()
        .unwrap_or(n);
    let diameter = g.diameter().ok().map(|d| parity_bound(n, d as i64));
    Ok(NullityBounds { girth_printed, girth, path, diameter })
}

/// The girth bound alone; errors on forests.
pub fn girth_nullity_bound(g: &Graph) -> Result<i64> {
    nullity_bounds(g)?.girth.ok_or(Error::Acyclic)
}

/// Ground-state total spin `||V1| − |V2|| / 2` of a connected bipartite
/// half-filled Hubbard graph.
pub fn lieb_total_spin(g: &Graph) -> Result<f64> {
    g.require_undirected()?;
    if g.n() % 2 == 1 {
        return Err(Error::OddNodeCount);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let parts = g.bipartition()?;
    Ok(parts.left.len().abs_diff(parts.right.len()) as f64 / 2.0)
}
