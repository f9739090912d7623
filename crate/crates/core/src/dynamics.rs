//! Processes on a fixed graph: linear consensus, the synchronizability
//! eigenratio, and mean-field SIR/SIS epidemics.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    ConsensusContinuous,
    ConsensusDiscrete,
    Sir,
    Sis,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::ConsensusContinuous => "consensus_continuous",
            Model::ConsensusDiscrete => "consensus_discrete",
            Model::Sir => "sir",
            Model::Sis => "sis",
        }
    }
}

/// Sampled time series of per-node state.
///
/// `states[k]` holds the state at `times[k]`, stored component by component:
/// entries `c·n .. (c+1)·n` are component `components[c]` for every node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub model: Model,
    pub params: BTreeMap<String, f64>,
    /// Integrator step, or 1 for the discrete map.
    pub step: f64,
    pub n: usize,
    pub components: Vec<String>,
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
}

/// Final state and settling time of a trajectory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySummary {
    pub model: Model,
    pub params: BTreeMap<String, f64>,
    pub samples: usize,
    pub final_time: f64,
    /// Final value of each component, keyed by component name.
    pub final_state: BTreeMap<String, Vec<f64>>,
    /// Earliest sample from which every later state stays within the
    /// tolerance of the final state.
    pub convergence_time: Option<f64>,
    pub tolerance: f64,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Component `c` at sample `k`.
    pub fn component(&self, k: usize, c: usize) -> &[f64] {
        &self.states[k][c * self.n..(c + 1) * self.n]
    }

    /// Component named `name` at sample `k`.
    pub fn component_by_name(&self, k: usize, name: &str) -> Option<&[f64]> {
        let c = self.components.iter().position(|s| s == name)?;
        Some(self.component(k, c))
    }

    pub fn final_state(&self) -> &[f64] {
        self.states.last().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn summary(&self, tolerance: f64) -> TrajectorySummary {
        let last = self.final_state();
        let settled = self
            .states
            .iter()
            .rposition(|s| s.iter().zip(last).any(|(a, b)| (a - b).abs() >= tolerance))
            .map_or(Some(0), |k| (k + 1 < self.len()).then_some(k + 1));
        let final_state = self
            .components
            .iter()
            .enumerate()
            .map(|(c, name)| (name.clone(), self.component(self.len() - 1, c).to_vec()))
            .collect();
        TrajectorySummary {
            model: self.model,
            params: self.params.clone(),
            samples: self.len(),
            final_time: *self.times.last().unwrap_or(&0.0),
            final_state,
            convergence_time: settled.map(|k| self.times[k]),
            tolerance,
        }
    }

    /// Long-format CSV with one row per time and node:
    /// `time,node,<component>...`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("time,node");
        for c in &self.components {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (t, state) in self.times.iter().zip(&self.states) {
            for i in 0..self.n {
                write!(out, "{t:.16e},{i}").unwrap();
                for c in 0..self.components.len() {
                    write!(out, ",{:.16e}", state[c * self.n + i]).unwrap();
                }
                out.push('\n');
            }
        }
        out
    }
}

fn time_grid(t_end: f64, dt: f64) -> Result<(usize, f64)> {
    if !(dt > 0.0 && dt.is_finite()) || !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::BadParams(format!("need dt > 0 and t_end >= 0, got dt = {dt}, t_end = {t_end}")));
    }
    // Uniform steps that land exactly on t_end.
    let steps = ((t_end / dt) - 1e-9).ceil().max(0.0) as usize;
    let h = if steps == 0 { dt } else { t_end / steps as f64 };
    Ok((steps, h))
}

fn check_len(what: &str, v: &[f64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::BadInitialState(format!("{what} has {} entries for {n} nodes", v.len())));
    }
    if let Some(x) = v.iter().find(|x| !x.is_finite()) {
        return Err(Error::BadInitialState(format!("{what} contains {x}")));
    }
    Ok(())
}

/// `φ̇ = -Lφ`, solved exactly in the Laplacian eigenbasis and sampled every
/// `dt` up to `t_end`.
///
/// The total `Σφ_i` is conserved and each connected component relaxes to
/// its own mean.
pub fn consensus_continuous(g: &Graph, phi0: &[f64], t_end: f64, dt: f64) -> Result<Trajectory> {
    g.require_undirected()?;
    check_len("phi0", phi0, g.n())?;
    let (steps, h) = time_grid(t_end, dt)?;
    let spec = spectral::eig_symmetric(&g.laplacian_matrix()?)?;
    let u = &spec.eigenvectors;
    let coeffs = u.transpose() * DVector::from_column_slice(phi0);
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let t = if k == steps { t_end } else { k as f64 * h };
        let decayed = DVector::from_iterator(
            coeffs.len(),
            coeffs.iter().zip(&spec.eigenvalues).map(|(c, mu)| c * (-mu.max(0.0) * t).exp()),
        );
        times.push(t);
        states.push((u * decayed).as_slice().to_vec());
    }
    Ok(Trajectory {
        model: Model::ConsensusContinuous,
        params: BTreeMap::from([("t_end".into(), t_end), ("dt".into(), dt)]),
        step: h,
        n: g.n(),
        components: vec!["phi".into()],
        times,
        states,
    })
}

/// Perron matrix `P = I - εL`. Doubly stochastic and nonnegative for
/// `0 < ε < 1/δ_max`.
pub fn perron_matrix(g: &Graph, epsilon: f64) -> Result<DMatrix<f64>> {
    g.require_undirected()?;
    let l = g.laplacian_matrix()?;
    let max_degree = l.diagonal().iter().copied().fold(0.0, f64::max);
    if epsilon.is_nan() || epsilon <= 0.0 || (max_degree > 0.0 && epsilon * max_degree >= 1.0) {
        return Err(Error::BadEpsilon { epsilon, max_degree });
    }
    Ok(DMatrix::identity(g.n(), g.n()) - l * epsilon)
}

/// `φ(t+1) = Pφ(t)` for `steps` iterations.
pub fn consensus_discrete(g: &Graph, phi0: &[f64], epsilon: f64, steps: usize) -> Result<Trajectory> {
    let p = perron_matrix(g, epsilon)?;
    check_len("phi0", phi0, g.n())?;
    let mut phi = DVector::from_column_slice(phi0);
    let mut states = Vec::with_capacity(steps + 1);
    states.push(phi0.to_vec());
    for _ in 0..steps {
        phi = &p * phi;
        states.push(phi.as_slice().to_vec());
    }
    Ok(Trajectory {
        model: Model::ConsensusDiscrete,
        params: BTreeMap::from([("epsilon".into(), epsilon), ("steps".into(), steps as f64)]),
        step: 1.0,
        n: g.n(),
        components: vec!["phi".into()],
        times: (0..=steps).map(|k| k as f64).collect(),
        states,
    })
}

fn connected_laplacian_extremes(g: &Graph) -> Result<(f64, f64)> {
    g.require_undirected()?;
    if g.n() < 2 {
        return Err(Error::BadParams("eigenratio needs at least two nodes".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mu = spectral::eigenvalues_symmetric(&g.laplacian_matrix()?)?;
    // descending order: mu[n-1] ≈ 0, mu[n-2] = μ2
    Ok((mu[mu.len() - 2], mu[0]))
}

/// Eigenratio `Q = μ_max/μ_2` of the Laplacian. Small values favour
/// synchronization.
pub fn sync_eigenratio(g: &Graph) -> Result<f64> {
    let (mu2, mu_max) = connected_laplacian_extremes(g)?;
    Ok(mu_max / mu2)
}

/// Whether coupling strength `c` puts every nonzero Laplacian mode inside
/// the stability window `(α1, α2)` of the master stability function.
pub fn sync_verdict(g: &Graph, alpha1: f64, alpha2: f64, c: f64) -> Result<bool> {
    if !(alpha1 > 0.0 && alpha2 > alpha1) {
        return Err(Error::BadParams(format!("need alpha2 > alpha1 > 0, got {alpha1}, {alpha2}")));
    }
    let (mu2, mu_max) = connected_laplacian_extremes(g)?;
    Ok(c * mu2 > alpha1 && c * mu_max < alpha2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EpidemicParams {
    /// Transmission rate per contact.
    pub beta_spread: f64,
    pub gamma_recover: f64,
}

impl EpidemicParams {
    pub fn new(beta_spread: f64, gamma_recover: f64) -> Result<Self> {
        let p = Self { beta_spread, gamma_recover };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| x >= 0.0 && x.is_finite();
        if ok(self.beta_spread) && ok(self.gamma_recover) {
            Ok(())
        } else {
            Err(Error::BadParams(format!(
                "epidemic rates must be finite and nonnegative, got beta = {}, gamma = {}",
                self.beta_spread, self.gamma_recover
            )))
        }
    }

    /// Step below which the RK4 states stay inside `[0, 1]` in practice:
    /// `0.01/(β·δ_max + γ)`.
    pub fn stable_step(&self, g: &Graph) -> f64 {
        let rate = self.beta_spread * g.max_degree() as f64 + self.gamma_recover;
        if rate > 0.0 { 0.01 / rate } else { f64::INFINITY }
    }

    fn as_map(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([("beta".into(), self.beta_spread), ("gamma".into(), self.gamma_recover)])
    }
}

/// Sparse rows of the weighted adjacency matrix.
fn adjacency_rows(g: &Graph) -> Vec<Vec<(usize, f64)>> {
    let a = g.adjacency_matrix();
    (0..g.n())
        .map(|i| (0..g.n()).filter(|&j| a[(i, j)] != 0.0).map(|j| (j, a[(i, j)])).collect())
        .collect()
}

fn check_probabilities(parts: &[(&str, &[f64])], n: usize) -> Result<()> {
    for (name, v) in parts {
        check_len(name, v, n)?;
        if let Some(x) = v.iter().find(|x| !(-1e-12..=1.0 + 1e-12).contains(*x)) {
            return Err(Error::BadInitialState(format!("{name} has entry {x} outside [0, 1]")));
        }
    }
    for i in 0..n {
        let total: f64 = parts.iter().map(|(_, v)| v[i]).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::BadInitialState(format!("node {i}: compartments sum to {total}, not 1")));
        }
    }
    Ok(())
}

/// Classical fourth-order Runge-Kutta on a flat state vector.
fn rk4(
    y0: Vec<f64>,
    steps: usize,
    h: f64,
    t_end: f64,
    f: impl Fn(&[f64], &mut [f64]),
) -> (Vec<f64>, Vec<Vec<f64>>) {
    let len = y0.len();
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let (mut k1, mut k2, mut k3, mut k4) = (vec![0.0; len], vec![0.0; len], vec![0.0; len], vec![0.0; len]);
    let mut tmp = vec![0.0; len];
    let mut y = y0;
    times.push(0.0);
    states.push(y.clone());
    for k in 1..=steps {
        f(&y, &mut k1);
        tmp.iter_mut().zip(&y).zip(&k1).for_each(|((t, y), d)| *t = y + 0.5 * h * d);
        f(&tmp, &mut k2);
        tmp.iter_mut().zip(&y).zip(&k2).for_each(|((t, y), d)| *t = y + 0.5 * h * d);
        f(&tmp, &mut k3);
        tmp.iter_mut().zip(&y).zip(&k3).for_each(|((t, y), d)| *t = y + h * d);
        f(&tmp, &mut k4);
        for i in 0..len {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        times.push(if k == steps { t_end } else { k as f64 * h });
        states.push(y.clone());
    }
    (times, states)
}

/// Mean-field SIR: `ṡ = -βs(Ax)`, `ẋ = βs(Ax) - γx`, `ṙ = γx`, per node.
pub fn sir_integrate(
    g: &Graph,
    params: EpidemicParams,
    s0: &[f64],
    x0: &[f64],
    r0: &[f64],
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    params.validate()?;
    let n = g.n();
    check_probabilities(&[("s0", s0), ("x0", x0), ("r0", r0)], n)?;
    let (steps, h) = time_grid(t_end, dt)?;
    let rows = adjacency_rows(g);
    let EpidemicParams { beta_spread: b, gamma_recover: c } = params;
    let rhs = |y: &[f64], dy: &mut [f64]| {
        let (s, rest) = y.split_at(n);
        let x = &rest[..n];
        for i in 0..n {
            let force: f64 = rows[i].iter().map(|&(j, w)| w * x[j]).sum();
            let infection = b * s[i] * force;
            let recovery = c * x[i];
            dy[i] = -infection;
            dy[n + i] = infection - recovery;
            dy[2 * n + i] = recovery;
        }
    };
    let (times, states) = rk4([s0, x0, r0].concat(), steps, h, t_end, rhs);
    let mut p = params.as_map();
    p.extend([("t_end".into(), t_end), ("dt".into(), dt)]);
    Ok(Trajectory {
        model: Model::Sir,
        params: p,
        step: h,
        n,
        components: vec!["s".into(), "x".into(), "r".into()],
        times,
        states,
    })
}

/// Mean-field SIS: `ṡ = -βs(Ax) + γx`, `ẋ = βs(Ax) - γx`, per node.
pub fn sis_integrate(
    g: &Graph,
    params: EpidemicParams,
    s0: &[f64],
    x0: &[f64],
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    params.validate()?;
    let n = g.n();
    check_probabilities(&[("s0", s0), ("x0", x0)], n)?;
    let (steps, h) = time_grid(t_end, dt)?;
    let rows = adjacency_rows(g);
    let EpidemicParams { beta_spread: b, gamma_recover: c } = params;
    let rhs = |y: &[f64], dy: &mut [f64]| {
        let (s, x) = y.split_at(n);
        for i in 0..n {
            let force: f64 = rows[i].iter().map(|&(j, w)| w * x[j]).sum();
            let net = b * s[i] * force - c * x[i];
            dy[i] = -net;
            dy[n + i] = net;
        }
    };
    let (times, states) = rk4([s0, x0].concat(), steps, h, t_end, rhs);
    let mut p = params.as_map();
    p.extend([("t_end".into(), t_end), ("dt".into(), dt)]);
    Ok(Trajectory {
        model: Model::Sis,
        params: p,
        step: h,
        n,
        components: vec!["s".into(), "x".into()],
        times,
        states,
    })
}
