use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Empirical degree distribution `p(k) = n(k)/n` with its tail
/// `P(k) = Σ_{k' >= k} p(k')`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeDistribution {
    /// `counts[k]` nodes have degree `k`.
    pub counts: Vec<u64>,
    pub total: u64,
}

impl DegreeDistribution {
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut counts: Vec<u64> = Vec::new();
        let mut total = 0;
        for k in degrees {
            if k >= counts.len() {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
            total += 1;
        }
        DegreeDistribution { counts, total }
    }

    /// Pools several samples, e.g. an ensemble of replicas.
    pub fn merge(&mut self, other: &DegreeDistribution) {
        if other.counts.len() > self.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        self.total += other.total;
    }

    pub fn max_degree(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    pub fn pmf(&self, k: usize) -> f64 {
        match self.counts.get(k) {
            Some(&c) if self.total > 0 => c as f64 / self.total as f64,
            _ => 0.0,
        }
    }

    pub fn ccdf(&self, k: usize) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let tail: u64 = self.counts.iter().skip(k).sum();
        tail as f64 / self.total as f64
    }

    /// `(k, p(k))` for every observed degree.
    pub fn support(&self) -> Vec<(usize, f64)> {
        (0..self.counts.len()).filter(|&k| self.counts[k] > 0).map(|k| (k, self.pmf(k))).collect()
    }

    /// `(k, P(k))` for every observed degree.
    pub fn cumulative(&self) -> Vec<(usize, f64)> {
        let mut tail = 0u64;
        let mut out = Vec::new();
        for k in (0..self.counts.len()).rev() {
            tail += self.counts[k];
            if self.counts[k] > 0 {
                out.push((k, tail as f64 / self.total as f64));
            }
        }
        out.reverse();
        out
    }

    pub fn mean(&self) -> f64 {
        let s: u64 = self.counts.iter().enumerate().map(|(k, &c)| k as u64 * c).sum();
        s as f64 / self.total as f64
    }
}

pub fn degree_distribution(g: &Graph) -> Result<DegreeDistribution> {
    if g.n() == 0 {
        return Err(Error::BadParams("empty node set".into()));
    }
    Ok(DegreeDistribution::from_degrees(g.degrees()))
}

/// Least-squares power law fitted to the log-log tail `P(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    /// Exponent of `p(k) ~ A k^{-γ}`, equal to one minus the tail slope.
    pub gamma: f64,
    /// Amplitude `A` of `p(k)` implied by the fitted tail.
    pub amplitude: f64,
    /// Slope of `ln P(k)` against `ln k`.
    pub ccdf_slope: f64,
    /// Intercept of `ln P(k)`.
    pub ccdf_intercept: f64,
    pub k_min: usize,
    pub k_max: usize,
    pub points: usize,
}

/// Fits every observed degree `k >= k_min`.
pub fn fit_power_law(dd: &DegreeDistribution, k_min: usize) -> Result<PowerLawFit> {
    fit_power_law_range(dd, k_min, usize::MAX)
}

/// Fits observed degrees in `[k_min, k_max]`.
pub fn fit_power_law_range(dd: &DegreeDistribution, k_min: usize, k_max: usize) -> Result<PowerLawFit> {
    let pts: Vec<(f64, f64)> = dd
        .cumulative()
        .into_iter()
        .filter(|&(k, _)| k >= k_min.max(1) && k <= k_max)
        .map(|(k, p)| ((k as f64).ln(), p.ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::DegenerateFit(pts.len()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let gamma = 1.0 - slope;
    let lo = pts.first().unwrap().0.exp().round() as usize;
    let hi = pts.last().unwrap().0.exp().round() as usize;
    Ok(PowerLawFit {
        gamma,
        amplitude: (gamma - 1.0) * intercept.exp(),
        ccdf_slope: slope,
        ccdf_intercept: intercept,
        k_min: lo,
        k_max: hi,
        points: pts.len(),
    })
}
