use std::f64::consts::PI;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{rng, Seed, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::spectral;

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadProbability(p))
    }
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs is joined independently with
/// probability `p`.
///
/// Runs in `O(n + m)` by drawing geometric gaps between successive edges
/// (Batagelj-Brandes).
pub fn erdos_renyi(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    check_probability(p)?;
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let mut r = rng(seed);
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::new();
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let u: f64 = r.random();
        w += 1 + ((1.0 - u).ln() / log_q).floor() as i64;
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push(Edge::new(w as usize, v));
        }
    }
    Graph::build(n, edges, false, true)
}

/// Percolation regime of `G(n, p)` by mean degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Subcritical,
    Critical,
    Supercritical,
}

/// Closed-form expectations for `G(n, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErTheory {
    pub n: usize,
    pub p: f64,
    pub expected_edges: f64,
    pub expected_degree: f64,
    /// `(ln n - γ)/ln(pn) + 1/2`; `None` when `pn <= 1`.
    pub avg_path_estimate: Option<f64>,
    pub clustering: f64,
    pub regime: Regime,
    /// Giant-component fraction `f` solving `e^{-k̄f} = 1 - f`.
    pub giant_fraction: f64,
}

pub fn er_theory(n: usize, p: f64) -> Result<ErTheory> {
    check_probability(p)?;
    if n < 2 {
        return Err(Error::BadParams(format!("need at least two nodes, got {n}")));
    }
    let nf = n as f64;
    let k = (nf - 1.0) * p;
    let regime = if (k - 1.0).abs() <= 1e-12 {
        Regime::Critical
    } else if k < 1.0 {
        Regime::Subcritical
    } else {
        Regime::Supercritical
    };
    let pn = p * nf;
    Ok(ErTheory {
        n,
        p,
        expected_edges: nf * (nf - 1.0) * p / 2.0,
        expected_degree: k,
        avg_path_estimate: (pn > 1.0).then(|| (nf.ln() - EULER_GAMMA) / pn.ln() + 0.5),
        clustering: p,
        regime,
        giant_fraction: giant_fraction(k),
    })
}

/// Positive root of `1 - f - e^{-kf}` by bisection, or 0 when `k <= 1`.
pub(crate) fn giant_fraction(k: f64) -> f64 {
    if k <= 1.0 {
        return 0.0;
    }
    // expm1 keeps the sign right for tiny f just above 1.
    let h = |f: f64| -f - (-k * f).exp_m1();
    let (mut lo, mut hi) = (f64::MIN_POSITIVE, 1.0);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Semicircle density of `G(n, p)` adjacency eigenvalues with radius
/// `2r`, `r = √(np(1-p))`.
pub fn wigner_density(lambda: f64, n: usize, p: f64) -> f64 {
    let r = semicircle_scale(n, p);
    let x = lambda / r;
    if x.abs() >= 2.0 {
        0.0
    } else {
        (4.0 - x * x).sqrt() / (2.0 * PI * r)
    }
}

fn semicircle_scale(n: usize, p: f64) -> f64 {
    (n as f64 * p * (1.0 - p)).sqrt()
}

/// Cumulative semicircle distribution at `lambda` for scale `r`.
pub fn semicircle_cdf(lambda: f64, r: f64) -> f64 {
    let x = (lambda / r).clamp(-2.0, 2.0);
    0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (x / 2.0).asin() / PI
}

/// Pooled bulk spectrum of a sample of graphs (each graph's largest
/// adjacency eigenvalue dropped) and its histogram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralDensity {
    /// Pooled eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub lo: f64,
    pub hi: f64,
    /// Normalised histogram heights over equal bins spanning `[lo, hi]`.
    pub density: Vec<f64>,
}

impl SpectralDensity {
    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.density.len() as f64
    }

    pub fn bin_centres(&self) -> Vec<f64> {
        let w = self.bin_width();
        (0..self.density.len()).map(|i| self.lo + (i as f64 + 0.5) * w).collect()
    }
}

pub fn empirical_spectral_density(graphs: &[Graph], bins: usize) -> Result<SpectralDensity> {
    if bins == 0 {
        return Err(Error::BadParams("histogram needs at least one bin".into()));
    }
    let mut eigenvalues = Vec::new();
    for g in graphs {
        let vals = spectral::eigenvalues_symmetric(&g.adjacency_matrix())?;
        eigenvalues.extend(vals.into_iter().skip(1));
    }
    eigenvalues.sort_by(f64::total_cmp);
    let (lo, hi) = match (eigenvalues.first(), eigenvalues.last()) {
        (Some(&lo), Some(&hi)) if hi > lo => (lo, hi),
        (Some(&x), _) => (x - 0.5, x + 0.5),
        _ => return Err(Error::BadParams("no eigenvalues to histogram".into())),
    };
    let width = (hi - lo) / bins as f64;
    let mut density = vec![0.0; bins];
    for &x in &eigenvalues {
        let i = (((x - lo) / width) as usize).min(bins - 1);
        density[i] += 1.0;
    }
    let total = eigenvalues.len() as f64 * width;
    density.iter_mut().for_each(|d| *d /= total);
    Ok(SpectralDensity { eigenvalues, lo, hi, density })
}

/// Kolmogorov-Smirnov distance between sorted samples and the semicircle law
/// of `G(n, p)`.
pub fn semicircle_ks_distance(sorted: &[f64], n: usize, p: f64) -> f64 {
    let r = semicircle_scale(n, p);
    let len = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = semicircle_cdf(x, r);
            (f - i as f64 / len).abs().max((f - (i + 1) as f64 / len).abs())
        })
        .fold(0.0, f64::max)
}
