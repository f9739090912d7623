use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{rng, Seed, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Preferential-attachment construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaVariant {
    /// Start from `K_{d+1}` and attach each new node to `d` distinct
    /// existing nodes chosen with probability proportional to degree.
    Growth,
    /// Bollobás-Riordan linearised chord diagram: grow `nd` nodes with
    /// `d = 1` (self-attachment allowed), then merge runs of `d` consecutive
    /// nodes. Loops and parallel edges are kept unless `simplify` is set.
    BollobasRiordan { simplify: bool },
}

/// Barabási-Albert scale-free graph with `n` nodes and `d` edges per new
/// node.
pub fn barabasi_albert(n: usize, d: usize, seed: Seed, variant: BaVariant) -> Result<Graph> {
    if d == 0 || n <= d {
        return Err(Error::BadParams(format!("need n > d >= 1, got n = {n}, d = {d}")));
    }
    let mut r = rng(seed);
    match variant {
        BaVariant::Growth => growth(n, d, &mut r),
        BaVariant::BollobasRiordan { simplify } => bollobas_riordan(n, d, simplify, &mut r),
    }
}

fn growth(n: usize, d: usize, r: &mut impl Rng) -> Result<Graph> {
    let m0 = d + 1;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m0 * d / 2 + (n - m0) * d);
    // One entry per edge end, so a uniform pick is degree-proportional.
    let mut ends: Vec<usize> = Vec::with_capacity(2 * edges.capacity());
    for i in 0..m0 {
        for j in i + 1..m0 {
            edges.push((i, j));
            ends.extend([i, j]);
        }
    }
    let mut targets = HashSet::with_capacity(d);
    let mut chosen = Vec::with_capacity(d);
    for v in m0..n {
        targets.clear();
        chosen.clear();
        while chosen.len() < d {
            let t = ends[r.random_range(0..ends.len())];
            if targets.insert(t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            ends.extend([t, v]);
        }
    }
    Graph::from_pairs(n, &edges)
}

fn bollobas_riordan(n: usize, d: usize, simplify: bool, r: &mut impl Rng) -> Result<Graph> {
    let total = n * d;
    let mut ends: Vec<usize> = Vec::with_capacity(2 * total);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(total);
    for i in 0..total {
        // Node i's own half-edge counts once, giving weight 1/(1 + Σk).
        let pick = r.random_range(0..=ends.len());
        let t = if pick == ends.len() { i } else { ends[pick] };
        edges.push((t / d, i / d));
        ends.extend([t, i]);
    }
    if simplify {
        let mut kept: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        kept.sort_unstable();
        kept.dedup();
        Graph::from_pairs(n, &kept)
    } else {
        Graph::build(n, edges.into_iter().map(|(a, b)| Edge::new(a, b)), false, false)
    }
}

/// Asymptotic laws of `BA(n, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaTheory {
    pub n: usize,
    pub d: usize,
    /// `(d-1)/8 · ln²n / n`.
    pub clustering_estimate: f64,
    /// `(ln n - ln(d/2) - 1 - γ)/(ln ln n + ln(d/2)) + 3/2`.
    pub path_length_estimate: f64,
}

impl BaTheory {
    /// `p(k) = 2d(d+1)/(k(k+1)(k+2))` for `k >= d`, zero below. This
    /// constant makes the distribution sum to one.
    pub fn pk(&self, k: usize) -> f64 {
        self.pk_with_constant(k, 2.0 * (self.d * (self.d + 1)) as f64)
    }

    /// The same law with the constant `2d(d-1)`, which does not normalise and
    /// vanishes at `d = 1`. Kept for comparison.
    pub fn pk_printed(&self, k: usize) -> f64 {
        self.pk_with_constant(k, 2.0 * (self.d * (self.d - 1)) as f64)
    }

    /// Tail `P(k) = Σ_{k' >= k} p(k') = d(d+1)/(k(k+1))` for `k >= d`.
    pub fn ccdf(&self, k: usize) -> f64 {
        if k <= self.d {
            return 1.0;
        }
        let (d, k) = (self.d as f64, k as f64);
        d * (d + 1.0) / (k * (k + 1.0))
    }

    fn pk_with_constant(&self, k: usize, c: f64) -> f64 {
        if k < self.d {
            return 0.0;
        }
        let k = k as f64;
        c / (k * (k + 1.0) * (k + 2.0))
    }
}

pub fn ba_theory(n: usize, d: usize) -> Result<BaTheory> {
    if d == 0 || n < 2 {
        return Err(Error::BadParams(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    let (nf, df) = (n as f64, d as f64);
    let ln_n = nf.ln();
    let half = (df / 2.0).ln();
    Ok(BaTheory {
        n,
        d,
        clustering_estimate: (df - 1.0) / 8.0 * ln_n * ln_n / nf,
        path_length_estimate: (ln_n - half - 1.0 - EULER_GAMMA) / (ln_n.ln() + half) + 1.5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::er_theory;

    #[test]
    fn growth_basics() {
        let g = barabasi_albert(500, 3, 11, BaVariant::Growth).unwrap();
        assert!(g.is_simple());
        assert!(g.is_connected());
        assert_eq!(g.m(), 6 + (500 - 4) * 3);
        assert!(g.degrees().into_iter().all(|k| k >= 3));
        let again = barabasi_albert(500, 3, 11, BaVariant::Growth).unwrap();
        assert_eq!(g.edges(), again.edges());
    }

    #[test]
    fn bollobas_riordan_sizes() {
        let g = barabasi_albert(300, 2, 5, BaVariant::BollobasRiordan { simplify: false }).unwrap();
        assert_eq!(g.m(), 600);
        let s = barabasi_albert(300, 2, 5, BaVariant::BollobasRiordan { simplify: true }).unwrap();
        assert!(s.is_simple());
        assert!(s.m() <= 600);
        let one = barabasi_albert(50, 1, 5, BaVariant::BollobasRiordan { simplify: false }).unwrap();
        // with d = 1 every node sends exactly one edge, possibly to itself
        assert_eq!(one.m(), 50);
    }

    #[test]
    fn bad_params() {
        assert!(barabasi_albert(3, 3, 0, BaVariant::Growth).is_err());
        assert!(barabasi_albert(3, 0, 0, BaVariant::Growth).is_err());
    }

    #[test]
    fn theory_normalises() {
        for d in 1..6 {
            let t = ba_theory(1000, d).unwrap();
            // exact tail beyond the cutoff from the telescoping form
            let head: f64 = (d..100_000).map(|k| t.pk(k)).sum();
            assert!((head + t.ccdf(100_000) - 1.0).abs() < 1e-12);
        }
        assert_eq!(ba_theory(1000, 1).unwrap().pk_printed(5), 0.0);
        let t = ba_theory(1000, 2).unwrap();
        let ratio = t.pk(2000) / t.pk(1000);
        assert!((ratio - 0.125).abs() < 1e-3);
    }

    #[test]
    fn paths_shorter_than_er() {
        let t = ba_theory(10_000, 4).unwrap();
        assert!(t.path_length_estimate.is_finite() && t.path_length_estimate > 0.0);
        let er = er_theory(10_000, 8.0 / 9_999.0).unwrap();
        assert!(t.path_length_estimate < er.avg_path_estimate.unwrap());
    }
}
