use std::collections::HashSet;

use rand::Rng;

use super::er::check_probability;
use super::{rng, Seed};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Watts-Strogatz small world: a ring where every node links to its `k/2`
/// nearest neighbours on each side, then each clockwise edge has its far
/// end moved to a uniformly random node with probability `p_rewire`.
///
/// Rewiring never creates loops or duplicate edges; an edge whose source is
/// already adjacent to every other node stays put.
pub fn watts_strogatz(n: usize, k: usize, p_rewire: f64, seed: Seed) -> Result<Graph> {
    check_probability(p_rewire)?;
    if !k.is_multiple_of(2) || k >= n {
        return Err(Error::BadK { k, n });
    }
    let mut present: HashSet<(usize, usize)> = HashSet::with_capacity(n * k / 2);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
    for j in 1..=k / 2 {
        for i in 0..n {
            let t = (i + j) % n;
            present.insert(key(i, t));
            edges.push((i, t));
        }
    }
    let mut degree = vec![k; n];
    if p_rewire > 0.0 {
        let mut r = rng(seed);
        for edge in edges.iter_mut() {
            let (i, old) = *edge;
            if !r.random_bool(p_rewire) || degree[i] >= n - 1 {
                continue;
            }
            let new = loop {
                let c = r.random_range(0..n);
                if c != i && !present.contains(&key(i, c)) {
                    break c;
                }
            };
            present.remove(&key(i, old));
            present.insert(key(i, new));
            degree[old] -= 1;
            degree[new] += 1;
            *edge = (i, new);
        }
    }
    Graph::from_pairs(n, &edges)
}

/// Mean clustering of the unrewired ring, `3(k-2)/(4(k-1))`.
pub fn ws_clustering(k: usize) -> f64 {
    let k = k as f64;
    3.0 * (k - 2.0) / (4.0 * (k - 1.0))
}

/// Approximate mean path length of the unrewired ring,
/// `(n-1)(n+k-1)/(2kn)`.
pub fn ws_path_length(n: usize, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    (n - 1.0) * (n + k - 1.0) / (2.0 * k * n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_matches_closed_forms() {
        for n in [9, 12, 30] {
            let g = watts_strogatz(n, 4, 0.0, 0).unwrap();
            assert_eq!(g.degrees(), vec![4; n]);
            assert!((g.clustering().unwrap().average - 0.5).abs() < 1e-12);
        }
        assert!((ws_clustering(4) - 0.5).abs() < 1e-15);
        assert!((ws_clustering(100_000) - 0.75).abs() < 1e-5);
        let g = watts_strogatz(20, 4, 0.0, 0).unwrap();
        let l = g.average_path_length().unwrap();
        assert!((l - ws_path_length(20, 4)).abs() / ws_path_length(20, 4) < 0.1);
    }

    #[test]
    fn rewiring_keeps_graph_simple_with_same_size() {
        for p in [0.1, 0.5, 1.0] {
            let g = watts_strogatz(50, 6, p, 3).unwrap();
            assert!(g.is_simple());
            assert_eq!(g.m(), 150);
        }
        let a = watts_strogatz(50, 6, 0.3, 9).unwrap();
        let b = watts_strogatz(50, 6, 0.3, 9).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn rewiring_shortens_paths() {
        let ring = watts_strogatz(200, 4, 0.0, 1).unwrap().average_path_length().unwrap();
        let small = watts_strogatz(200, 4, 0.2, 1).unwrap();
        if let Ok(l) = small.average_path_length() {
            assert!(l < 0.5 * ring);
        }
    }

    #[test]
    fn bad_k() {
        assert_eq!(watts_strogatz(10, 3, 0.0, 0), Err(Error::BadK { k: 3, n: 10 }));
        assert_eq!(watts_strogatz(4, 4, 0.0, 0), Err(Error::BadK { k: 4, n: 4 }));
    }
}
