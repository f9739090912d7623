//! Centrality measures against brute force and symmetry arguments.

mod common;

use common::rng;
use common::strategies::{connected, gnp};
use netphys::centrality::{betweenness, katz, pagerank, subgraph_centrality, WalkParity};
use netphys::spectral::{eigenvalues_symmetric, spectral_radius};
use netphys::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;

/// Every walk from `at` to `target` with exactly `left` more steps that
/// never repeats a node, pushed onto `out`.
fn paths_of_length(g: &Graph, at: usize, target: usize, left: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        if at == target {
            out.push(path.clone());
        }
        return;
    }
    for next in g.neighbors(at).collect::<Vec<_>>() {
        if !path.contains(&next) {
            path.push(next);
            paths_of_length(g, next, target, left - 1, path, out);
            path.pop();
        }
    }
}

fn brute_force_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let d = g.shortest_path_distances();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let Some(len) = d.get(s, t) else { continue };
            let mut paths = Vec::new();
            paths_of_length(g, s, t, len, &mut vec![s], &mut paths);
            let total = paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    bc[v] += 1.0 / total;
                }
            }
        }
    }
    bc
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betweenness_matches_path_enumeration(g in gnp(1, 8)) {
        let fast = betweenness(&g).scores;
        let slow = brute_force_betweenness(&g);
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!((a - b).abs() < 1e-9, "{:?} vs {:?}", fast, slow);
        }
    }

    #[test]
    fn katz_follows_degree_for_large_eta(g in gnp(2, 20)) {
        prop_assume!(g.m() > 0);
        let eta = 1000.0 * spectral_radius(&g.adjacency_matrix()).unwrap();
        let k = katz(&g, eta).unwrap().outgoing.scores;
        for u in 0..g.n() {
            for v in 0..g.n() {
                if g.degree(u) > g.degree(v) {
                    prop_assert!(k[u] > k[v]);
                }
            }
        }
    }

    #[test]
    fn pagerank_is_equivariant(g in gnp(1, 25), seed in any::<u64>()) {
        let perm = shuffled(g.n(), seed);
        let pi = pagerank(&g, 0.85, 1e-13).unwrap().scores;
        let moved = pagerank(&g.permuted(&perm), 0.85, 1e-13).unwrap().scores;
        prop_assert!((pi.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for v in 0..g.n() {
            prop_assert!((pi[v] - moved[perm[v]]).abs() < 1e-10);
        }
    }

    #[test]
    fn subgraph_centrality_sums_to_partition_function(g in connected(1, 25)) {
        let total: f64 = subgraph_centrality(&g, WalkParity::Total).unwrap().scores.iter().sum();
        let z: f64 = eigenvalues_symmetric(&g.adjacency_matrix()).unwrap().iter().map(|l| l.exp()).sum();
        prop_assert!((total - z).abs() < 1e-9 * z);
        let odd: f64 = subgraph_centrality(&g, WalkParity::Odd).unwrap().scores.iter().sum();
        let even: f64 = subgraph_centrality(&g, WalkParity::Even).unwrap().scores.iter().sum();
        prop_assert!((odd + even - total).abs() < 1e-9 * z);
    }
}
