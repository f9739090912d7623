//! Resistance-distance metric properties and oscillator Green's functions.

mod common;

use common::rng;
use common::strategies::{connected, tree, weighted_connected};
use nalgebra::{DMatrix, DVector};
use netphys::electrical::{resistance_matrix, transition_probability, commute_time, ResistanceMethod, resistance_distance};
use netphys::oscillators::{classical_green_matrix, GreenForm, OscillatorParams};
use netphys::spectral::{eigenvalues_symmetric, resolvent};
use netphys::Graph;
use proptest::prelude::*;
use rand_distr::{Distribution, StandardNormal};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resistance_is_a_metric(g in weighted_connected(1, 20)) {
        let omega = resistance_matrix(&g).unwrap();
        let n = g.n();
        for x in 0..n {
            prop_assert!(omega.get(x, x).abs() < 1e-12);
            for y in 0..n {
                let xy = omega.get(x, y);
                prop_assert!((xy - omega.get(y, x)).abs() < 1e-12);
                if x != y {
                    prop_assert!(xy > 0.0);
                }
                for z in 0..n {
                    let (xz, yz) = (omega.get(x, z), omega.get(y, z));
                    prop_assert!(xz <= xy + yz + 1e-10);
                    // square roots of resistances obey the triangle inequality too
                    prop_assert!(xz.max(0.0).sqrt() <= xy.max(0.0).sqrt() + yz.max(0.0).sqrt() + 1e-10);
                }
            }
        }
    }

    #[test]
    fn resistance_bounded_by_hops(g in connected(2, 20)) {
        let omega = resistance_matrix(&g).unwrap();
        let d = g.shortest_path_distances();
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert!(omega.get(u, v) <= d.get(u, v).unwrap() as f64 + 1e-10);
            }
        }
    }

    #[test]
    fn resistance_equals_hops_on_trees(t in tree(2, 30)) {
        let omega = resistance_matrix(&t).unwrap();
        let d = t.shortest_path_distances();
        for u in 0..t.n() {
            for v in 0..t.n() {
                prop_assert!((omega.get(u, v) - d.get(u, v).unwrap() as f64).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn commute_time_and_transitions(g in weighted_connected(2, 15)) {
        let total: f64 = g.edges().iter().map(|e| e.weight).sum();
        for u in 0..g.n() {
            let out: f64 = (0..g.n()).map(|v| transition_probability(&g, u, v).unwrap()).sum();
            prop_assert!((out - 1.0).abs() < 1e-12);
            for v in 0..g.n() {
                let omega = resistance_distance(&g, u, v, ResistanceMethod::Spectral).unwrap();
                prop_assert!((commute_time(&g, u, v).unwrap() - 2.0 * total * omega).abs() < 1e-8 * (1.0 + total));
            }
        }
    }

    #[test]
    fn neumann_series_approaches_resolvent_from_below(g in connected(2, 15), extra in 0.1..3.0f64) {
        let a = g.adjacency_matrix();
        let k = eigenvalues_symmetric(&a).unwrap()[0] + extra;
        let limit = resolvent(&a, k).unwrap();
        let step = &a / k;
        let n = g.n();
        let mut term = DMatrix::<f64>::identity(n, n);
        let mut partial = term.clone();
        for _ in 0..60 {
            term = &term * &step;
            let next = &partial + &term;
            // nonnegative terms: entrywise monotone and below the limit
            prop_assert!(next.iter().zip(partial.iter()).all(|(b, a)| b >= a));
            prop_assert!(next.iter().zip(limit.iter()).all(|(s, l)| *s <= l + 1e-9 * l.abs().max(1.0)));
            partial = next;
        }
    }
}

/// Draws `x ~ exp(-βmω²/2 · xᵀ(KI − A)x)` and compares the sample second
/// moments with the closed-form Green's function.
#[test]
fn green_function_matches_gaussian_sampling() {
    let g = Graph::path(3);
    let params = OscillatorParams { mass: 0.7, omega: 1.1, k_ground: 3.0, beta: 1.3, ..Default::default() };
    let precision = (DMatrix::identity(3, 3) * params.k_ground - g.adjacency_matrix())
        * (params.beta * params.mass * params.omega.powi(2));
    let covariance = precision.try_inverse().unwrap();
    let chol = covariance.clone().cholesky().unwrap().l();
    let samples = 1_000_000;
    let mut r = rng(61);
    let mut moments = DMatrix::<f64>::zeros(3, 3);
    for _ in 0..samples {
        let z = DVector::from_fn(3, |_, _| StandardNormal.sample(&mut r));
        let x = &chol * z;
        moments += &x * x.transpose();
    }
    moments /= samples as f64;
    let green = classical_green_matrix(&g, &params, GreenForm::Adjacency).unwrap();
    for (i, (mc, exact)) in moments.iter().zip(green.iter()).enumerate() {
        assert!((mc - exact).abs() < 0.02 * exact.abs(), "entry {i}: sampled {mc}, closed form {exact}");
    }
    assert!((&covariance - &green).amax() < 1e-12);
}

/// Average number of steps to go from `u` to `v` and back, walking with the
/// library's transition probabilities.
fn simulated_commute(g: &Graph, u: usize, v: usize, walks: usize, seed: u64) -> f64 {
    use rand::Rng;
    let n = g.n();
    let table: Vec<Vec<f64>> =
        (0..n).map(|a| (0..n).map(|b| transition_probability(g, a, b).unwrap()).collect()).collect();
    let mut r = rng(seed);
    let mut step = |from: usize| {
        let mut x: f64 = r.random();
        for (to, &p) in table[from].iter().enumerate() {
            if x < p {
                return to;
            }
            x -= p;
        }
        n - 1
    };
    let mut total = 0usize;
    for _ in 0..walks {
        let (mut at, mut target, mut legs) = (u, v, 0);
        while legs < 2 {
            at = step(at);
            total += 1;
            if at == target {
                legs += 1;
                target = u;
            }
        }
    }
    total as f64 / walks as f64
}

#[test]
fn commute_time_matches_random_walks() {
    let c5 = Graph::cycle(5);
    let exact = commute_time(&c5, 0, 2).unwrap();
    assert!((exact - 12.0).abs() < 1e-12);
    let simulated = simulated_commute(&c5, 0, 2, 100_000, 5);
    assert!((simulated - exact).abs() < 0.05 * exact, "simulated {simulated}, exact {exact}");

    let weighted = Graph::build(
        4,
        [(0, 1, 1.0), (1, 2, 2.5), (2, 3, 0.5), (3, 0, 1.5), (0, 2, 1.0)].map(|(u, v, w)| netphys::Edge::weighted(u, v, w)),
        false,
        true,
    )
    .unwrap();
    let exact = commute_time(&weighted, 1, 3).unwrap();
    let simulated = simulated_commute(&weighted, 1, 3, 100_000, 6);
    assert!((simulated - exact).abs() < 0.05 * exact, "simulated {simulated}, exact {exact}");
}
