//! Conservation laws and monotonicity of the dynamical models.

mod common;

use common::strategies::connected;
use netphys::dynamics::{consensus_continuous, consensus_discrete, sir_integrate, EpidemicParams};
use netphys::spectral::eigenvalues_symmetric;
use netphys::Graph;
use proptest::prelude::*;

fn laplacian_extremes(g: &Graph) -> (f64, f64) {
    let mu = eigenvalues_symmetric(&g.laplacian_matrix().unwrap()).unwrap();
    // descending order: the largest first, the algebraic connectivity second to last
    (mu[mu.len() - 2], mu[0])
}

fn initial_state(n: usize, values: &[f64]) -> Vec<f64> {
    (0..n).map(|i| values[i % values.len()]).collect()
}

fn disagreement(phi: &[f64]) -> f64 {
    let mean = phi.iter().sum::<f64>() / phi.len() as f64;
    phi.iter().map(|x| (x - mean).powi(2)).sum::<f64>().sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn consensus_conserves_the_total(g in connected(2, 20), values in prop::collection::vec(-5.0..5.0f64, 1..20)) {
        let phi0 = initial_state(g.n(), &values);
        let total: f64 = phi0.iter().sum();
        let run = consensus_continuous(&g, &phi0, 5.0, 0.25).unwrap();
        for k in 0..run.len() {
            let now: f64 = run.component(k, 0).iter().sum();
            prop_assert!((now - total).abs() < 1e-9 * (1.0 + total.abs()));
        }
    }

    #[test]
    fn discrete_disagreement_never_grows(
        g in connected(2, 20),
        values in prop::collection::vec(-5.0..5.0f64, 1..20),
        fraction in 0.05..0.95f64,
    ) {
        let max_degree = g.degrees().into_iter().max().unwrap() as f64;
        let phi0 = initial_state(g.n(), &values);
        let run = consensus_discrete(&g, &phi0, fraction / max_degree, 40).unwrap();
        let mut last = disagreement(&phi0);
        for k in 1..run.len() {
            let now = disagreement(run.component(k, 0));
            prop_assert!(now <= last + 1e-12);
            last = now;
        }
    }

    #[test]
    fn sir_keeps_each_node_a_probability(
        g in connected(2, 15),
        beta in 0.05..2.0f64,
        gamma in 0.05..1.0f64,
        seeded in prop::collection::vec(0.0..0.5f64, 1..15),
    ) {
        let params = EpidemicParams::new(beta, gamma).unwrap();
        let n = g.n();
        let x0 = initial_state(n, &seeded);
        let s0: Vec<f64> = x0.iter().map(|x| 1.0 - x).collect();
        let r0 = vec![0.0; n];
        let run = sir_integrate(&g, params, &s0, &x0, &r0, 10.0, params.stable_step(&g)).unwrap();
        for k in 0..run.len() {
            let (s, x, r) = (run.component(k, 0), run.component(k, 1), run.component(k, 2));
            for i in 0..n {
                prop_assert!((s[i] + x[i] + r[i] - 1.0).abs() < 1e-10);
                for value in [s[i], x[i], r[i]] {
                    prop_assert!((-1e-12..=1.0 + 1e-12).contains(&value), "{}", value);
                }
            }
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_the_spectrum_ends(g in connected(3, 18), pick in any::<prop::sample::Index>()) {
        let n = g.n();
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.source, e.target)).collect();
        pairs.push(missing[pick.index(missing.len())]);
        let denser = Graph::from_pairs(n, &pairs).unwrap();
        let (mu2, top) = laplacian_extremes(&g);
        let (mu2_after, top_after) = laplacian_extremes(&denser);
        prop_assert!(mu2_after >= mu2 - 1e-10);
        prop_assert!(top_after >= top - 1e-10);
    }
}
