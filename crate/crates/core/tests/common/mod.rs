//! Random graph generators and reference values shared by the integration
//! tests. Everything here avoids the library's own generators so the tests
//! do not grade the code with itself.

#![allow(dead_code)]

use netphys::symanzik::{FeynmanEdge, FeynmanGraph, Leg, Monomial, MultivariatePolynomial as Poly, Var};
use netphys::{Edge, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniform labelled tree on `n >= 2` nodes from a random Prüfer sequence.
pub fn random_tree(n: usize, r: &mut impl Rng) -> Graph {
    assert!(n >= 2);
    if n == 2 {
        return Graph::from_pairs(2, &[(0, 1)]).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| r.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_pairs(n, &edges).unwrap()
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, r: &mut impl Rng) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let tree = random_tree(n, r);
    let mut pairs: Vec<(usize, usize)> =
        tree.edges().iter().map(|e| (e.source.min(e.target), e.source.max(e.target))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !pairs.contains(&(i, j)) && r.random_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_pairs(n, &pairs).unwrap()
}

/// Random connected graph with positive edge weights in `[0.5, 3)`.
pub fn random_weighted_connected(n: usize, p: f64, r: &mut impl Rng) -> Graph {
    let g = random_connected(n, p, r);
    let edges: Vec<Edge> =
        g.edges().iter().map(|e| Edge::weighted(e.source, e.target, r.random_range(0.5..3.0))).collect();
    Graph::build(n, edges, false, true).unwrap()
}

pub fn random_gnp(n: usize, p: f64, r: &mut impl Rng) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.random_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_pairs(n, &pairs).unwrap()
}

/// Random bipartite graph between `0..a` and `a..a+b`, nodes shuffled.
pub fn random_bipartite(a: usize, b: usize, p: f64, r: &mut impl Rng) -> Graph {
    let mut label: Vec<usize> = (0..a + b).collect();
    label.shuffle(r);
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            if r.random_bool(p) {
                pairs.push((label[i], label[j]));
            }
        }
    }
    Graph::from_pairs(a + b, &pairs).unwrap()
}

/// Random digraph in which roughly a fifth of the nodes have no out-arcs.
pub fn random_digraph_with_dangling(n: usize, p: f64, r: &mut impl Rng) -> Graph {
    let dangling: Vec<bool> = (0..n).map(|i| i == 0 || r.random_bool(0.2)).collect();
    let mut arcs = Vec::new();
    for u in 0..n {
        if dangling[u] {
            continue;
        }
        for v in 0..n {
            if u != v && r.random_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::from_arcs(n, &arcs).unwrap()
}

/// Matching number of a forest by repeatedly pairing a leaf with its parent.
pub fn forest_matching_number(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut size = 0;
    loop {
        let Some(leaf) = (0..n).find(|&v| alive[v] && degree[v] == 1) else { break };
        let parent = g.neighbors(leaf).find(|&u| alive[u]).unwrap();
        size += 1;
        for v in [leaf, parent] {
            alive[v] = false;
            for u in g.neighbors(v) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
    }
    size
}

/// Two triangles sharing edge `x5`, with legs on the two far corners.
pub fn two_triangle_graph() -> FeynmanGraph {
    let pairs = [(0, 3), (0, 1), (1, 2), (2, 3), (0, 2)];
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(j, &(u, v))| FeynmanEdge { u, v, param: j as u32, mass: 0.0 })
        .collect();
    let legs = vec![Leg { node: 1, label: "p1".into() }, Leg { node: 3, label: "p2".into() }];
    FeynmanGraph::new(4, edges, legs).unwrap()
}

/// Sum of monomials in the 1-based `x` indices, each times the `extra`
/// variables.
pub fn poly(monomials: &[&[u32]], extra: &[Var]) -> Poly {
    let mut p = Poly::zero();
    for m in monomials {
        let mut powers: Vec<(Var, u32)> = m.iter().map(|&j| (Var::X(j - 1), 1)).collect();
        powers.extend(extra.iter().map(|&v| (v, 1)));
        p.add_term(Monomial::from_powers(powers), 1);
    }
    p
}

pub const U_EXPECTED: &[&[u32]] = &[&[1, 2], &[1, 3], &[1, 5], &[2, 4], &[2, 5], &[3, 4], &[3, 5], &[4, 5]];
pub const K_EXPECTED: &[&[u32]] =
    &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5], &[2, 3, 4], &[2, 4, 5], &[3, 4, 5]];
pub const F0_EXPECTED: &[&[u32]] =
    &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[1, 3, 5], &[1, 4, 5], &[2, 3, 4], &[2, 3, 5], &[2, 4, 5]];
pub const W2_EXPECTED: &[&[u32]] = &[&[1, 3], &[2, 3], &[1, 4], &[2, 4], &[1, 5], &[2, 5], &[3, 5], &[4, 5]];

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

pub mod strategies {
    use super::*;
    use proptest::prelude::*;

    pub fn gnp(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n, 0.0..1.0f64, any::<u64>()).prop_map(|(n, p, s)| random_gnp(n, p, &mut rng(s)))
    }

    pub fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n, 0.0..0.7f64, any::<u64>()).prop_map(|(n, p, s)| random_connected(n, p, &mut rng(s)))
    }

    pub fn weighted_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n, 0.0..0.7f64, any::<u64>())
            .prop_map(|(n, p, s)| random_weighted_connected(n, p, &mut rng(s)))
    }

    pub fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n.max(2)..=max_n, any::<u64>()).prop_map(|(n, s)| random_tree(n, &mut rng(s)))
    }

    pub fn bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
        (1..=max_side, 1..=max_side, 0.0..1.0f64, any::<u64>())
            .prop_map(|(a, b, p, s)| random_bipartite(a, b, p, &mut rng(s)))
    }
}
