use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::multigraph::{Dsu, Multigraph};
use super::poly::BivariatePolynomial;

type Key = (usize, Vec<(u32, u32)>);

/// Tutte polynomial by deletion-contraction.
///
/// Loops and bridges are peeled off first; the remaining core is memoised on
/// a relabelled edge list, so isomorphic minors met along different branches
/// are only expanded once. Exponential in the cyclomatic number: keep
/// `m - n` within about twenty.
pub fn tutte_polynomial(g: &Multigraph) -> BivariatePolynomial {
    let mut memo = HashMap::new();
    tutte_rec(g.clone(), &mut memo)
}

fn tutte_rec(g: Multigraph, memo: &mut HashMap<Key, BivariatePolynomial>) -> BivariatePolynomial {
    let loops = g.edges.iter().filter(|(u, v)| u == v).count() as u32;
    let mut g = Multigraph { n: g.n, edges: g.edges.into_iter().filter(|(u, v)| u != v).collect() };
    let bridges = g.bridges();
    let b = bridges.len() as u32;
    if b > 0 {
        g = contract_all(&g, &bridges);
    }
    if g.edges.is_empty() {
        return BivariatePolynomial::monomial(1, b, loops);
    }
    let key = canonical(&g);
    let core = if let Some(t) = memo.get(&key) {
        t.clone()
    } else {
        let relabelled = Multigraph {
            n: key.0,
            edges: key.1.iter().map(|&(u, v)| (u as usize, v as usize)).collect(),
        };
        // The canonical order puts edges at high-degree nodes first.
        let e = 0;
        let deleted = tutte_rec(relabelled.delete_edge(e).expect("edge exists"), memo);
        let contracted = tutte_rec(relabelled.contract_edge(e).expect("edge exists"), memo);
        let t = deleted + contracted;
        memo.insert(key, t.clone());
        t
    };
    core.shift(b, loops)
}

fn contract_all(g: &Multigraph, bridges: &[usize]) -> Multigraph {
    let mut dsu = Dsu::new(g.n);
    for &e in bridges {
        let (u, v) = g.edges[e];
        dsu.union(u, v);
    }
    let mut label = vec![usize::MAX; g.n];
    let mut next = 0;
    for v in 0..g.n {
        let r = dsu.find(v);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
    }
    let mut is_bridge = vec![false; g.edges.len()];
    for &e in bridges {
        is_bridge[e] = true;
    }
    let edges = g
        .edges
        .iter()
        .zip(&is_bridge)
        .filter(|(_, &br)| !br)
        .map(|(&(u, v), _)| (label[dsu.find(u)], label[dsu.find(v)]))
        .collect();
    Multigraph { n: next, edges }
}

/// Drops isolated nodes and relabels the rest by iterated degree refinement.
/// Equal keys imply isomorphic graphs; the converse need not hold.
fn canonical(g: &Multigraph) -> Key {
    let n = g.n;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &g.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<usize> = adj[u].iter().map(|&v| colour[v]).collect();
                nb.sort_unstable();
                (colour[u], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        // Higher degree (and richer neighbourhood) first.
        colour = signatures
            .iter()
            .map(|s| distinct.len() - 1 - distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut order: Vec<usize> = (0..n).filter(|&u| !adj[u].is_empty()).collect();
    order.sort_by_key(|&u| (colour[u], u));
    let mut label = vec![u32::MAX; n];
    for (i, &u) in order.iter().enumerate() {
        label[u] = i as u32;
    }
    let mut edges: Vec<(u32, u32)> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    (order.len(), edges)
}

/// Counting evaluations of the Tutte polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteEvaluations {
    /// `T(1, 1)`; spanning forests with one tree per component.
    pub spanning_trees: i128,
    /// `T(2, 1)`.
    pub spanning_forests: i128,
    /// `T(1, 2)`.
    pub connected_spanning_subgraphs: i128,
    /// `T(2, 2) = 2^m`.
    pub subgraph_count: i128,
}

pub fn tutte_evaluations(t: &BivariatePolynomial) -> TutteEvaluations {
    TutteEvaluations {
        spanning_trees: t.evaluate_int(1, 1),
        spanning_forests: t.evaluate_int(2, 1),
        connected_spanning_subgraphs: t.evaluate_int(1, 2),
        subgraph_count: t.evaluate_int(2, 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mg(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn small_tutte_polynomials() {
        let c4 = mg(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(tutte_polynomial(&c4).to_string(), "x^3 + x^2 + x + y");
        assert_eq!(tutte_polynomial(&mg(2, &[(0, 1)])).to_string(), "x");
        assert_eq!(tutte_polynomial(&mg(1, &[(0, 0)])).to_string(), "y");
        assert_eq!(tutte_polynomial(&mg(3, &[])).to_string(), "1");
        let k3 = mg(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(tutte_polynomial(&k3).to_string(), "x^2 + x + y");
        // K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
        let k4 = mg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            tutte_polynomial(&k4).to_string(),
            "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y"
        );
        let digon = mg(2, &[(0, 1), (0, 1)]);
        assert_eq!(tutte_polynomial(&digon).to_string(), "x + y");
    }

    #[test]
    fn evaluations() {
        let c4 = mg(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let ev = tutte_evaluations(&tutte_polynomial(&c4));
        assert_eq!(ev.spanning_trees, 4);
        assert_eq!(ev.subgraph_count, 16);
        assert_eq!(ev.spanning_forests, 15);
        assert_eq!(ev.connected_spanning_subgraphs, 5);
        let k3 = mg(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(tutte_evaluations(&tutte_polynomial(&k3)).spanning_trees, 3);
    }
}
