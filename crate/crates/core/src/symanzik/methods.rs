use serde::{Deserialize, Serialize};

use super::feynman::FeynmanGraph;
use super::forests::{forest_parts, spanning_forests};
use super::mpoly::{Monomial, MultivariatePolynomial as Poly, Var};
use crate::error::{Error, Result};

fn x(param: u32) -> Poly {
    Poly::var(Var::X(param))
}

fn require_connected(fg: &FeynmanGraph) -> Result<()> {
    if fg.component_count() > 1 {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// Product of the parameters of the edges at `positions`.
fn edge_monomial(fg: &FeynmanGraph, positions: impl Iterator<Item = usize>) -> Monomial {
    Monomial::from_powers(positions.map(|i| (Var::X(fg.edges()[i].param), 1)).collect())
}

fn complement(fg: &FeynmanGraph, chosen: &[usize]) -> Monomial {
    let mut inside = vec![false; fg.edges().len()];
    for &i in chosen {
        inside[i] = true;
    }
    edge_monomial(fg, (0..inside.len()).filter(|&i| !inside[i]))
}

/// First Symanzik polynomial as a sum over spanning trees of the product of
/// the parameters of the edges left out.
pub fn first_symanzik_trees(fg: &FeynmanGraph) -> Result<Poly> {
    require_connected(fg)?;
    let mut u = Poly::zero();
    for tree in spanning_forests(fg.n(), &fg.pairs(), 1)? {
        u.add_term(complement(fg, &tree), 1);
    }
    Ok(u)
}

/// Coefficient vector of `Σ_{k∈legs} p_k` over `p_1 … p_{t−1}` once the last
/// momentum is eliminated through `p_t = −Σ_{k<t} p_k`.
fn cut_momentum(in_set: &[bool]) -> Vec<i128> {
    let t = in_set.len();
    let last = in_set.last().copied().unwrap_or(false) as i128;
    (0..t.saturating_sub(1)).map(|k| in_set[k] as i128 - last).collect()
}

/// `P_A · P_B` in the `s_jk` basis.
fn momentum_product(a: &[i128], b: &[i128]) -> Poly {
    let mut out = Poly::zero();
    for (j, &cj) in a.iter().enumerate() {
        for (k, &ck) in b.iter().enumerate() {
            out.add_term(Monomial::var(Var::s(j as u32, k as u32)), cj * ck);
        }
    }
    out
}

/// Second Symanzik polynomial `(F0, F)` with `F = F0 + U Σ x_i M_i`, where
/// `M_i = m_i²/μ²` appears only for massive edges. The last external momentum
/// is eliminated by conservation.
pub fn second_symanzik(fg: &FeynmanGraph) -> Result<(Poly, Poly)> {
    require_connected(fg)?;
    let pairs = fg.pairs();
    let mut f0 = Poly::zero();
    for forest in spanning_forests(fg.n(), &pairs, 2)? {
        let (part0, _) = forest_parts(fg.n(), &pairs, &forest);
        let mut in_part0 = vec![false; fg.n()];
        for v in part0 {
            in_part0[v] = true;
        }
        let side_a: Vec<bool> = fg.legs().iter().map(|l| in_part0[l.node]).collect();
        let side_b: Vec<bool> = side_a.iter().map(|&s| !s).collect();
        let product = momentum_product(&cut_momentum(&side_a), &cut_momentum(&side_b));
        f0 = f0 + product.mul_monomial(&complement(fg, &forest));
    }
    let u = first_symanzik_trees(fg)?;
    let mut mass_sum = Poly::zero();
    for e in fg.edges().iter().filter(|e| e.mass != 0.0) {
        mass_sum = mass_sum + &x(e.param) * &Poly::var(Var::M(e.param));
    }
    let f = f0.clone() + &u * &mass_sum;
    Ok((f0, f))
}

/// Weighted Laplacian with entry `x_j` per edge; loops drop out.
pub fn symbolic_laplacian(fg: &FeynmanGraph) -> Vec<Vec<Poly>> {
    let n = fg.n();
    let mut l = vec![vec![Poly::zero(); n]; n];
    for e in fg.edges().iter().filter(|e| e.u != e.v) {
        let xe = x(e.param);
        l[e.u][e.u] = l[e.u][e.u].clone() + xe.clone();
        l[e.v][e.v] = l[e.v][e.v].clone() + xe.clone();
        l[e.u][e.v] = l[e.u][e.v].clone() - xe.clone();
        l[e.v][e.u] = l[e.v][e.u].clone() - xe;
    }
    l
}

/// Determinant over the integer polynomial ring by fraction-free (Bareiss)
/// elimination; every division is exact.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(1);
    }
    let mut sign = 1;
    let mut prev = Poly::constant(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(sign)
}

fn without(m: &[Vec<Poly>], drop: usize) -> Vec<Vec<Poly>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != drop)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != drop).map(|(_, p)| p.clone()).collect())
        .collect()
}

/// Kirchhoff polynomial `det L[i]`: spanning trees weighted by the product of
/// their edge parameters.
pub fn kirchhoff_polynomial(fg: &FeynmanGraph, drop: usize) -> Result<Poly> {
    if drop >= fg.n() {
        return Err(Error::OutOfRange { node: drop, n: fg.n() });
    }
    require_connected(fg)?;
    Ok(determinant(without(&symbolic_laplacian(fg), drop)))
}

/// `x_{p1} ⋯ x_{pk} · P(1/x)` for multilinear `P` in the parameters `params`.
pub fn invert_parameters(p: &Poly, params: &[u32]) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let mut powers: Vec<(Var, u32)> = Vec::new();
        for &j in params {
            match m.exponent(Var::X(j)) {
                0 => powers.push((Var::X(j), 1)),
                1 => {}
                _ => {
                    return Err(Error::BadParams(format!(
                        "polynomial is not multilinear in x{}",
                        j + 1
                    )))
                }
            }
        }
        for &(v, e) in m.powers() {
            match v {
                Var::X(j) if params.contains(&j) => {}
                _ => powers.push((v, e)),
            }
        }
        out.add_term(Monomial::from_powers(powers), c);
    }
    Ok(out)
}

/// `U = x_1 ⋯ x_m K(1/x_1, …, 1/x_m)`.
pub fn first_symanzik_from_kirchhoff(k: &Poly, m: usize) -> Result<Poly> {
    let params: Vec<u32> = (0..m as u32).collect();
    invert_parameters(k, &params)
}

/// The modified-Laplacian determinant `W = det(L + D)`, with `D_ii` the sum
/// of `z_j` over legs at node `i`, split by degree in the `z` variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModifiedLaplacian {
    pub w: Poly,
    /// `graded[i]` is `W^{(i)}`, homogeneous of degree `i` in the `z_j`.
    pub graded: Vec<Poly>,
    params: Vec<u32>,
    legs: usize,
}

fn is_z(v: Var) -> bool {
    matches!(v, Var::Z(_))
}

impl ModifiedLaplacian {
    /// Coefficient of `z_j` in `W^{(1)}`: a Kirchhoff polynomial.
    pub fn w1_coefficient(&self, j: usize) -> Poly {
        let z = Var::Z(j as u32);
        self.graded[1]
            .filter(|m| m.exponent(z) == 1)
            .substitute(|v| (v == z).then(|| Poly::constant(1)))
    }

    /// Coefficient of `z_j z_k` (`j ≠ k`) in `W^{(2)}`.
    pub fn w2_coefficient(&self, j: usize, k: usize) -> Poly {
        let (zj, zk) = (Var::Z(j as u32), Var::Z(k as u32));
        self.graded
            .get(2)
            .map(|w2| {
                w2.filter(|m| m.exponent(zj) == 1 && m.exponent(zk) == 1)
                    .substitute(|v| (v == zj || v == zk).then(|| Poly::constant(1)))
            })
            .unwrap_or_default()
    }

    /// First Symanzik polynomial from `W^{(1)}` via leg `j`.
    pub fn first_symanzik(&self, j: usize) -> Result<Poly> {
        invert_parameters(&self.w1_coefficient(j), &self.params)
    }

    /// `F0` from `W^{(2)}`, with the last momentum eliminated.
    pub fn second_symanzik_f0(&self) -> Result<Poly> {
        let mut raw = Poly::zero();
        for j in 0..self.legs {
            for k in j + 1..self.legs {
                let coeff = invert_parameters(&self.w2_coefficient(j, k), &self.params)?;
                raw = raw + coeff.mul_monomial(&Monomial::var(Var::s(j as u32, k as u32)));
            }
        }
        Ok(eliminate_last_momentum(&raw, self.legs))
    }
}

/// Rewrites `s_jk` using `p_t = −Σ_{k<t} p_k` for the last of `legs` momenta.
pub fn eliminate_last_momentum(p: &Poly, legs: usize) -> Poly {
    if legs == 0 {
        return p.clone();
    }
    let last = legs as u32 - 1;
    let rest = 0..last;
    p.substitute(|v| match v {
        Var::S(j, k) if k == last && j < last => {
            let mut out = Poly::zero();
            for i in rest.clone() {
                out.add_term(Monomial::var(Var::s(j, i)), -1);
            }
            Some(out)
        }
        Var::S(j, k) if j == last && k == last => {
            let mut out = Poly::zero();
            for a in rest.clone() {
                for b in rest.clone() {
                    out.add_term(Monomial::var(Var::s(a, b)), 1);
                }
            }
            Some(out)
        }
        _ => None,
    })
}

pub fn modified_laplacian_expansion(fg: &FeynmanGraph) -> Result<ModifiedLaplacian> {
    if fg.legs().is_empty() {
        return Err(Error::NoExternalLegs);
    }
    let mut l = symbolic_laplacian(fg);
    for (j, leg) in fg.legs().iter().enumerate() {
        let d = &mut l[leg.node][leg.node];
        *d = d.clone() + Poly::var(Var::Z(j as u32));
    }
    let w = determinant(l);
    let t = fg.legs().len();
    let by_degree = w.graded_by(is_z);
    let graded = (0..=t as u32).map(|d| by_degree.get(&d).cloned().unwrap_or_default()).collect();
    let params = fg.edges().iter().map(|e| e.param).collect();
    Ok(ModifiedLaplacian { w, graded, params, legs: t })
}

/// Checks `U(G) = U(G/e) + x_e U(G−e)` and the same for `F0`.
pub fn symanzik_deletion_contraction_check(fg: &FeynmanGraph, param: u32) -> Result<(bool, bool)> {
    if fg.is_bridge_or_loop(param)? {
        return Err(Error::BridgeOrLoop(param as usize));
    }
    let (del, con) = (fg.delete_edge(param)?, fg.contract_edge(param)?);
    let u_ok = first_symanzik_trees(fg)?
        == first_symanzik_trees(&con)? + &x(param) * &first_symanzik_trees(&del)?;
    let f0 = |g: &FeynmanGraph| second_symanzik(g).map(|(f0, _)| f0);
    let f_ok = f0(fg)? == f0(&con)? + &x(param) * &f0(&del)?;
    Ok((u_ok, f_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::symanzik::FeynmanEdge;

    fn triangle() -> FeynmanGraph {
        FeynmanGraph::from_graph(&Graph::cycle(3), &[0, 1]).unwrap()
    }

    #[test]
    fn one_loop_triangle() {
        let fg = triangle();
        assert_eq!(first_symanzik_trees(&fg).unwrap().to_string(), "x1 + x2 + x3");
        let k = kirchhoff_polynomial(&fg, 0).unwrap();
        assert_eq!(k.to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(first_symanzik_from_kirchhoff(&k, 3).unwrap().to_string(), "x1 + x2 + x3");
        for e in 0..3 {
            assert_eq!(symanzik_deletion_contraction_check(&fg, e).unwrap(), (true, true));
        }
    }

    #[test]
    fn bubble_second_polynomial() {
        let edges = vec![
            FeynmanEdge { u: 0, v: 1, param: 0, mass: 0.0 },
            FeynmanEdge { u: 0, v: 1, param: 1, mass: 0.0 },
        ];
        let legs = vec![
            super::super::Leg { node: 0, label: "p".into() },
            super::super::Leg { node: 1, label: "q".into() },
        ];
        let fg = FeynmanGraph::new(2, edges, legs).unwrap();
        let (f0, f) = second_symanzik(&fg).unwrap();
        assert_eq!(f0.to_string(), "-x1*x2*s11");
        assert_eq!(f0, f);
        let ml = modified_laplacian_expansion(&fg).unwrap();
        assert_eq!(ml.second_symanzik_f0().unwrap(), f0);
    }

    #[test]
    fn massive_tree() {
        let fg = FeynmanGraph::from_graph(&Graph::path(3), &[0, 0])
            .unwrap()
            .with_masses(&[(0, 1.0), (1, 2.0)])
            .unwrap();
        let (f0, f) = second_symanzik(&fg).unwrap();
        assert!(f0.is_zero());
        assert_eq!(f.to_string(), "x1*M1 + x2*M2");
        assert_eq!(first_symanzik_trees(&fg).unwrap(), Poly::constant(1));
    }

    #[test]
    fn single_edge() {
        let fg = FeynmanGraph::from_graph(&Graph::complete(2), &[0]).unwrap();
        let k = kirchhoff_polynomial(&fg, 1).unwrap();
        assert_eq!(k, x(0));
        assert_eq!(first_symanzik_from_kirchhoff(&k, 1).unwrap(), Poly::constant(1));
        assert_eq!(symanzik_deletion_contraction_check(&fg, 0), Err(Error::BridgeOrLoop(0)));
    }

    #[test]
    fn determinant_matches_numeric() {
        let m: Vec<Vec<Poly>> = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
            .iter()
            .map(|r| r.iter().map(|&c| Poly::constant(c)).collect())
            .collect();
        assert_eq!(determinant(m), Poly::constant(4));
        let needs_swap = vec![
            vec![Poly::zero(), Poly::constant(1)],
            vec![Poly::constant(1), Poly::zero()],
        ];
        assert_eq!(determinant(needs_swap), Poly::constant(-1));
    }

    #[test]
    fn modified_laplacian_requires_legs() {
        let fg = FeynmanGraph::from_graph(&Graph::cycle(3), &[]).unwrap();
        assert_eq!(modified_laplacian_expansion(&fg).unwrap_err(), Error::NoExternalLegs);
    }
}
