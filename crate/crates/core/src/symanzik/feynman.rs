use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomials::Multigraph;

/// Internal line carrying Feynman parameter `x_{param}` and mass `m / μ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeynmanEdge {
    pub u: usize,
    pub v: usize,
    pub param: u32,
    pub mass: f64,
}

/// External leg attached to an internal node, carrying momentum `p_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub node: usize,
    pub label: String,
}

/// Scalar Feynman graph. Momentum conservation over the legs is assumed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeynmanGraph {
    n: usize,
    edges: Vec<FeynmanEdge>,
    legs: Vec<Leg>,
}

impl FeynmanGraph {
    pub fn new(n: usize, edges: Vec<FeynmanEdge>, legs: Vec<Leg>) -> Result<Self> {
        let mut params = HashSet::new();
        for e in &edges {
            for node in [e.u, e.v] {
                if node >= n {
                    return Err(Error::OutOfRange { node, n });
                }
            }
            if !params.insert(e.param) {
                return Err(Error::BadParams(format!("Feynman parameter x{} used twice", e.param + 1)));
            }
            if !e.mass.is_finite() {
                return Err(Error::BadParams(format!("edge x{} has a non-finite mass", e.param + 1)));
            }
        }
        let mut labels = HashSet::new();
        for leg in &legs {
            if leg.node >= n {
                return Err(Error::OutOfRange { node: leg.node, n });
            }
            if !labels.insert(leg.label.as_str()) {
                return Err(Error::BadParams(format!("momentum label {} used twice", leg.label)));
            }
        }
        Ok(FeynmanGraph { n, edges, legs })
    }

    /// Massless graph whose `j`-th (expanded) edge carries `x_{j+1}`, with
    /// legs `p1, p2, …` at the given nodes.
    pub fn from_graph(g: &Graph, leg_nodes: &[usize]) -> Result<Self> {
        let mg = Multigraph::from_graph(g)?;
        let edges = mg
            .edges
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| FeynmanEdge { u, v, param: j as u32, mass: 0.0 })
            .collect();
        let legs = leg_nodes
            .iter()
            .enumerate()
            .map(|(k, &node)| Leg { node, label: format!("p{}", k + 1) })
            .collect();
        FeynmanGraph::new(g.n(), edges, legs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[FeynmanEdge] {
        &self.edges
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn with_masses(mut self, masses: &[(u32, f64)]) -> Result<Self> {
        for &(param, mass) in masses {
            let e = self.edge_mut(param)?;
            e.mass = mass;
        }
        Ok(self)
    }

    fn edge_mut(&mut self, param: u32) -> Result<&mut FeynmanEdge> {
        self.edges.iter_mut().find(|e| e.param == param).ok_or(Error::NoSuchEdge(param as usize))
    }

    fn position(&self, param: u32) -> Result<usize> {
        self.edges.iter().position(|e| e.param == param).ok_or(Error::NoSuchEdge(param as usize))
    }

    pub(crate) fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    pub(crate) fn multigraph(&self) -> Multigraph {
        Multigraph { n: self.n, edges: self.pairs() }
    }

    pub fn component_count(&self) -> usize {
        self.multigraph().component_count()
    }

    /// Number of independent cycles `m − n + C`.
    pub fn loop_count(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    pub fn is_bridge_or_loop(&self, param: u32) -> Result<bool> {
        let pos = self.position(param)?;
        let mg = self.multigraph();
        Ok(mg.is_loop(pos) || mg.bridges().contains(&pos))
    }

    pub fn delete_edge(&self, param: u32) -> Result<FeynmanGraph> {
        let pos = self.position(param)?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(FeynmanGraph { n: self.n, edges, legs: self.legs.clone() })
    }

    /// Merges the endpoints of the edge; legs move with their node.
    pub fn contract_edge(&self, param: u32) -> Result<FeynmanGraph> {
        let pos = self.position(param)?;
        let (a, b) = (self.edges[pos].u, self.edges[pos].v);
        if a == b {
            return self.delete_edge(param);
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| match x.cmp(&gone) {
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
            std::cmp::Ordering::Less => x,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, e)| FeynmanEdge { u: relabel(e.u), v: relabel(e.v), ..e.clone() })
            .collect();
        let legs = self
            .legs
            .iter()
            .map(|l| Leg { node: relabel(l.node), label: l.label.clone() })
            .collect();
        Ok(FeynmanGraph { n: self.n - 1, edges, legs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_minors() {
        let g = Graph::cycle(3);
        let fg = FeynmanGraph::from_graph(&g, &[0, 1]).unwrap();
        assert_eq!(fg.loop_count(), 1);
        let contracted = fg.contract_edge(0).unwrap();
        assert_eq!(contracted.n(), 2);
        assert_eq!(contracted.legs()[1].node, 0);
        assert_eq!(contracted.loop_count(), 1);
        let deleted = fg.delete_edge(2).unwrap();
        assert_eq!(deleted.loop_count(), 0);
        assert!(deleted.is_bridge_or_loop(0).unwrap());
        assert!(!fg.is_bridge_or_loop(0).unwrap());
        assert_eq!(fg.delete_edge(7), Err(Error::NoSuchEdge(7)));
    }

    #[test]
    fn rejects_duplicate_labels() {
        let legs = vec![
            Leg { node: 0, label: "p".into() },
            Leg { node: 1, label: "p".into() },
        ];
        let edges = vec![FeynmanEdge { u: 0, v: 1, param: 0, mass: 0.0 }];
        assert!(matches!(FeynmanGraph::new(2, edges, legs), Err(Error::BadParams(_))));
    }
}
