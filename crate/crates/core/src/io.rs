//! Plain-text edge lists.
//!
//! ```text
//! # directed: false
//! # weighted: true
//! # nodes: 4
//! # provenance: hand-written example
//! 0 1 2.5
//! 1 2 1
//! leg 0 p1
//! mass 1 0.5
//! ```
//!
//! Header lines have the form `# key: value` with keys `directed`, `weighted`,
//! `nodes` and `provenance`. Other lines starting with `#` that are not
//! `key: value` pairs are comments. Body lines are `u v [weight]` with 0-based
//! node ids, `leg <node> <label>` for an external leg, and
//! `mass <edge-index> <value>` for an internal mass. Anything else is
//! rejected with its line number.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::symanzik::{FeynmanEdge, FeynmanGraph, Leg};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeLine {
    pub u: usize,
    pub v: usize,
    pub weight: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct EdgeListDocument {
    pub directed: bool,
    pub weighted: bool,
    pub nodes: usize,
    pub provenance: Option<String>,
    pub edges: Vec<EdgeLine>,
    pub legs: Vec<Leg>,
    /// `(edge index, mass)` pairs.
    pub masses: Vec<(usize, f64)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_bool(line: usize, key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(parse_err(line, format!("{key} must be true or false, got {value:?}"))),
    }
}

fn parse_num<T: FromStr>(line: usize, what: &str, token: &str) -> Result<T> {
    token.parse().map_err(|_| parse_err(line, format!("invalid {what} {token:?}")))
}

fn parse_weight(line: usize, token: &str) -> Result<f64> {
    let w: f64 = parse_num(line, "weight", token)?;
    if !w.is_finite() {
        return Err(parse_err(line, format!("weight {token} is not finite")));
    }
    Ok(w)
}

fn header(text: &str) -> Option<(&str, &str)> {
    let (key, value) = text.split_once(':')?;
    let key = key.trim();
    let is_key = !key.is_empty() && key.chars().all(|c| c.is_ascii_lowercase() || c == '_');
    is_key.then(|| (key, value.trim()))
}

impl EdgeListDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc = EdgeListDocument::default();
        let mut directed = None;
        let mut weighted = None;
        let mut declared_nodes = None;
        let mut max_node: Option<usize> = None;
        let mut mass_lines = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                let Some((key, value)) = header(rest) else { continue };
                let duplicate = match key {
                    "directed" => directed.replace(parse_bool(line, key, value)?).is_some(),
                    "weighted" => weighted.replace(parse_bool(line, key, value)?).is_some(),
                    "nodes" => declared_nodes.replace(parse_num::<usize>(line, "node count", value)?).is_some(),
                    "provenance" => doc.provenance.replace(value.to_string()).is_some(),
                    _ => return Err(parse_err(line, format!("unknown header {key:?}"))),
                };
                if duplicate {
                    return Err(parse_err(line, format!("header {key:?} given twice")));
                }
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            match tokens.as_slice() {
                ["leg", node, label] => {
                    let node: usize = parse_num(line, "node id", node)?;
                    max_node = max_node.max(Some(node));
                    doc.legs.push(Leg { node, label: label.to_string() });
                }
                ["mass", edge, value] => {
                    let edge = parse_num(line, "edge index", edge)?;
                    let value = parse_weight(line, value)?;
                    if doc.masses.iter().any(|&(e, _)| e == edge) {
                        return Err(parse_err(line, format!("mass for edge {edge} given twice")));
                    }
                    mass_lines.push(line);
                    doc.masses.push((edge, value));
                }
                [u, v, rest @ ..] if rest.len() <= 1 && u.parse::<usize>().is_ok() => {
                    let u: usize = parse_num(line, "node id", u)?;
                    let v: usize = parse_num(line, "node id", v)?;
                    let weight = rest.first().map(|w| parse_weight(line, w)).transpose()?;
                    if weight.is_some() && weighted == Some(false) {
                        return Err(parse_err(line, "weight given in an unweighted edge list"));
                    }
                    max_node = max_node.max(Some(u.max(v)));
                    doc.edges.push(EdgeLine { u, v, weight });
                }
                _ => return Err(parse_err(line, format!("unrecognised line {trimmed:?}"))),
            }
        }
        let implied = max_node.map_or(0, |m| m + 1);
        doc.nodes = match declared_nodes {
            Some(n) if n < implied => {
                return Err(parse_err(last_line.max(1), format!("node id {} exceeds declared count {n}", implied - 1)));
            }
            Some(n) => n,
            None => implied,
        };
        if doc.nodes == 0 && doc.edges.is_empty() {
            return Err(parse_err(last_line.max(1), "empty edge list"));
        }
        for (&(edge, _), &line) in doc.masses.iter().zip(&mass_lines) {
            if edge >= doc.edges.len() {
                return Err(parse_err(line, format!("mass refers to edge {edge} but there are {}", doc.edges.len())));
            }
        }
        doc.directed = directed.unwrap_or(false);
        doc.weighted = weighted.unwrap_or_else(|| doc.edges.iter().any(|e| e.weight.is_some()));
        if doc.weighted {
            doc.edges.iter_mut().for_each(|e| e.weight = Some(e.weight.unwrap_or(1.0)));
        }
        Ok(doc)
    }

    /// Document for `g`, recording weights only when some weight differs
    /// from one. Parallel copies are written out one line each.
    pub fn from_graph(g: &Graph, provenance: Option<String>) -> Self {
        let weighted = g.is_weighted();
        let edges = g
            .edges()
            .iter()
            .flat_map(|e| {
                let line = EdgeLine { u: e.source, v: e.target, weight: weighted.then_some(e.weight) };
                std::iter::repeat_n(line, e.multiplicity as usize)
            })
            .collect();
        EdgeListDocument {
            directed: g.is_directed(),
            weighted,
            nodes: g.n(),
            provenance,
            edges,
            legs: Vec::new(),
            masses: Vec::new(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges = self.edges.iter().map(|e| Edge::weighted(e.u, e.v, e.weight.unwrap_or(1.0)));
        Graph::build(self.nodes, edges, self.directed, false)
    }

    /// Feynman graph whose edge `j` carries parameter `x_j` and the mass
    /// given for it, zero by default.
    pub fn to_feynman(&self) -> Result<FeynmanGraph> {
        if self.directed {
            return Err(Error::DirectedUnsupported);
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(j, e)| FeynmanEdge {
                u: e.u,
                v: e.v,
                param: j as u32,
                mass: self.masses.iter().find(|&&(k, _)| k == j).map_or(0.0, |&(_, m)| m),
            })
            .collect();
        FeynmanGraph::new(self.nodes, edges, self.legs.clone())
    }
}

impl FromStr for EdgeListDocument {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EdgeListDocument::parse(s)
    }
}

impl fmt::Display for EdgeListDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# directed: {}", self.directed)?;
        writeln!(f, "# weighted: {}", self.weighted)?;
        writeln!(f, "# nodes: {}", self.nodes)?;
        if let Some(p) = &self.provenance {
            writeln!(f, "# provenance: {}", p.replace('\n', " "))?;
        }
        for e in &self.edges {
            match (self.weighted, e.weight) {
                (true, w) => writeln!(f, "{} {} {}", e.u, e.v, w.unwrap_or(1.0))?,
                (false, _) => writeln!(f, "{} {}", e.u, e.v)?,
            }
        }
        for leg in &self.legs {
            writeln!(f, "leg {} {}", leg.node, leg.label)?;
        }
        for (edge, mass) in &self.masses {
            writeln!(f, "mass {edge} {mass}")?;
        }
        Ok(())
    }
}
