use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Undirected pseudograph: loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::OutOfRange { node, n });
                }
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// Underlying multigraph; each parallel copy becomes its own edge.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        g.require_undirected()?;
        let edges = g
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat_n((e.source, e.target), e.multiplicity as usize))
            .collect();
        Ok(Multigraph { n: g.n(), edges })
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn delete_edge(&self, e: usize) -> Result<Multigraph> {
        if e >= self.edges.len() {
            return Err(Error::NoSuchEdge(e));
        }
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Glues the endpoints of edge `e` and removes it. The higher-numbered
    /// endpoint disappears and later nodes shift down by one. Contracting a
    /// loop just deletes it.
    pub fn contract_edge(&self, e: usize) -> Result<Multigraph> {
        if e >= self.edges.len() {
            return Err(Error::NoSuchEdge(e));
        }
        let (a, b) = self.edges[e];
        if a == b {
            return self.delete_edge(e);
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.components()
    }

    /// Indices of bridge edges (parallel copies and loops are never bridges).
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.n;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                adj[u].push((v, i));
                adj[v].push((u, i));
            }
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (node, edge used to enter, next adjacency position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, parent_edge, ref mut pos)) = stack.last_mut() {
                if let Some(&(v, id)) = adj[u].get(*pos) {
                    *pos += 1;
                    if id == parent_edge {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, id, 0));
                    } else {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push(parent_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
