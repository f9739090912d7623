use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomials::Multigraph;

/// A spanning forest with exactly two trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoForest {
    /// Edge indices in the forest.
    pub edges: Vec<usize>,
    /// Nodes of the tree holding the smallest node, then the rest.
    pub parts: (Vec<usize>, Vec<usize>),
}

/// Upper limit on the number of candidate edge subsets examined.
const SUBSET_LIMIT: u128 = 50_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Union-find with rollback, for backtracking.
struct UndoDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl UndoDsu {
    fn new(n: usize) -> Self {
        UndoDsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

/// All acyclic edge subsets with `n − k` edges, i.e. spanning forests with
/// `k` trees when the graph is connected. Loops never enter a forest.
pub(crate) fn spanning_forests(
    n: usize,
    edges: &[(usize, usize)],
    k: usize,
) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > n {
        return Ok(Vec::new());
    }
    let need = n - k;
    let candidates = binomial(edges.len(), need);
    if candidates > SUBSET_LIMIT {
        return Err(Error::TooLarge { what: "forest enumeration", size: candidates, limit: SUBSET_LIMIT });
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    let mut dsu = UndoDsu::new(n);
    extend(edges, 0, need, &mut chosen, &mut dsu, &mut out);
    Ok(out)
}

fn extend(
    edges: &[(usize, usize)],
    next: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    dsu: &mut UndoDsu,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == need {
        out.push(chosen.clone());
        return;
    }
    if edges.len() - next < need - chosen.len() {
        return;
    }
    let (u, v) = edges[next];
    if dsu.union(u, v) {
        chosen.push(next);
        extend(edges, next + 1, need, chosen, dsu, out);
        chosen.pop();
        dsu.undo();
    }
    extend(edges, next + 1, need, chosen, dsu, out);
}

/// Splits the nodes by the trees of a two-tree forest.
pub(crate) fn forest_parts(n: usize, edges: &[(usize, usize)], forest: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut dsu = UndoDsu::new(n);
    for &e in forest {
        dsu.union(edges[e].0, edges[e].1);
    }
    let root = dsu.find(0);
    (0..n).partition(|&v| dsu.find(v) == root)
}

fn connected_multigraph(g: &Graph) -> Result<Multigraph> {
    let mg = Multigraph::from_graph(g)?;
    if mg.component_count() > 1 {
        return Err(Error::Disconnected);
    }
    Ok(mg)
}

/// Spanning trees as edge-index lists. Parallel copies of an edge count as
/// separate edges, indexed in order of expansion.
pub fn spanning_trees(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let mg = connected_multigraph(g)?;
    spanning_forests(mg.n, &mg.edges, 1)
}

pub fn spanning_2forests(g: &Graph) -> Result<Vec<TwoForest>> {
    let mg = connected_multigraph(g)?;
    Ok(spanning_forests(mg.n, &mg.edges, 2)?
        .into_iter()
        .map(|edges| {
            let parts = forest_parts(mg.n, &mg.edges, &edges);
            TwoForest { edges, parts }
        })
        .collect())
}
