use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Clustering coefficients of an undirected graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clustering {
    /// Per-node coefficient; zero for nodes of degree below two.
    pub local: Vec<f64>,
    /// Mean of `local` over all nodes.
    pub average: f64,
    /// `3 × triangles / connected triples`.
    pub transitivity: f64,
}

impl Graph {
    /// Distinct neighbours of `u`, sorted, ignoring loops.
    pub(crate) fn simple_neighbors(&self, u: usize) -> Vec<usize> {
        let mut nb: Vec<usize> = self.neighbors(u).filter(|&v| v != u).collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    pub fn clustering(&self) -> Result<Clustering> {
        self.require_undirected()?;
        let nbs: Vec<Vec<usize>> = (0..self.n).map(|u| self.simple_neighbors(u)).collect();
        let mut local = vec![0.0; self.n];
        let mut closed = 0.0;
        let mut triples = 0.0;
        for u in 0..self.n {
            let k = nbs[u].len();
            if k < 2 {
                continue;
            }
            let mut links = 0usize;
            for (i, &a) in nbs[u].iter().enumerate() {
                for &b in &nbs[u][i + 1..] {
                    if nbs[a].binary_search(&b).is_ok() {
                        links += 1;
                    }
                }
            }
            let pairs = (k * (k - 1) / 2) as f64;
            local[u] = links as f64 / pairs;
            closed += links as f64;
            triples += pairs;
        }
        let average = if self.n == 0 { 0.0 } else { local.iter().sum::<f64>() / self.n as f64 };
        let transitivity = if triples == 0.0 { 0.0 } else { closed / triples };
        Ok(Clustering { local, average, transitivity })
    }

    /// Mean hop distance over ordered pairs of distinct nodes.
    pub fn average_path_length(&self) -> Result<f64> {
        if self.n < 2 {
            return Ok(0.0);
        }
        let mut total = 0usize;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                total += d.ok_or(Error::Disconnected)?;
            }
        }
        Ok(total as f64 / (self.n * (self.n - 1)) as f64)
    }

    /// Number of triangles in the underlying simple graph.
    pub fn triangle_count(&self) -> usize {
        let nbs: Vec<Vec<usize>> = (0..self.n).map(|u| self.simple_neighbors(u)).collect();
        let mut count = 0;
        for u in 0..self.n {
            for &v in nbs[u].iter().filter(|&&v| v > u) {
                count += nbs[v].iter().filter(|&&w| w > v && nbs[u].binary_search(&w).is_ok()).count();
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_examples() {
        let k4 = Graph::complete(4).clustering().unwrap();
        assert_eq!(k4.average, 1.0);
        assert_eq!(k4.transitivity, 1.0);
        let star = Graph::star(4).clustering().unwrap();
        assert_eq!(star.average, 0.0);
        // triangle with a pendant
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c = g.clustering().unwrap();
        assert_eq!(c.local, vec![1.0, 1.0, 1.0 / 3.0, 0.0]);
        assert!((c.transitivity - 3.0 / 5.0).abs() < 1e-15);
        assert_eq!(g.triangle_count(), 1);
        assert_eq!(Graph::complete(5).triangle_count(), 10);
    }

    #[test]
    fn path_length_examples() {
        assert_eq!(Graph::complete(5).average_path_length().unwrap(), 1.0);
        // P3: distances 1,2,1 over three unordered pairs
        assert!((Graph::path(3).average_path_length().unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(Graph::empty(3).average_path_length(), Err(Error::Disconnected));
    }
}
