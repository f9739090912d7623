use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs hop distances; `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<usize>] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn is_complete(&self) -> bool {
        self.data.iter().all(Option::is_some)
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> Option<usize> {
        self.data.iter().flatten().copied().max()
    }
}

/// Length of the shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

/// Component labels `0..count`, numbered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    fn relabel_by_first(mut labels: Vec<usize>) -> Components {
        let mut map = vec![usize::MAX; labels.len()];
        let mut count = 0;
        for l in labels.iter_mut() {
            if map[*l] == usize::MAX {
                map[*l] = count;
                count += 1;
            }
            *l = map[*l];
        }
        Components { labels, count }
    }
}

/// Two-colouring of a bipartite graph with `|left| <= |right|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Graph {
    /// Breadth-first hop counts from `source` along out-edges.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Hop-count distance matrix (directed pseudo-distance for digraphs).
    pub fn shortest_path_distances(&self) -> DistanceMatrix {
        let data = (0..self.n).flat_map(|s| self.bfs_distances(s)).collect();
        DistanceMatrix { n: self.n, data }
    }

    pub fn eccentricities(&self) -> Result<Vec<usize>> {
        (0..self.n)
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
                    .ok_or(Error::Disconnected)
            })
            .collect()
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.eccentricities()?.into_iter().max().unwrap_or(0))
    }

    /// Weakly connected components for digraphs.
    pub fn connected_components(&self) -> Components {
        let mut labels = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if labels[s] != usize::MAX {
                continue;
            }
            labels[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u).chain(self.in_neighbors(u)) {
                    if labels[v] == usize::MAX {
                        labels[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        Components { labels, count: next }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count <= 1
    }

    /// Tarjan's algorithm, iterative. Undirected graphs yield their connected
    /// components.
    pub fn strongly_connected_components(&self) -> Components {
        let n = self.n;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut labels = vec![usize::MAX; n];
        let mut counter = 0;
        let mut comp = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            // (node, next neighbour position)
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (u, ref mut pos)) = call.last_mut() {
                if let Some(&(v, _)) = self.out_adj[u].get(*pos) {
                    *pos += 1;
                    if index[v] == usize::MAX {
                        index[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        call.push((v, 0));
                    } else if on_stack[v] {
                        low[u] = low[u].min(index[v]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[u]);
                    }
                    if low[u] == index[u] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            labels[w] = comp;
                            if w == u {
                                break;
                            }
                        }
                        comp += 1;
                    }
                }
            }
        }
        Components::relabel_by_first(labels)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().count <= 1
    }

    /// Shortest cycle length on the underlying undirected multigraph.
    pub fn girth(&self) -> Girth {
        if self.edges.iter().any(|e| e.is_loop()) {
            return Girth::Cycle(1);
        }
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.source.min(e.target), e.source.max(e.target)))
            .collect();
        let before = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        if pairs.len() < before || self.edges.iter().any(|e| e.multiplicity > 1) {
            return Girth::Cycle(2);
        }
        let mut adj = vec![Vec::new(); self.n];
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent_edge = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &(v, e) in &adj[u] {
                    if e == parent_edge[u] {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent_edge[v] = e;
                        queue.push_back(v);
                    } else {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }

    /// Two-colouring by BFS. Within each component the smaller colour class
    /// goes left (ties: the class holding the component's smallest node).
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut colour = vec![u8::MAX; self.n];
        let mut left = Vec::new();
        let mut right = Vec::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut classes = [vec![s], Vec::new()];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).chain(self.in_neighbors(u)) {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        classes[colour[v] as usize].push(v);
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return Err(Error::NotBipartite);
                    }
                }
            }
            let [a, b] = classes;
            if a.len() <= b.len() {
                left.extend(a);
                right.extend(b);
            } else {
                left.extend(b);
                right.extend(a);
            }
        }
        left.sort_unstable();
        right.sort_unstable();
        Ok(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_examples() {
        let p4 = Graph::path(4).shortest_path_distances();
        assert_eq!(p4.get(0, 3), Some(3));
        let two = Graph::empty(2).shortest_path_distances();
        assert_eq!(two.get(0, 1), None);
        let c4 = Graph::cycle(4).shortest_path_distances();
        assert_eq!(c4.get(0, 2), Some(2));
    }

    #[test]
    fn directed_distance_is_asymmetric() {
        let g = Graph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        let d = g.shortest_path_distances();
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(2, 0), None);
    }

    #[test]
    fn structural_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.girth(), Girth::Cycle(4));
        assert_eq!(c4.diameter(), Ok(2));
        let bp = c4.bipartition().unwrap();
        assert_eq!((bp.left.len(), bp.right.len()), (2, 2));

        let k3 = Graph::complete(3);
        assert_eq!(k3.girth(), Girth::Cycle(3));
        assert_eq!(k3.bipartition(), Err(Error::NotBipartite));

        let star = Graph::star(3);
        assert_eq!(star.girth(), Girth::Acyclic);
        assert_eq!(star.diameter(), Ok(2));
        let bp = star.bipartition().unwrap();
        assert_eq!(bp.left, vec![0]);
        assert_eq!(bp.right, vec![1, 2, 3]);

        assert_eq!(Graph::empty(2).diameter(), Err(Error::Disconnected));
        assert_eq!(Graph::cycle(7).girth(), Girth::Cycle(7));
        assert_eq!(Graph::multigraph(2, &[(0, 1), (0, 1)]).unwrap().girth(), Girth::Cycle(2));
    }

    #[test]
    fn eccentricities_of_path() {
        assert_eq!(Graph::path(5).eccentricities().unwrap(), vec![4, 3, 2, 3, 4]);
    }

    #[test]
    fn components() {
        let g = Graph::from_pairs(5, &[(0, 1), (3, 4)]).unwrap();
        let c = g.connected_components();
        assert_eq!(c.count, 3);
        assert_eq!(c.labels, vec![0, 0, 1, 2, 2]);
        assert_eq!(c.members()[2], vec![3, 4]);
    }

    #[test]
    fn strong_components() {
        let g = Graph::from_arcs(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let c = g.strongly_connected_components();
        assert_eq!(c.count, 3);
        assert_eq!(c.labels[0], c.labels[1]);
        assert_eq!(c.labels[1], c.labels[2]);
        assert_ne!(c.labels[3], c.labels[4]);
        assert!(!g.is_strongly_connected());
        assert!(Graph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap().is_strongly_connected());
    }
}
