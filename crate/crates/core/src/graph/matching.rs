use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Result;

/// A maximum matching: `edges` holds `(left, right)` node pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Maximum matching of a bipartite graph by Hopcroft-Karp.
    pub fn maximum_matching(&self) -> Result<Matching> {
        self.require_undirected()?;
        let parts = self.bipartition()?;
        let mut right_index = vec![usize::MAX; self.n];
        for (i, &v) in parts.right.iter().enumerate() {
            right_index[v] = i;
        }
        let adj: Vec<Vec<usize>> = parts
            .left
            .iter()
            .map(|&u| {
                let mut nb: Vec<usize> = self.neighbors(u).map(|v| right_index[v]).collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        let (pair_left, _) = hopcroft_karp(&adj, parts.right.len());
        let edges: Vec<(usize, usize)> = pair_left
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|j| (parts.left[i], parts.right[j])))
            .collect();
        Ok(Matching { size: edges.len(), edges })
    }
}

/// Returns the partner of every left and right vertex.
fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n_left = adj.len();
    let mut pair_l: Vec<Option<usize>> = vec![None; n_left];
    let mut pair_r: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![usize::MAX; n_left];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if pair_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match pair_r[v] {
                    None => found = true,
                    Some(w) if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; n_left];
        for u in 0..n_left {
            if pair_l[u].is_none() {
                augment(u, adj, &mut pair_l, &mut pair_r, &mut dist, &mut next);
            }
        }
    }
    (pair_l, pair_r)
}

fn augment(
    root: usize,
    adj: &[Vec<usize>],
    pair_l: &mut [Option<usize>],
    pair_r: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    // Iterative DFS along the BFS layers; `path` holds (left, right) steps.
    let mut stack = vec![root];
    let mut path: Vec<usize> = Vec::new();
    while let Some(&u) = stack.last() {
        if next[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            path.pop();
            continue;
        }
        let v = adj[u][next[u]];
        next[u] += 1;
        match pair_r[v] {
            None => {
                path.push(v);
                for (&l, &r) in stack.iter().zip(path.iter()) {
                    pair_l[l] = Some(r);
                    pair_r[r] = Some(l);
                }
                return true;
            }
            Some(w) if dist[w] == dist[u].wrapping_add(1) => {
                path.push(v);
                stack.push(w);
            }
            _ => {}
        }
    }
    false
}
