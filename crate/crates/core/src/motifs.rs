//! Three-node motif census and significance against random null models.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::ensembles::{self, Seed};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connected three-node induced subgraph types.
///
/// Undirected graphs have two. Digraphs have thirteen, named by the
/// mutual/asymmetric/null dyad code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Motif {
    /// Open two-path.
    Path,
    Triangle,
    /// `A <- B -> C`.
    Triad021D,
    /// `A -> B <- C`.
    Triad021U,
    /// Three-chain `A -> B -> C`.
    Triad021C,
    Triad111D,
    Triad111U,
    /// Feedforward loop.
    Triad030T,
    /// Feedback loop.
    Triad030C,
    Triad201,
    Triad120D,
    Triad120U,
    Triad120C,
    Triad210,
    Triad300,
}

impl Motif {
    pub const UNDIRECTED: [Motif; 2] = [Motif::Path, Motif::Triangle];
    pub const DIRECTED: [Motif; 13] = [
        Motif::Triad021D,
        Motif::Triad021U,
        Motif::Triad021C,
        Motif::Triad111D,
        Motif::Triad111U,
        Motif::Triad030T,
        Motif::Triad030C,
        Motif::Triad201,
        Motif::Triad120D,
        Motif::Triad120U,
        Motif::Triad120C,
        Motif::Triad210,
        Motif::Triad300,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Motif::Path => "path",
            Motif::Triangle => "triangle",
            Motif::Triad021D => "021D",
            Motif::Triad021U => "021U",
            Motif::Triad021C => "three_chain",
            Motif::Triad111D => "111D",
            Motif::Triad111U => "111U",
            Motif::Triad030T => "feedforward_loop",
            Motif::Triad030C => "feedback_loop",
            Motif::Triad201 => "201",
            Motif::Triad120D => "120D",
            Motif::Triad120U => "120U",
            Motif::Triad120C => "120C",
            Motif::Triad210 => "210",
            Motif::Triad300 => "300",
        }
    }

    fn representative(self) -> &'static [(usize, usize)] {
        match self {
            Motif::Triad021D => &[(1, 0), (1, 2)],
            Motif::Triad021U => &[(0, 1), (2, 1)],
            Motif::Triad021C => &[(0, 1), (1, 2)],
            Motif::Triad111D => &[(0, 1), (1, 0), (2, 1)],
            Motif::Triad111U => &[(0, 1), (1, 0), (1, 2)],
            Motif::Triad030T => &[(0, 1), (1, 2), (0, 2)],
            Motif::Triad030C => &[(0, 1), (1, 2), (2, 0)],
            Motif::Triad201 => &[(0, 1), (1, 0), (1, 2), (2, 1)],
            Motif::Triad120D => &[(1, 0), (1, 2), (0, 2), (2, 0)],
            Motif::Triad120U => &[(0, 1), (2, 1), (0, 2), (2, 0)],
            Motif::Triad120C => &[(0, 1), (1, 2), (0, 2), (2, 0)],
            Motif::Triad210 => &[(0, 1), (1, 2), (2, 1), (0, 2), (2, 0)],
            Motif::Triad300 => &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
            Motif::Path | Motif::Triangle => &[],
        }
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn arc_bit(a: usize, b: usize) -> u8 {
    // six ordered pairs of {0, 1, 2}
    let idx = match (a, b) {
        (0, 1) => 0,
        (1, 0) => 1,
        (1, 2) => 2,
        (2, 1) => 3,
        (0, 2) => 4,
        (2, 0) => 5,
        _ => unreachable!("loop in triad"),
    };
    1 << idx
}

fn canonical(mask: u8) -> u8 {
    const PAIRS: [(usize, usize); 6] = [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)];
    PERMS
        .iter()
        .map(|p| {
            PAIRS
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(0u8, |acc, (_, &(a, b))| acc | arc_bit(p[a], p[b]))
        })
        .min()
        .unwrap()
}

/// Maps each of the 64 arc patterns to its triad type, `None` when the
/// underlying triple is disconnected.
fn triad_table() -> [Option<Motif>; 64] {
    let mut by_canon = BTreeMap::new();
    for m in Motif::DIRECTED {
        let mask = m.representative().iter().fold(0u8, |acc, &(a, b)| acc | arc_bit(a, b));
        by_canon.insert(canonical(mask), m);
    }
    let mut table = [None; 64];
    for (mask, slot) in table.iter_mut().enumerate() {
        *slot = by_canon.get(&canonical(mask as u8)).copied();
    }
    table
}

/// Induced counts of every connected three-node type.
pub type Census = BTreeMap<Motif, u64>;

/// Exact induced three-node census by enumerating connected triples.
pub fn motif_census(g: &Graph) -> Census {
    let n = g.n();
    let mut und: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut v: Vec<usize> = g.neighbors(u).chain(g.in_neighbors(u)).filter(|&v| v != u).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    und.iter_mut().for_each(|v| v.shrink_to_fit());
    let adjacent = |a: usize, b: usize| und[a].binary_search(&b).is_ok();
    let arcs: HashSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .flat_map(|e| {
            let fwd = (e.source, e.target);
            if g.is_directed() { vec![fwd] } else { vec![fwd, (e.target, e.source)] }
        })
        .collect();
    let table = triad_table();
    let kinds: &[Motif] = if g.is_directed() { &Motif::DIRECTED } else { &Motif::UNDIRECTED };
    let mut census: Census = kinds.iter().map(|&m| (m, 0)).collect();
    for v in 0..n {
        let nb = &und[v];
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                let closed = adjacent(u, w);
                // a triangle is seen from each corner; keep the smallest
                if closed && v > u.min(w) {
                    continue;
                }
                let kind = if g.is_directed() {
                    let nodes = [u, v, w];
                    let mut mask = 0u8;
                    for a in 0..3 {
                        for b in 0..3 {
                            if a != b && arcs.contains(&(nodes[a], nodes[b])) {
                                mask |= arc_bit(a, b);
                            }
                        }
                    }
                    table[mask as usize].expect("connected triad")
                } else if closed {
                    Motif::Triangle
                } else {
                    Motif::Path
                };
                *census.get_mut(&kind).unwrap() += 1;
            }
        }
    }
    census
}

/// `Z = (N_real - ⟨N_random⟩)/σ_random`.
pub fn z_score(real: f64, mean: f64, sd: f64) -> Result<f64> {
    if sd <= 0.0 || !sd.is_finite() {
        return Err(Error::DegenerateEnsemble);
    }
    Ok((real - mean) / sd)
}

/// Random graphs the observed counts are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullModel {
    /// Degree-preserving double edge swaps, `100·m` attempts per sample.
    DegreeSwap,
    /// `G(n, p)` with `p` matched to the observed edge density.
    ErdosRenyi,
}

/// Significance of one motif.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifScore {
    pub motif: Motif,
    pub real: u64,
    pub mean: f64,
    /// Population standard deviation over the ensemble.
    pub sd: f64,
    /// `None` when the ensemble has zero spread.
    pub z: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifReport {
    pub null_model: NullModel,
    pub ensemble_size: usize,
    pub seed: Seed,
    pub scores: Vec<MotifScore>,
}

impl MotifReport {
    pub fn get(&self, motif: Motif) -> Option<&MotifScore> {
        self.scores.iter().find(|s| s.motif == motif)
    }
}

/// Minimum ensemble size accepted by [`motif_zscores`].
pub const MIN_ENSEMBLE: usize = 20;

/// Scores every three-node motif of `g` against `ensemble_size` null graphs.
pub fn motif_zscores(g: &Graph, null: NullModel, ensemble_size: usize, seed: Seed) -> Result<MotifReport> {
    if ensemble_size < MIN_ENSEMBLE {
        return Err(Error::BadParams(format!(
            "ensemble size must be at least {MIN_ENSEMBLE}, got {ensemble_size}"
        )));
    }
    if !g.is_simple() {
        return Err(Error::BadParams("motif null models need a simple graph".into()));
    }
    let real = motif_census(g);
    let samples: Vec<Census> = ensembles::replicas(seed, ensemble_size, |s| {
        null_sample(g, null, s).map(|h| motif_census(&h))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let count = samples.len() as f64;
    let scores = real
        .iter()
        .map(|(&motif, &r)| {
            let xs: Vec<f64> = samples.iter().map(|c| c[&motif] as f64).collect();
            let mean = xs.iter().sum::<f64>() / count;
            let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / count).sqrt();
            MotifScore { motif, real: r, mean, sd, z: z_score(r as f64, mean, sd).ok() }
        })
        .collect();
    Ok(MotifReport { null_model: null, ensemble_size, seed, scores })
}

/// Z-score of a single motif; a zero-spread ensemble is an error.
pub fn motif_zscore(g: &Graph, motif: Motif, null: NullModel, ensemble_size: usize, seed: Seed) -> Result<MotifScore> {
    let report = motif_zscores(g, null, ensemble_size, seed)?;
    let score = report
        .get(motif)
        .cloned()
        .ok_or_else(|| Error::BadParams(format!("motif {} does not apply to this graph", motif.name())))?;
    if score.z.is_none() {
        return Err(Error::DegenerateEnsemble);
    }
    Ok(score)
}

fn null_sample(g: &Graph, null: NullModel, seed: Seed) -> Result<Graph> {
    match null {
        NullModel::ErdosRenyi => {
            let n = g.n();
            let pairs = (n * n.saturating_sub(1)) as f64 / if g.is_directed() { 1.0 } else { 2.0 };
            let p = if pairs > 0.0 { g.m() as f64 / pairs } else { 0.0 };
            if g.is_directed() {
                directed_erdos_renyi(n, p, seed)
            } else {
                ensembles::erdos_renyi(n, p, seed)
            }
        }
        NullModel::DegreeSwap => Ok(degree_preserving_swaps(g, 100 * g.m(), seed)),
    }
}

fn directed_erdos_renyi(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    let mut r = ensembles::rng(seed);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| r.random_bool(p))
        .collect();
    Graph::from_arcs(n, &arcs)
}

/// Rewires a simple graph by `attempts` double edge swaps
/// `(a,b),(c,d) -> (a,d),(c,b)`, rejecting swaps that would create loops or
/// repeated edges. Degrees (in- and out-degrees for digraphs) are kept.
pub fn degree_preserving_swaps(g: &Graph, attempts: usize, seed: Seed) -> Graph {
    let directed = g.is_directed();
    let key = |a: usize, b: usize| if directed { (a, b) } else { (a.min(b), a.max(b)) };
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.source, e.target)).collect();
    let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(a, b)| key(a, b)).collect();
    let mut r = ensembles::rng(seed);
    let m = edges.len();
    if m >= 2 {
        for _ in 0..attempts {
            let i = r.random_range(0..m);
            let j = r.random_range(0..m);
            if i == j {
                continue;
            }
            let (a, b) = edges[i];
            let (mut c, mut d) = edges[j];
            if !directed && r.random_bool(0.5) {
                std::mem::swap(&mut c, &mut d);
            }
            if a == d || c == b || present.contains(&key(a, d)) || present.contains(&key(c, b)) {
                continue;
            }
            present.remove(&key(a, b));
            present.remove(&key(c, d));
            present.insert(key(a, d));
            present.insert(key(c, b));
            edges[i] = (a, d);
            edges[j] = (c, b);
        }
    }
    let build = if directed { Graph::from_arcs } else { Graph::from_pairs };
    build(g.n(), &edges).expect("swaps keep the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triad_table_has_thirteen_classes() {
        let table = triad_table();
        let kinds: HashSet<Motif> = table.iter().flatten().copied().collect();
        assert_eq!(kinds.len(), 13);
        // 64 patterns minus the empty one and the 3·3 with a single dyad
        // present (6 single arcs + 3 mutual pairs)
        assert_eq!(table.iter().filter(|t| t.is_some()).count(), 64 - 1 - 9);
    }

    #[test]
    fn directed_examples() {
        let ffl = Graph::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = motif_census(&ffl);
        assert_eq!(c[&Motif::Triad030T], 1);
        assert_eq!(c.values().sum::<u64>(), 1);
        let cyc = motif_census(&Graph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        assert_eq!(cyc[&Motif::Triad030C], 1);
        let chain = motif_census(&Graph::from_arcs(3, &[(2, 1), (1, 0)]).unwrap());
        assert_eq!(chain[&Motif::Triad021C], 1);
    }

    #[test]
    fn undirected_examples() {
        let k3 = motif_census(&Graph::complete(3));
        assert_eq!((k3[&Motif::Triangle], k3[&Motif::Path]), (1, 0));
        let c4 = motif_census(&Graph::cycle(4));
        assert_eq!((c4[&Motif::Triangle], c4[&Motif::Path]), (0, 4));
        let k4 = motif_census(&Graph::complete(4));
        assert_eq!((k4[&Motif::Triangle], k4[&Motif::Path]), (4, 0));
    }

    #[test]
    fn arithmetic_z() {
        assert_eq!(z_score(10.0, 4.0, 2.0), Ok(3.0));
        assert_eq!(z_score(1.0, 1.0, 0.0), Err(Error::DegenerateEnsemble));
    }

    #[test]
    fn swaps_keep_degrees() {
        let g = ensembles::erdos_renyi(40, 0.15, 3).unwrap();
        let h = degree_preserving_swaps(&g, 2000, 9);
        assert_eq!(g.degrees(), h.degrees());
        assert_ne!(g.edges(), h.edges());
        let d = Graph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = degree_preserving_swaps(&d, 100, 1);
        for v in 0..4 {
            assert_eq!(d.in_degree(v), s.in_degree(v));
            assert_eq!(d.neighbors(v).count(), s.neighbors(v).count());
        }
    }

    #[test]
    fn complete_graph_ensemble_is_degenerate() {
        let g = Graph::complete(6);
        let err = motif_zscore(&g, Motif::Triangle, NullModel::DegreeSwap, 20, 1);
        assert_eq!(err, Err(Error::DegenerateEnsemble));
        assert!(motif_zscores(&g, NullModel::DegreeSwap, 5, 1).is_err());
    }

    #[test]
    fn ring_lattice_is_triangle_rich() {
        let g = ensembles::watts_strogatz(60, 6, 0.0, 0).unwrap();
        let s = motif_zscore(&g, Motif::Triangle, NullModel::DegreeSwap, 30, 4).unwrap();
        assert!(s.z.unwrap() > 3.0, "{s:?}");
    }
}
