use std::collections::BTreeMap;

use netphys::centrality::{
    betweenness, closeness, degree_centrality, eigenvector_centrality, katz, pagerank, subgraph_centrality,
    Direction, WalkParity,
};
use netphys::spectral::{eigenvalues_symmetric, spectral_radius};
use netphys::statmech::{thermo_report, ThermoReport};
use netphys::Graph;
use serde::Serialize;

use super::{join, read_graph, TextReport};
use crate::args::{AnalyzeArgs, CentralityKind, Common};
use crate::error::CliResult;
use crate::json;

#[derive(Debug, Serialize)]
struct Degrees {
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_degree: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out_degree: Option<Vec<usize>>,
    mean: f64,
    max: usize,
}

#[derive(Debug, Serialize)]
struct Distances {
    components: usize,
    /// `None` when some pair is unreachable.
    diameter: Option<usize>,
    average_path_length: Option<f64>,
}

#[derive(Debug, Serialize)]
struct SpectrumSummary {
    /// Adjacency eigenvalues, largest first.
    adjacency: Vec<f64>,
    spectral_radius: f64,
    /// Laplacian eigenvalues, smallest first.
    laplacian: Vec<f64>,
    algebraic_connectivity: Option<f64>,
}

#[derive(Debug, Serialize)]
struct ClusteringSummary {
    average: f64,
    transitivity: f64,
    local: Vec<f64>,
}

#[derive(Debug, Serialize)]
struct AnalyzeReport {
    schema: u32,
    command: &'static str,
    n: usize,
    m: usize,
    directed: bool,
    weighted: bool,
    degrees: Degrees,
    clustering: Option<ClusteringSummary>,
    distances: Distances,
    spectrum: Option<SpectrumSummary>,
    centralities: BTreeMap<&'static str, Vec<f64>>,
    thermodynamics: Option<ThermoReport>,
    warnings: Vec<String>,
}

fn degrees(g: &Graph) -> Degrees {
    let n = g.n().max(1) as f64;
    if g.is_directed() {
        let out: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let inc: Vec<usize> = (0..g.n()).map(|v| g.in_degree(v)).collect();
        Degrees {
            mean: out.iter().sum::<usize>() as f64 / n,
            max: out.iter().zip(&inc).map(|(a, b)| a + b).max().unwrap_or(0),
            degree: None,
            in_degree: Some(inc),
            out_degree: Some(out),
        }
    } else {
        let d = g.degrees();
        Degrees {
            mean: d.iter().sum::<usize>() as f64 / n,
            max: d.iter().copied().max().unwrap_or(0),
            degree: Some(d),
            in_degree: None,
            out_degree: None,
        }
    }
}

fn spectrum(g: &Graph) -> netphys::Result<SpectrumSummary> {
    let a = g.adjacency_matrix();
    let adjacency = eigenvalues_symmetric(&a)?;
    let mut laplacian = eigenvalues_symmetric(&g.laplacian_matrix()?)?;
    laplacian.reverse();
    Ok(SpectrumSummary {
        spectral_radius: spectral_radius(&a)?,
        algebraic_connectivity: (g.is_connected() && g.n() > 1).then(|| laplacian[1]),
        adjacency,
        laplacian,
    })
}

fn centrality(g: &Graph, kind: CentralityKind, args: &AnalyzeArgs) -> netphys::Result<(&'static str, Vec<f64>)> {
    Ok(match kind {
        CentralityKind::Degree => ("degree", degree_centrality(g).total),
        CentralityKind::Closeness => ("closeness", closeness(g)?.scores),
        CentralityKind::Betweenness => ("betweenness", betweenness(g).scores),
        CentralityKind::Eigenvector => {
            let direction = if g.is_directed() { Direction::Right } else { Direction::Undirected };
            ("eigenvector", eigenvector_centrality(g, direction)?.scores)
        }
        CentralityKind::Pagerank => ("pagerank", pagerank(g, args.alpha, 1e-12)?.scores),
        CentralityKind::Katz => {
            let eta = match args.katz_eta {
                Some(eta) => eta,
                None => spectral_radius(&g.adjacency_matrix())? + 1.0,
            };
            ("katz", katz(g, eta)?.outgoing.scores)
        }
        CentralityKind::Subgraph => ("subgraph", subgraph_centrality(g, WalkParity::Total)?.scores),
    })
}

pub fn run(common: &Common, args: &AnalyzeArgs) -> CliResult<String> {
    let g = read_graph(&args.input)?;
    let mut warnings = Vec::new();
    let mut note = |what: &str, e: netphys::Error| warnings.push(format!("{what}: {e}"));

    let clustering = if g.is_directed() {
        None
    } else {
        match g.clustering() {
            Ok(c) => Some(ClusteringSummary { average: c.average, transitivity: c.transitivity, local: c.local }),
            Err(e) => {
                note("clustering", e);
                None
            }
        }
    };
    let distances = Distances {
        components: g.connected_components().count,
        diameter: g.diameter().ok(),
        average_path_length: g.average_path_length().ok(),
    };
    let spectrum = if g.is_directed() {
        None
    } else {
        spectrum(&g).map_err(|e| note("spectrum", e)).ok()
    };
    let mut kinds = args.centrality.clone();
    kinds.sort();
    kinds.dedup();
    let mut centralities = BTreeMap::new();
    for kind in kinds {
        match centrality(&g, kind, args) {
            Ok((name, scores)) => {
                centralities.insert(name, scores);
            }
            Err(e) => note(&format!("{kind:?} centrality").to_lowercase(), e),
        }
    }
    let thermodynamics = if g.is_directed() {
        None
    } else {
        thermo_report(&g, common.beta).map_err(|e| note("thermodynamics", e)).ok()
    };

    let report = AnalyzeReport {
        schema: json::SCHEMA,
        command: "analyze",
        n: g.n(),
        m: g.m(),
        directed: g.is_directed(),
        weighted: g.is_weighted(),
        degrees: degrees(&g),
        clustering,
        distances,
        spectrum,
        centralities,
        thermodynamics,
        warnings,
    };
    if common.json {
        return Ok(json::to_string(&report));
    }

    let mut text = TextReport::default();
    text.line("nodes", report.n).line("edges", report.m).line("directed", report.directed);
    text.line("mean degree", report.degrees.mean).line("max degree", report.degrees.max);
    text.line("components", report.distances.components);
    match report.distances.diameter {
        Some(d) => text.line("diameter", d),
        None => text.line("diameter", "infinite"),
    };
    if let Some(l) = report.distances.average_path_length {
        text.line("average path length", l);
    }
    if let Some(c) = &report.clustering {
        text.line("average clustering", c.average).line("transitivity", c.transitivity);
    }
    if let Some(s) = &report.spectrum {
        text.line("adjacency spectrum", join(&s.adjacency));
        if let Some(mu2) = s.algebraic_connectivity {
            text.line("algebraic connectivity", mu2);
        }
    }
    for (name, scores) in &report.centralities {
        text.line(&format!("{name} centrality"), join(scores));
    }
    if let Some(t) = &report.thermodynamics {
        text.line("beta", t.beta)
            .line("partition function", t.z)
            .line("entropy", t.entropy)
            .line("energy", t.energy)
            .line("free energy", t.free_energy);
    }
    for w in &report.warnings {
        text.line("warning", w);
    }
    Ok(text.finish())
}
