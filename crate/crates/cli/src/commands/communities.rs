use netphys::communities::{girvan_newman, modularity, spectral_bisection, BisectionMatrix, Partition};
use serde::Serialize;

use super::{read_graph, TextReport};
use crate::args::{CommunitiesArgs, CommunityMethod, Common};
use crate::error::CliResult;
use crate::json;

#[derive(Debug, Serialize)]
struct Stage {
    removed: Option<(usize, usize)>,
    communities: usize,
    modularity: Option<f64>,
}

#[derive(Debug, Serialize)]
struct CommunitiesReport {
    schema: u32,
    command: &'static str,
    method: &'static str,
    communities: Vec<Vec<usize>>,
    modularity: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    stages: Vec<Stage>,
}

pub fn run(common: &Common, args: &CommunitiesArgs) -> CliResult<String> {
    let g = read_graph(&args.input)?;
    let (method, partition, stages): (_, Partition, Vec<Stage>) = match args.method {
        CommunityMethod::GirvanNewman => {
            let dendrogram = girvan_newman(&g)?;
            let stages = dendrogram
                .stages
                .iter()
                .map(|s| Stage { removed: s.removed, communities: s.partition.count(), modularity: s.modularity })
                .collect();
            ("girvan_newman", dendrogram.best().partition.clone(), stages)
        }
        CommunityMethod::Laplacian => ("laplacian", spectral_bisection(&g, BisectionMatrix::Laplacian)?, Vec::new()),
        CommunityMethod::Adjacency => ("adjacency", spectral_bisection(&g, BisectionMatrix::Adjacency)?, Vec::new()),
        CommunityMethod::NormalizedLaplacian => {
            ("normalized_laplacian", spectral_bisection(&g, BisectionMatrix::NormalizedLaplacian)?, Vec::new())
        }
    };
    let report = CommunitiesReport {
        schema: json::SCHEMA,
        command: "communities",
        method,
        communities: partition.blocks(),
        modularity: modularity(&g, &partition).ok(),
        stages,
    };
    if common.json {
        return Ok(json::to_string(&report));
    }
    let mut text = TextReport::default();
    text.line("method", report.method);
    match report.modularity {
        Some(q) => text.line("modularity", q),
        None => text.line("modularity", "undefined"),
    };
    for (i, block) in report.communities.iter().enumerate() {
        let members: Vec<String> = block.iter().map(usize::to_string).collect();
        text.line(&format!("community {i}"), members.join(" "));
    }
    Ok(text.finish())
}
