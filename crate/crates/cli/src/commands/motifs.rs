use std::collections::BTreeMap;

use netphys::motifs::{motif_census, motif_zscores, Motif, MotifReport, NullModel};
use serde::Serialize;

use super::{read_graph, TextReport};
use crate::args::{Common, MotifsArgs, NullModelArg};
use crate::error::CliResult;
use crate::json;

#[derive(Debug, Serialize)]
struct Score {
    motif: &'static str,
    real: u64,
    mean: f64,
    sd: f64,
    z: Option<f64>,
}

#[derive(Debug, Serialize)]
struct MotifsReport {
    schema: u32,
    command: &'static str,
    census: BTreeMap<&'static str, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    null_model: Option<NullModel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ensemble_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    scores: Vec<Score>,
}

pub fn run(common: &Common, args: &MotifsArgs) -> CliResult<String> {
    let g = read_graph(&args.input)?;
    let kinds: &[Motif] = if g.is_directed() { &Motif::DIRECTED } else { &Motif::UNDIRECTED };
    let counts = motif_census(&g);
    let census = kinds.iter().map(|&m| (m.name(), counts.get(&m).copied().unwrap_or(0))).collect();
    let mut report = MotifsReport {
        schema: json::SCHEMA,
        command: "motifs",
        census,
        null_model: None,
        ensemble_size: None,
        seed: None,
        scores: Vec::new(),
    };
    if !args.census_only {
        let null = match args.null {
            NullModelArg::DegreeSwap => NullModel::DegreeSwap,
            NullModelArg::ErdosRenyi => NullModel::ErdosRenyi,
        };
        let MotifReport { null_model, ensemble_size, seed, scores } =
            motif_zscores(&g, null, args.ensemble, common.seed)?;
        report.null_model = Some(null_model);
        report.ensemble_size = Some(ensemble_size);
        report.seed = Some(seed);
        report.scores = scores
            .into_iter()
            .map(|s| Score { motif: s.motif.name(), real: s.real, mean: s.mean, sd: s.sd, z: s.z })
            .collect();
    }
    if common.json {
        return Ok(json::to_string(&report));
    }
    let mut text = TextReport::default();
    if report.scores.is_empty() {
        for (name, count) in &report.census {
            text.line(name, count);
        }
    } else {
        for s in &report.scores {
            let z = s.z.map_or("undefined".to_string(), super::num);
            text.line(s.motif, format!("{} (null mean {}, sd {}, z {z})", s.real, super::num(s.mean), super::num(s.sd)));
        }
    }
    Ok(text.finish())
}
