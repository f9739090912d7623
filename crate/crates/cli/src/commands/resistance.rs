use netphys::electrical::{resistance_distance, resistance_matrix, ResistanceMethod};
use serde::Serialize;

use super::{join, read_graph, TextReport};
use crate::args::{Common, ResistanceArgs, ResistanceMethodArg};
use crate::error::CliResult;
use crate::json;

#[derive(Debug, Serialize)]
struct PairResistance {
    u: usize,
    v: usize,
    omega: f64,
}

#[derive(Debug, Serialize)]
struct ResistanceReport {
    schema: u32,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kirchhoff_index: Option<f64>,
    pairs: Vec<PairResistance>,
}

pub fn run(common: &Common, args: &ResistanceArgs) -> CliResult<String> {
    let g = read_graph(&args.input)?;
    let method = match args.method {
        ResistanceMethodArg::Pseudoinverse => ResistanceMethod::Pseudoinverse,
        ResistanceMethodArg::Determinant => ResistanceMethod::Determinant,
        ResistanceMethodArg::Spectral => ResistanceMethod::Spectral,
    };
    let mut report = ResistanceReport { schema: json::SCHEMA, command: "resistance", matrix: None, kirchhoff_index: None, pairs: Vec::new() };
    if args.matrix || args.pairs.is_empty() {
        let omega = resistance_matrix(&g)?;
        report.kirchhoff_index = Some(omega.kirchhoff_index());
        report.matrix = Some(omega.to_rows());
    }
    for &(u, v) in &args.pairs {
        report.pairs.push(PairResistance { u, v, omega: resistance_distance(&g, u, v, method)? });
    }
    if common.json {
        return Ok(json::to_string(&report));
    }
    let mut text = TextReport::default();
    if let Some(rows) = &report.matrix {
        for row in rows {
            text.raw(&join(row));
        }
    }
    for p in &report.pairs {
        text.line(&format!("omega({}, {})", p.u, p.v), p.omega);
    }
    Ok(text.finish())
}
