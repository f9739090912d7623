use netphys::polynomials::{
    chromatic_polynomial, potts_partition, tutte_evaluations, tutte_polynomial, Hamiltonian, Multigraph,
    TutteEvaluations,
};
use netphys::symanzik::{first_symanzik_trees, kirchhoff_polynomial, second_symanzik};
use serde::Serialize;

use super::{read_document, TextReport};
use crate::args::{Common, HamiltonianArg, PolynomialArgs, PolynomialKind};
use crate::error::CliResult;
use crate::json;

#[derive(Debug, Serialize)]
struct Named {
    name: &'static str,
    text: String,
}

#[derive(Debug, Default, Serialize)]
struct PolynomialReport {
    schema: u32,
    command: &'static str,
    kind: &'static str,
    /// Canonical text forms.
    polynomials: Vec<Named>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tutte_evaluations: Option<TutteEvaluations>,
    /// Ascending coefficients of a univariate result.
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<i128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coupling: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<f64>,
}

pub fn run(common: &Common, args: &PolynomialArgs) -> CliResult<String> {
    let doc = read_document(&args.input)?;
    let mut report = PolynomialReport { schema: json::SCHEMA, command: "polynomial", ..Default::default() };
    match args.kind {
        PolynomialKind::Tutte => {
            let t = tutte_polynomial(&Multigraph::from_graph(&doc.to_graph()?)?);
            report.kind = "tutte";
            report.tutte_evaluations = Some(tutte_evaluations(&t));
            report.polynomials.push(Named { name: "T", text: t.to_string() });
        }
        PolynomialKind::Chromatic => {
            let p = chromatic_polynomial(&Multigraph::from_graph(&doc.to_graph()?)?);
            report.kind = "chromatic";
            report.polynomials.push(Named { name: "P", text: p.format_in("q") });
            report.coefficients = Some(p.coeffs().to_vec());
        }
        PolynomialKind::Potts => {
            let hamiltonian = match args.hamiltonian {
                HamiltonianArg::H1 => Hamiltonian::H1,
                HamiltonianArg::H2 => Hamiltonian::H2,
            };
            let z = potts_partition(&doc.to_graph()?, args.q, hamiltonian)?;
            report.kind = "potts";
            report.q = Some(args.q);
            report.polynomials.push(Named { name: "Z", text: z.format() });
            report.coefficients = Some(z.polynomial.coeffs().to_vec());
            report.coupling = args.k;
            report.value = args.k.map(|k| z.evaluate(k));
        }
        PolynomialKind::Symanzik => {
            let fg = doc.to_feynman()?;
            report.kind = "symanzik";
            if !args.second {
                report.polynomials.push(Named { name: "U", text: first_symanzik_trees(&fg)?.to_string() });
            }
            if !args.first {
                let (f0, f) = second_symanzik(&fg)?;
                report.polynomials.push(Named { name: "F0", text: f0.to_string() });
                report.polynomials.push(Named { name: "F", text: f.to_string() });
            }
        }
        PolynomialKind::Kirchhoff => {
            let fg = doc.to_feynman()?;
            report.kind = "kirchhoff";
            report.polynomials.push(Named { name: "K", text: kirchhoff_polynomial(&fg, args.drop)?.to_string() });
        }
    }
    if common.json {
        return Ok(json::to_string(&report));
    }
    // a single polynomial prints bare so it can be piped or diffed
    if let ([only], None) = (report.polynomials.as_slice(), report.value) {
        return Ok(only.text.clone());
    }
    let mut text = TextReport::default();
    for p in &report.polynomials {
        text.raw(&format!("{} = {}", p.name, p.text));
    }
    if let (Some(k), Some(v)) = (report.coupling, report.value) {
        text.line(&format!("value at K = {k}"), v);
    }
    Ok(text.finish())
}
