use netphys::dynamics::{
    consensus_continuous, consensus_discrete, sir_integrate, sis_integrate, sync_eigenratio, sync_verdict,
    EpidemicParams, Trajectory, TrajectorySummary,
};
use netphys::spectral::eigenvalues_symmetric;
use netphys::Graph;
use serde::Serialize;

use super::{join, read_graph, TextReport};
use crate::args::{Common, DynamicsModel, EpidemicArgs, TrajectoryOutput};
use crate::error::{CliError, CliResult};
use crate::json;

#[derive(Debug, Serialize)]
struct ConsensusReport {
    schema: u32,
    command: &'static str,
    model: &'static str,
    converged: bool,
    /// Mean of the initial values, which the dynamics conserve.
    value: f64,
    max_deviation: f64,
    summary: TrajectorySummary,
}

#[derive(Debug, Serialize)]
struct EpidemicReport {
    schema: u32,
    command: &'static str,
    model: &'static str,
    /// Final population fractions averaged over nodes.
    final_mean: Vec<(String, f64)>,
    peak_infected: f64,
    peak_time: f64,
    summary: TrajectorySummary,
}

#[derive(Debug, Serialize)]
struct SyncReport {
    schema: u32,
    command: &'static str,
    model: &'static str,
    eigenratio: f64,
    mu2: f64,
    mu_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    synchronizable: Option<bool>,
}

/// Laplacian eigenvalues in ascending order.
fn laplacian_spectrum(g: &Graph) -> CliResult<Vec<f64>> {
    let mut mu = eigenvalues_symmetric(&g.laplacian_matrix()?)?;
    mu.reverse();
    Ok(mu)
}

fn mean_of(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len().max(1) as f64
}

pub fn run(common: &Common, model: &DynamicsModel) -> CliResult<String> {
    match model {
        DynamicsModel::Consensus { input, init, t_end, dt, discrete, epsilon, steps, output } => {
            let g = read_graph(input)?;
            let phi0 = match init {
                Some(values) => values.clone(),
                None => (0..g.n()).map(|i| i as f64).collect(),
            };
            let run = if *discrete {
                let l = g.laplacian_matrix()?;
                let top = l.diagonal().max();
                let epsilon = epsilon.unwrap_or(if top > 0.0 { 0.5 / top } else { 0.5 });
                consensus_discrete(&g, &phi0, epsilon, *steps)?
            } else {
                let mu = laplacian_spectrum(&g)?;
                let mu2 = mu.get(1).copied().filter(|&m| m > 1e-9 && g.is_connected());
                let t_end = t_end.unwrap_or(mu2.map_or(20.0, |m| 20.0 / m));
                consensus_continuous(&g, &phi0, t_end, dt.unwrap_or(t_end / 200.0))?
            };
            if output.csv {
                return Ok(run.to_csv());
            }
            let value = mean_of(&phi0);
            let spread = phi0.iter().map(|x| (x - value).abs()).fold(0.0, f64::max);
            let max_deviation = run.final_state().iter().map(|x| (x - value).abs()).fold(0.0, f64::max);
            let report = ConsensusReport {
                schema: json::SCHEMA,
                command: "dynamics",
                model: run.model.name(),
                converged: max_deviation <= output.tolerance * spread.max(1.0),
                value,
                max_deviation,
                summary: run.summary(output.tolerance),
            };
            if common.json {
                return Ok(json::to_string(&report));
            }
            let mut text = TextReport::default();
            text.raw(&format!("converged: {}, value = {}", report.converged, report.value));
            text.line("max deviation", report.max_deviation).line("final time", report.summary.final_time);
            if let Some(t) = report.summary.convergence_time {
                text.line("convergence time", t);
            }
            text.line("final state", join(run.final_state()));
            Ok(text.finish())
        }
        DynamicsModel::Sir { input, epidemic, output } => epidemic_run(common, input, epidemic, output, true),
        DynamicsModel::Sis { input, epidemic, output } => epidemic_run(common, input, epidemic, output, false),
        DynamicsModel::Sync { input, alpha1, alpha2, coupling } => {
            let g = read_graph(input)?;
            let eigenratio = sync_eigenratio(&g)?;
            let mu = laplacian_spectrum(&g)?;
            let synchronizable = match (alpha1, alpha2, coupling) {
                (Some(a1), Some(a2), Some(c)) => Some(sync_verdict(&g, *a1, *a2, *c)?),
                _ => None,
            };
            let report = SyncReport {
                schema: json::SCHEMA,
                command: "dynamics",
                model: "sync",
                eigenratio,
                mu2: mu[1],
                mu_max: mu[mu.len() - 1],
                synchronizable,
            };
            if common.json {
                return Ok(json::to_string(&report));
            }
            let mut text = TextReport::default();
            text.line("eigenratio", report.eigenratio).line("mu2", report.mu2).line("mu max", report.mu_max);
            if let Some(v) = report.synchronizable {
                text.line("synchronizable", v);
            }
            Ok(text.finish())
        }
    }
}

fn epidemic_run(
    common: &Common,
    input: &std::path::Path,
    args: &EpidemicArgs,
    output: &TrajectoryOutput,
    recovered_class: bool,
) -> CliResult<String> {
    let g = read_graph(input)?;
    let params = EpidemicParams::new(args.infection, args.recovery)?;
    let n = g.n();
    let mut x0 = vec![0.0; n];
    for &v in &args.infected {
        let slot = x0
            .get_mut(v)
            .ok_or_else(|| CliError::Usage(format!("infected node {v} out of range for {n} nodes")))?;
        *slot = args.initial;
    }
    let s0: Vec<f64> = x0.iter().map(|x| 1.0 - x).collect();
    let dt = args.dt.unwrap_or_else(|| params.stable_step(&g).min(args.t_end / 10.0));
    let run: Trajectory = if recovered_class {
        sir_integrate(&g, params, &s0, &x0, &vec![0.0; n], args.t_end, dt)?
    } else {
        sis_integrate(&g, params, &s0, &x0, args.t_end, dt)?
    };
    if output.csv {
        return Ok(run.to_csv());
    }
    let infected = run.components.iter().position(|c| c == "x").expect("epidemic models track x");
    let (peak_index, peak_infected) = (0..run.len())
        .map(|k| (k, mean_of(run.component(k, infected))))
        .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
    let last = run.len() - 1;
    let report = EpidemicReport {
        schema: json::SCHEMA,
        command: "dynamics",
        model: run.model.name(),
        final_mean: run
            .components
            .iter()
            .enumerate()
            .map(|(c, name)| (name.clone(), mean_of(run.component(last, c))))
            .collect(),
        peak_infected,
        peak_time: run.times[peak_index],
        summary: run.summary(output.tolerance),
    };
    if common.json {
        return Ok(json::to_string(&report));
    }
    let mut text = TextReport::default();
    for (name, value) in &report.final_mean {
        text.line(&format!("final mean {name}"), value);
    }
    text.line("peak infected", report.peak_infected).line("peak time", report.peak_time);
    if let Some(t) = report.summary.convergence_time {
        text.line("convergence time", t);
    }
    Ok(text.finish())
}
