use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "netphys", version, about = "Graph physics from the command line")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags accepted by every verb.
#[derive(Debug, Args)]
pub struct Common {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Inverse temperature for the thermodynamic quantities.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub beta: f64,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, degrees, clustering, distances, spectrum, centralities and
    /// thermodynamics of a graph.
    Analyze(AnalyzeArgs),
    /// Tutte, chromatic, Potts, Symanzik or Kirchhoff polynomial.
    Polynomial(PolynomialArgs),
    /// Sample a random graph as an edge list.
    Generate {
        #[command(subcommand)]
        model: GenerateModel,
    },
    /// Run a dynamical process on a graph.
    Dynamics {
        #[command(subcommand)]
        model: DynamicsModel,
    },
    /// Effective resistances.
    Resistance(ResistanceArgs),
    /// Community detection.
    Communities(CommunitiesArgs),
    /// Three-node motif census and significance.
    Motifs(MotifsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CentralityKind {
    Degree,
    Closeness,
    Betweenness,
    Eigenvector,
    Pagerank,
    Katz,
    Subgraph,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Edge-list file, or `-` for standard input.
    pub input: PathBuf,
    /// Centralities to compute.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "degree,closeness,betweenness,eigenvector,pagerank,subgraph"
    )]
    pub centrality: Vec<CentralityKind>,
    /// PageRank damping factor.
    #[arg(long, default_value_t = 0.85)]
    pub alpha: f64,
    /// Katz attenuation; defaults to one above the spectral radius.
    #[arg(long)]
    pub katz_eta: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolynomialKind {
    Tutte,
    Chromatic,
    Potts,
    Symanzik,
    Kirchhoff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HamiltonianArg {
    H1,
    H2,
}

#[derive(Debug, Args)]
pub struct PolynomialArgs {
    pub input: PathBuf,
    #[arg(value_enum)]
    pub kind: PolynomialKind,
    /// Number of Potts states.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Coupling `K = βJ` at which to evaluate the Potts partition function.
    #[arg(long = "K", alias = "coupling", allow_hyphen_values = true)]
    pub k: Option<f64>,
    #[arg(long, value_enum, default_value = "h1")]
    pub hamiltonian: HamiltonianArg,
    /// Only the first Symanzik polynomial.
    #[arg(long, conflicts_with = "second")]
    pub first: bool,
    /// Only the second Symanzik polynomial.
    #[arg(long)]
    pub second: bool,
    /// Row and column removed from the symbolic Laplacian.
    #[arg(long, default_value_t = 0)]
    pub drop: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaVariantArg {
    Growth,
    /// Linearised chord diagram, multi-edges kept.
    Lcd,
    /// Linearised chord diagram, simplified.
    LcdSimple,
}

#[derive(Debug, Subcommand)]
pub enum GenerateModel {
    /// Erdős-Rényi `G(n, p)`.
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Watts-Strogatz ring with rewiring.
    Ws {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.0)]
        p: f64,
    },
    /// Barabási-Albert preferential attachment.
    Ba {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "growth")]
        variant: BaVariantArg,
    },
}

/// Output shape shared by the trajectory models.
#[derive(Debug, Args)]
pub struct TrajectoryOutput {
    /// Emit the whole trajectory as CSV.
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    /// Distance to the final state that counts as settled.
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum DynamicsModel {
    /// Laplacian consensus, continuous or discrete.
    Consensus {
        input: PathBuf,
        /// Initial values, one per node; defaults to the node ids.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        init: Option<Vec<f64>>,
        /// Integration horizon; defaults to `20/μ₂`.
        #[arg(long)]
        t_end: Option<f64>,
        /// Sampling interval; defaults to a two-hundredth of the horizon.
        #[arg(long)]
        dt: Option<f64>,
        /// Iterate the Perron matrix instead.
        #[arg(long)]
        discrete: bool,
        /// Perron step size; defaults to half the largest stable value.
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[command(flatten)]
        output: TrajectoryOutput,
    },
    /// Mean-field susceptible-infected-recovered model.
    Sir {
        input: PathBuf,
        #[command(flatten)]
        epidemic: EpidemicArgs,
        #[command(flatten)]
        output: TrajectoryOutput,
    },
    /// Mean-field susceptible-infected-susceptible model.
    Sis {
        input: PathBuf,
        #[command(flatten)]
        epidemic: EpidemicArgs,
        #[command(flatten)]
        output: TrajectoryOutput,
    },
    /// Laplacian eigenratio and master-stability verdict.
    Sync {
        input: PathBuf,
        #[arg(long, requires_all = ["alpha2", "coupling"])]
        alpha1: Option<f64>,
        #[arg(long, requires_all = ["alpha1", "coupling"])]
        alpha2: Option<f64>,
        #[arg(long, requires_all = ["alpha1", "alpha2"])]
        coupling: Option<f64>,
    },
}

#[derive(Debug, Args)]
pub struct EpidemicArgs {
    /// Transmission rate per contact.
    #[arg(long, default_value_t = 0.5)]
    pub infection: f64,
    #[arg(long, default_value_t = 0.2)]
    pub recovery: f64,
    #[arg(long, default_value_t = 20.0)]
    pub t_end: f64,
    /// Integrator step; defaults to the model's stable step.
    #[arg(long)]
    pub dt: Option<f64>,
    /// Nodes that start infected.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub infected: Vec<usize>,
    /// Initial infected fraction at those nodes.
    #[arg(long, default_value_t = 0.5)]
    pub initial: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResistanceMethodArg {
    Pseudoinverse,
    Determinant,
    Spectral,
}

#[derive(Debug, Args)]
pub struct ResistanceArgs {
    pub input: PathBuf,
    /// Print the full resistance matrix.
    #[arg(long)]
    pub matrix: bool,
    /// Node pair `u,v`; repeat for more pairs.
    #[arg(long = "pair", value_parser = parse_pair)]
    pub pairs: Vec<(usize, usize)>,
    #[arg(long, value_enum, default_value = "pseudoinverse")]
    pub method: ResistanceMethodArg,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once(',').ok_or_else(|| format!("expected u,v, got {s:?}"))?;
    let node = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad node id {t:?}: {e}"));
    Ok((node(u)?, node(v)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommunityMethod {
    GirvanNewman,
    Laplacian,
    Adjacency,
    NormalizedLaplacian,
}

#[derive(Debug, Args)]
pub struct CommunitiesArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "girvan-newman")]
    pub method: CommunityMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NullModelArg {
    DegreeSwap,
    ErdosRenyi,
}

#[derive(Debug, Args)]
pub struct MotifsArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "degree-swap")]
    pub null: NullModelArg,
    /// Number of null-model samples.
    #[arg(long, default_value_t = 100)]
    pub ensemble: usize,
    /// Count motifs without scoring them.
    #[arg(long)]
    pub census_only: bool,
}
