use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node {node} out of range for a graph with {n} nodes")]
    OutOfRange { node: usize, n: usize },

    #[error("duplicate edge ({0}, {1}) in a simple graph")]
    DuplicateEdgeInSimpleGraph(usize, usize),

    #[error("self-loop at node {0} in a simple graph")]
    SelfLoopInSimpleGraph(usize),

    #[error("operation requires an undirected graph")]
    DirectedUnsupported,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("nodes {0} and {1} lie in different connected components")]
    DifferentComponents(usize, usize),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("graph contains a cycle whose length is a multiple of four")]
    CycleOfLength4s,

    #[error("graph is acyclic")]
    Acyclic,

    #[error("graph has an odd number of nodes")]
    OddNodeCount,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not square: {0} x {1}")]
    NotSquare(usize, usize),

    #[error("iteration did not converge")]
    NoConvergence,

    #[error("resolvent parameter {0} coincides with an eigenvalue")]
    SingularResolvent(f64),

    #[error("matrix is singular")]
    Singular,

    #[error("no edge with index {0}")]
    NoSuchEdge(usize),

    #[error("edge {0} is a bridge or a loop")]
    BridgeOrLoop(usize),

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },

    #[error("Feynman graph has no external legs")]
    NoExternalLegs,

    #[error("ground constant K = {k} must exceed the largest adjacency eigenvalue {lambda_max}")]
    KTooSmall { k: f64, lambda_max: f64 },

    #[error("attenuation factor {eta} must exceed the spectral radius {lambda_max}")]
    EtaTooSmall { eta: f64, lambda_max: f64 },

    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),

    #[error("invalid ring degree k = {k} for n = {n} (k must be even and below n)")]
    BadK { k: usize, n: usize },

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("power-law fit needs at least 3 support points, got {0}")]
    DegenerateFit(usize),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("null ensemble has zero variance")]
    DegenerateEnsemble,

    #[error("step size {epsilon} outside (0, 1/{max_degree})")]
    BadEpsilon { epsilon: f64, max_degree: f64 },

    #[error("invalid initial state: {0}")]
    BadInitialState(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
