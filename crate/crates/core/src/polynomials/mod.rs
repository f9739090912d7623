//! Tutte polynomial, chromatic polynomial and the Potts partition function.

mod multigraph;
mod poly;
mod potts;
mod tutte;

pub use multigraph::Multigraph;
pub use poly::{BivariatePolynomial, Polynomial};
pub use potts::{
    chromatic_from_tutte, chromatic_from_zero_t_limit, chromatic_polynomial, enumerate_states,
    potts_partition, state_probability, Hamiltonian, PottsPartition,
};
pub use tutte::{tutte_evaluations, tutte_polynomial, TutteEvaluations};
