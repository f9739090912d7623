//! Random graph models, their analytic laws and degree-distribution tools.
//!
//! Every generator is a pure function of its parameters and a 64-bit seed.
//! The seed drives a ChaCha8 stream, so identical inputs give identical edge
//! lists on every platform.

mod ba;
mod degree;
mod er;
mod ws;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use ba::{ba_theory, barabasi_albert, BaTheory, BaVariant};
pub use degree::{degree_distribution, fit_power_law, fit_power_law_range, DegreeDistribution, PowerLawFit};
pub use er::{
    empirical_spectral_density, erdos_renyi, er_theory, semicircle_cdf, semicircle_ks_distance, wigner_density,
    ErTheory, Regime, SpectralDensity,
};
pub use ws::{watts_strogatz, ws_clustering, ws_path_length};

/// Seed of a reproducible generator.
pub type Seed = u64;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn rng(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of replica `index` in an ensemble started from `master`: the first
/// word of ChaCha8 stream `index` under key `master`.
pub fn replica_seed(master: Seed, index: u64) -> Seed {
    let mut r = rng(master);
    r.set_stream(index);
    r.next_u64()
}

/// Runs `f` on `count` replica seeds in parallel; results come back in
/// replica order.
pub fn replicas<T: Send>(master: Seed, count: usize, f: impl Fn(Seed) -> T + Sync) -> Vec<T> {
    (0..count as u64).into_par_iter().map(|i| f(replica_seed(master, i))).collect()
}
