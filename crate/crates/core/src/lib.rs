pub mod centrality;
pub mod communities;
pub mod dynamics;
pub mod electrical;
pub mod ensembles;
pub mod error;
pub mod graph;
pub mod io;
pub mod motifs;
pub mod oscillators;
pub mod polynomials;
pub mod spectral;
pub mod statmech;
pub mod symanzik;
pub mod tight_binding;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
