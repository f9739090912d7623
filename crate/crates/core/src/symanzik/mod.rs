//! Symanzik and Kirchhoff polynomials of scalar Feynman graphs, computed from
//! spanning forests, from Laplacian minors and from the modified Laplacian.

mod feynman;
mod forests;
mod methods;
mod mpoly;

pub use feynman::{FeynmanEdge, FeynmanGraph, Leg};
pub use forests::{spanning_2forests, spanning_trees, TwoForest};
pub use methods::{
    determinant, eliminate_last_momentum, first_symanzik_from_kirchhoff, first_symanzik_trees,
    invert_parameters, kirchhoff_polynomial, modified_laplacian_expansion, second_symanzik,
    symanzik_deletion_contraction_check, symbolic_laplacian, ModifiedLaplacian,
};
pub use mpoly::{Monomial, MultivariatePolynomial, Var};
