//! Closed neighborhood corona product of graphs.
//!
//! The crate builds `G1 ⊠ G2`, computes exact integer characteristic
//! polynomials and coronals of graph matrices, and evaluates the closed
//! forms for the product's adjacency, Laplacian and signless Laplacian
//! spectra, Kirchhoff index, spanning-tree count, energy and integrality.
//! Every closed form has an independent direct path (eigensolve, Matrix-Tree
//! determinant, exact charpoly of the built product) and [`verify`] runs the
//! two against each other over seeded random factor pairs.

pub mod catalog;
pub mod charpoly;
pub mod corona;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod par;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod spectra;
pub mod verify;

pub use charpoly::{
    charpoly, charpoly_and_adjugate_sum, coronal_of, coronal_of_graph, CoronalDecomposition,
};
pub use corona::{closed_neighborhood_corona, product_counts, ProductCounts};
pub use error::{Error, Result};
pub use graph::{make_family, Family, Graph, MatrixKind, SymMatrix};
pub use io::{parse_edge_list, parse_graph6, serialize_graph, Format};
pub use poly::IntPoly;
pub use rational::RationalFn;
pub use spectra::{
    adjacency_spectrum_formula, laplacian_spectrum_formula, signless_spectrum_formula,
    symmetric_eigenvalues, Spectrum,
};
