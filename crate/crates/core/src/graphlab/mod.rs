//! Graphs, exact graph matrices, characteristic polynomials and the
//! spectral certification pipeline.

pub mod graph;
pub mod matrix;
pub mod spectral;

pub use graph::{build_graph, pack_layout, Graph, GraphSpec, PackLayout};
pub use matrix::{
    apsp_squared, charpoly_exact, graph_matrix, rational_eigenvectors, ExactMatrix, MatrixKind,
};
pub use spectral::{spectral_certify, FactorAnalysis, FactorReport, SpectralReport};
