//! Circle packings: a numeric packer for maximal planar graphs, Möbius
//! normalization to concentric form and the symbolic `Pack(2, n)`
//! derivation with its certificates.

pub mod bipyr;
pub mod circle;
pub mod concentric;
pub mod mobius;
pub mod numeric;
pub mod pack2n;

pub use bipyr::bipyr_verdicts;
pub use circle::{check_packing, verify_packing, Circle, Packing, PackingCheck};
pub use concentric::{apply_to_packing, normalize_concentric};
pub use mobius::{concentric_map, limiting_points, MobiusMap};
pub use numeric::{angle_sum_defects, default_outer_face, pack_graph_numeric, triangulation_faces};
pub use pack2n::{
    pack2n_certify, pack2n_numeric, pack2n_polynomial, FactorCertificate, Pack2nNumeric,
    Pack2nPolynomial, Pack2nReport,
};
