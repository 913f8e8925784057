//! Force-directed equilibria: numeric solvers and the exact pipelines for
//! the four-vertex path (FR) and the four-vertex `kk4` graph (KK).

pub mod forces;
pub mod kk;
pub mod p3;
pub mod solver;

pub use forces::{fr_forces, kk_energy_gradient, ForceKind, ForceModel, Layout, Point};
pub use kk::{kk_certify, kk_numeric, KkNumeric, KkReport};
pub use p3::{fr_p3_certify, fr_p3_numeric, fr_p3_system, FrP3Numeric, FrP3Report, P3_ELIMINANT};
pub use solver::{cycle_equilibrium_radius, numeric_equilibrium};
