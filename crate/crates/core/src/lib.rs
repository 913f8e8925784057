//! Exact computer algebra for deciding which graph drawings admit closed-form
//! coordinates.
//!
//! The crate is `no_std` (it needs `alloc`). It bundles:
//!
//! - [`exact`]: dense univariate polynomials over `Z`, `Q` and `GF(p)`,
//!   rational functions and the coefficient transforms used to produce monic
//!   associates.
//! - [`polyalg`]: factorization over finite fields and over `Z`,
//!   irreducibility tests, subresultant resultants, discriminants, bivariate
//!   elimination and Chebyshev polynomials.
//! - [`galois`]: Dedekind sampling, symmetric-group certificates and their
//!   verifier, computability verdicts, and the number theory behind degree
//!   lower bounds.
//! - [`graphlab`]: graphs, exact graph matrices, characteristic polynomials,
//!   eigenvectors and the spectral certification pipeline.
//! - [`equilib`]: Fruchterman–Reingold and Kamada–Kawai force models, the
//!   symbolic three-edge path derivation and a numeric equilibrium solver.
//! - [`packing`]: numeric circle packing, Möbius maps, concentric
//!   normalization and the symbolic `Pack(2, n)` derivation.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod equilib;
pub mod error;
pub mod exact;
pub mod galois;
pub mod graphlab;
pub mod packing;
pub mod polyalg;

pub use error::{Error, Result};
