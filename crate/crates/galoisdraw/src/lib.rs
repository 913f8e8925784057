//! Command line, file formats and figures for `galoisdraw-core`.
//!
//! - [`spec`]: graph descriptors such as `cycle:7`, `pack:2:5` or
//!   `file:PATH`.
//! - [`polytext`]: coefficient lists and bivariate expressions.
//! - [`json`]: certificate and report documents, and their verifier.
//! - [`svg`]: standalone figures of layouts and packings.
//! - [`textfmt`]: `x y` layouts and `cx cy r` packings.
//! - [`cli`]: the verbs behind the `galoisdraw` binary.

pub mod cli;
pub mod json;
pub mod polytext;
pub mod spec;
pub mod svg;
pub mod textfmt;
