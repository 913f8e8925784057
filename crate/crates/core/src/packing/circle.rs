use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::graphlab::Graph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Complex64,
    pub radius: f64,
}

impl Circle {
    pub fn new(cx: f64, cy: f64, radius: f64) -> Self {
        Circle {
            center: Complex64::new(cx, cy),
            radius,
        }
    }
}

/// One circle per vertex. The disk of `outer`, when set, is the exterior
/// of its circle, so that circle encloses the others.
#[derive(Clone, Debug, PartialEq)]
pub struct Packing {
    pub circles: Vec<Circle>,
    pub outer: Option<usize>,
}

/// Worst tangency error and worst overlap of a packing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PackingCheck {
    pub max_tangency_error: f64,
    /// Largest amount by which two non-adjacent disks overlap (0 if none).
    pub max_overlap: f64,
}

/// `signed gap` between disks `i` and `j`: zero for tangency, negative
/// for overlap.
fn gap(p: &Packing, i: usize, j: usize) -> f64 {
    let (ci, cj) = (&p.circles[i], &p.circles[j]);
    let d = (ci.center - cj.center).norm();
    if p.outer == Some(i) {
        ci.radius - cj.radius - d
    } else if p.outer == Some(j) {
        cj.radius - ci.radius - d
    } else {
        d - ci.radius - cj.radius
    }
}

pub fn check_packing(g: &Graph, p: &Packing) -> Result<PackingCheck> {
    if p.circles.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "{} circles for {} vertices",
            p.circles.len(),
            g.n()
        )));
    }
    let mut check = PackingCheck {
        max_tangency_error: 0.0,
        max_overlap: 0.0,
    };
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let s = gap(p, i, j);
            if g.has_edge(i, j) {
                check.max_tangency_error = check.max_tangency_error.max(s.abs());
            } else {
                check.max_overlap = check.max_overlap.max(-s);
            }
        }
    }
    Ok(check)
}

/// Errors unless every edge is a tangency and every non-edge a pair of
/// disjoint disks, both to within `tol`.
pub fn verify_packing(g: &Graph, p: &Packing, tol: f64) -> Result<PackingCheck> {
    let c = check_packing(g, p)?;
    if !(c.max_tangency_error < tol) {
        return Err(Error::Geometry(format!(
            "tangency error {:e} exceeds {:e}",
            c.max_tangency_error, tol
        )));
    }
    if !(c.max_overlap < tol) {
        return Err(Error::Geometry(format!(
            "non-adjacent disks overlap by {:e}",
            c.max_overlap
        )));
    }
    Ok(c)
}
