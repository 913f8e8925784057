use alloc::vec::Vec;

use super::circle::Packing;
use super::mobius::{concentric_map, MobiusMap};
use crate::graphlab::Graph;
use crate::{Error, Result};

/// Canonical concentric form: `hub1` and `hub2` concentric about the
/// origin with `hub2` enclosing, the lowest-numbered circle tangent to both
/// hubs scaled to radius 1 with its centre on the positive real axis.
pub fn normalize_concentric(g: &Graph, p: &Packing, hub1: usize, hub2: usize) -> Result<Packing> {
    let n = p.circles.len();
    if hub1 >= n || hub2 >= n || hub1 == hub2 || g.n() != n {
        return Err(Error::InvalidArgument("bad hub indices".into()));
    }
    let designated = (0..n)
        .find(|&v| g.has_edge(v, hub1) && g.has_edge(v, hub2))
        .ok_or_else(|| Error::InvalidGraph("no vertex is adjacent to both hubs".into()))?;
    let m = concentric_map(&p.circles[hub1], &p.circles[hub2])?;
    let moved = apply_to_packing(&m, p)?;
    let origin = moved.circles[hub1].center;
    let t = moved.circles[designated].center - origin;
    let rd = moved.circles[designated].radius;
    let norm = t.norm();
    if norm == 0.0 {
        return Err(Error::Geometry(
            "designated circle is centred on the hubs".into(),
        ));
    }
    let s = t.conj() / (norm * rd);
    let affine = MobiusMap::affine(s, -origin * s)?;
    let out = apply_to_packing(&affine, &moved)?;
    if out.outer != Some(hub2) {
        return Err(Error::Geometry(
            "second hub does not enclose the packing".into(),
        ));
    }
    Ok(out)
}

/// Image of every circle. At most one disk may end up as an exterior.
pub fn apply_to_packing(m: &MobiusMap, p: &Packing) -> Result<Packing> {
    let mut circles = Vec::with_capacity(p.circles.len());
    let mut outer = None;
    for (i, c) in p.circles.iter().enumerate() {
        let (img, flipped) = m.apply_circle(c)?;
        if flipped != (p.outer == Some(i)) {
            if outer.is_some() {
                return Err(Error::Geometry(
                    "more than one disk maps to an exterior".into(),
                ));
            }
            outer = Some(i);
        }
        circles.push(img);
    }
    Ok(Packing { circles, outer })
}

/// Angular positions of `vertices` about the origin, in `[0, 2 pi)`.
pub fn angles(p: &Packing, vertices: &[usize]) -> Vec<f64> {
    vertices
        .iter()
        .map(|&v| {
            let a = p.circles[v].center.arg();
            if a < 0.0 {
                a + 2.0 * core::f64::consts::PI
            } else {
                a
            }
        })
        .collect()
}

pub fn max_center_shift(a: &Packing, b: &Packing) -> f64 {
    a.circles
        .iter()
        .zip(&b.circles)
        .map(|(x, y)| {
            (x.center - y.center)
                .norm()
                .max((x.radius - y.radius).abs())
        })
        .fold(0.0, f64::max)
}
