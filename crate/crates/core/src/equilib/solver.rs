//! Damped force integration and the regular-polygon radius.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::forces::{fr_forces, hop_matrix, kk_with_hops, ForceKind, ForceModel, Layout, Point};
use crate::graphlab::{build_graph, Graph, GraphSpec};
use crate::{Error, Result};

pub const STEP: f64 = 0.01;
pub const DAMPING: f64 = 0.9;
pub const MAX_ITERATIONS: usize = 1_000_000;

fn max_norm(v: &[Point]) -> f64 {
    v.iter().fold(0.0, |m, p| m.max(Float::hypot(p[0], p[1])))
}

/// Heavy-ball integration `v <- 0.9 v + 0.01 F`, `p <- p + v` until the
/// largest per-vertex force (FR) or gradient (KK) falls below `tol`.
pub fn numeric_equilibrium(
    g: &Graph,
    model: &ForceModel,
    init: &Layout,
    tol: f64,
) -> Result<Layout> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    if init.len() != g.n() {
        return Err(Error::InvalidArgument(
            "layout size differs from graph".into(),
        ));
    }
    let hops = match model.kind {
        ForceKind::Kk => Some(hop_matrix(g)?),
        ForceKind::Fr => None,
    };
    let force = |lay: &Layout| -> Result<Vec<Point>> {
        match &hops {
            None => fr_forces(g, lay, model.k),
            Some(h) => {
                let (_, grad) = kk_with_hops(h, lay, model)?;
                Ok(grad.into_iter().map(|[x, y]| [-x, -y]).collect())
            }
        }
    };
    let mut lay = init.clone();
    let mut vel = vec![[0.0; 2]; g.n()];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let f = force(&lay)?;
        residual = max_norm(&f);
        if residual < tol {
            return Ok(lay);
        }
        if !residual.is_finite() {
            break;
        }
        for ((p, v), fi) in lay.positions.iter_mut().zip(&mut vel).zip(&f) {
            v[0] = DAMPING * v[0] + STEP * fi[0];
            v[1] = DAMPING * v[1] + STEP * fi[1];
            p[0] += v[0];
            p[1] += v[1];
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual,
        last: lay.positions,
    })
}

/// Outward radial force on vertex 0 of the regular `n`-gon of radius `r`.
fn radial_force(g: &Graph, hops: &[Vec<usize>], model: &ForceModel, r: f64) -> Result<f64> {
    let lay = Layout::regular_polygon(g.n(), r);
    let f0 = match model.kind {
        ForceKind::Fr => fr_forces(g, &lay, model.k)?[0],
        ForceKind::Kk => {
            let g0 = kk_with_hops(hops, &lay, model)?.1[0];
            [-g0[0], -g0[1]]
        }
    };
    Ok(f0[0])
}

/// Radius of the regular `n`-gon equilibrium of the cycle `C_n`, by
/// bisection on the radial force.
pub fn cycle_equilibrium_radius(n: usize, model: &ForceModel) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let g = build_graph(&GraphSpec::Cycle(n))?;
    let hops = hop_matrix(&g)?;
    let mut lo = 1e-3;
    let mut hi = 1.0;
    let mut tries = 0;
    while radial_force(&g, &hops, model, lo)? <= 0.0 {
        lo /= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::Geometry("no outward force at small radius".into()));
        }
    }
    tries = 0;
    while radial_force(&g, &hops, model, hi)? >= 0.0 {
        hi *= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::Geometry("no inward force at large radius".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if radial_force(&g, &hops, model, mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilib::forces::fr_forces;

    #[test]
    fn fr_heptagon_radius() {
        for n in [3, 7] {
            let r = cycle_equilibrium_radius(n, &ForceModel::fr()).unwrap();
            let g = build_graph(&GraphSpec::Cycle(n)).unwrap();
            let f = fr_forces(&g, &Layout::regular_polygon(n, r), 1.0).unwrap();
            assert!(max_norm(&f) < 1e-12, "n = {}: {:e}", n, max_norm(&f));
        }
    }

    #[test]
    fn solver_reaches_heptagon() {
        let g = build_graph(&GraphSpec::Cycle(7)).unwrap();
        let r = cycle_equilibrium_radius(7, &ForceModel::fr()).unwrap();
        let mut init = Layout::regular_polygon(7, 1.1 * r);
        init.positions[3][0] += 0.05;
        let out = numeric_equilibrium(&g, &ForceModel::fr(), &init, 1e-10).unwrap();
        let cx = out.positions.iter().map(|p| p[0]).sum::<f64>() / 7.0;
        let cy = out.positions.iter().map(|p| p[1]).sum::<f64>() / 7.0;
        for p in &out.positions {
            assert!((Float::hypot(p[0] - cx, p[1] - cy) - r).abs() < 1e-8);
        }
    }

    #[test]
    fn cap_reports_last_state() {
        // Two unconnected vertices repel forever.
        let g = Graph::new(2, &[]).unwrap();
        let init = Layout::new(vec![[0.0, 0.0], [1.0, 0.0]]);
        assert!(numeric_equilibrium(&g, &ForceModel::fr(), &init, 0.0).is_err());
        match numeric_equilibrium(&g, &ForceModel::fr(), &init, 1e-30) {
            Err(Error::NoConvergence {
                iterations, last, ..
            }) => {
                assert_eq!(iterations, MAX_ITERATIONS);
                assert!(last[1][0] - last[0][0] > 100.0);
            }
            other => panic!("unexpected {:?}", other),
        }
    }
}
