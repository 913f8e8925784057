//! Numeric circle packing of maximal planar graphs by radius relaxation.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::circle::{verify_packing, Circle, Packing};
use crate::graphlab::Graph;
use crate::{Error, Result};

pub const RELAXATION: f64 = 0.5;
pub const ANGLE_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100_000;

/// Faces of a maximal planar graph, each a triangle whose removal leaves
/// the rest connected. Errors when the graph is not a triangulation.
pub fn triangulation_faces(g: &Graph) -> Result<Vec<[usize; 3]>> {
    let n = g.n();
    if n < 4 {
        return Err(Error::InvalidGraph(
            "packing needs at least 4 vertices".into(),
        ));
    }
    if g.edge_count() != 3 * n - 6 {
        return Err(Error::InvalidGraph(format!(
            "{} edges; a maximal planar graph on {} vertices has {}",
            g.edge_count(),
            n,
            3 * n - 6
        )));
    }
    let mut faces = Vec::new();
    for &(i, j) in g.edges() {
        for &k in g.neighbors(j) {
            if k > j && g.has_edge(i, k) && !separates(g, [i, j, k]) {
                faces.push([i, j, k]);
            }
        }
    }
    if faces.len() != 2 * n - 4 {
        return Err(Error::InvalidGraph(format!(
            "{} facial triangles; expected {}",
            faces.len(),
            2 * n - 4
        )));
    }
    let mut per_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in &faces {
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
            *per_edge.entry((u, v)).or_default() += 1;
        }
    }
    if per_edge.len() != g.edge_count() || per_edge.values().any(|&c| c != 2) {
        return Err(Error::InvalidGraph(
            "faces do not form a triangulated sphere".into(),
        ));
    }
    Ok(faces)
}

fn separates(g: &Graph, t: [usize; 3]) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|v| !t.contains(v)) else {
        return false;
    };
    let mut seen = vec![false; n];
    for &v in &t {
        seen[v] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count != n - 3
}

/// Orient all faces coherently, with `outer` keeping its given order.
fn orient(faces: &[[usize; 3]], outer: [usize; 3]) -> Result<Vec<[usize; 3]>> {
    let key = |f: &[usize; 3]| {
        let mut s = *f;
        s.sort_unstable();
        s
    };
    let start = faces
        .iter()
        .position(|f| key(f) == key(&outer))
        .ok_or_else(|| Error::InvalidArgument(format!("{:?} is not a face", outer)))?;
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (idx, f) in faces.iter().enumerate() {
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            by_edge.entry((u.min(v), u.max(v))).or_default().push(idx);
        }
    }
    let mut oriented: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
    oriented[start] = Some(outer);
    let mut queue = VecDeque::from([start]);
    while let Some(idx) = queue.pop_front() {
        let f = oriented[idx].expect("queued faces are oriented");
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            for &other in &by_edge[&(u.min(v), u.max(v))] {
                if other == idx {
                    continue;
                }
                let w = faces[other]
                    .iter()
                    .copied()
                    .find(|x| *x != u && *x != v)
                    .expect("triangle has a third vertex");
                let want = [v, u, w];
                match oriented[other] {
                    None => {
                        oriented[other] = Some(want);
                        queue.push_back(other);
                    }
                    Some(have) => {
                        if !same_rotation(have, want) {
                            return Err(Error::InvalidGraph(
                                "faces cannot be oriented coherently".into(),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(oriented
        .into_iter()
        .map(|f| f.expect("faces connected"))
        .collect())
}

fn same_rotation(a: [usize; 3], b: [usize; 3]) -> bool {
    (0..3).any(|s| (0..3).all(|i| a[(i + s) % 3] == b[i]))
}

/// Angle at the circle of radius `r` in the triangle of centres of three
/// mutually tangent circles.
fn corner(r: f64, ru: f64, rw: f64) -> f64 {
    let (a, b, c) = (r + ru, r + rw, ru + rw);
    let cos = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
    Float::acos(cos)
}

/// `theta(v) - 2 pi` for every vertex not on the outer face.
pub fn angle_sum_defects(
    n: usize,
    faces: &[[usize; 3]],
    outer: [usize; 3],
    radii: &[f64],
) -> Vec<(usize, f64)> {
    let mut sums = vec![0.0; n];
    for f in faces {
        for s in 0..3 {
            let (v, u, w) = (f[s], f[(s + 1) % 3], f[(s + 2) % 3]);
            sums[v] += corner(radii[v], radii[u], radii[w]);
        }
    }
    (0..n)
        .filter(|v| !outer.contains(v))
        .map(|v| (v, sums[v] - 2.0 * PI))
        .collect()
}

/// Outer face used when none is given: the lexicographically first face.
pub fn default_outer_face(faces: &[[usize; 3]]) -> [usize; 3] {
    let mut fs: Vec<[usize; 3]> = faces.to_vec();
    fs.sort_unstable();
    fs[0]
}

/// Circle packing with the three outer circles fixed at radius 1 and
/// mutually tangent. Interior radii are relaxed until every angle sum is
/// within `1e-12` of `2 pi`; the centres are then laid out face by face
/// and the result is checked to `tol`.
pub fn pack_graph_numeric(g: &Graph, outer: Option<[usize; 3]>, tol: f64) -> Result<Packing> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let faces = triangulation_faces(g)?;
    let outer = outer.unwrap_or_else(|| default_outer_face(&faces));
    let oriented = orient(&faces, outer)?;
    let n = g.n();
    let inner: Vec<usize> = (0..n).filter(|v| !outer.contains(v)).collect();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in &oriented {
        for s in 0..3 {
            incident[f[s]].push((f[(s + 1) % 3], f[(s + 2) % 3]));
        }
    }
    let mut radii = vec![1.0; n];
    let mut residual = f64::INFINITY;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        residual = 0.0;
        for &v in &inner {
            let theta: f64 = incident[v]
                .iter()
                .map(|&(u, w)| corner(radii[v], radii[u], radii[w]))
                .sum();
            residual = residual.max((theta - 2.0 * PI).abs());
            let k = incident[v].len() as f64;
            let beta = Float::sin(theta / (2.0 * k));
            let delta = Float::sin(PI / k);
            let uniform = radii[v] * beta / (1.0 - beta);
            let target = uniform * (1.0 - delta) / delta;
            radii[v] = (1.0 - RELAXATION) * radii[v] + RELAXATION * target;
        }
        if residual < ANGLE_TOLERANCE {
            converged = true;
            break;
        }
    }
    let centers = layout(n, &oriented, outer, &radii)?;
    if !converged {
        return Err(Error::NoConvergence {
            iterations: MAX_SWEEPS,
            residual,
            last: centers.iter().map(|z| [z.re, z.im]).collect(),
        });
    }
    let packing = Packing {
        circles: centers
            .into_iter()
            .zip(&radii)
            .map(|(center, &radius)| Circle { center, radius })
            .collect(),
        outer: None,
    };
    verify_packing(g, &packing, tol)?;
    Ok(packing)
}

/// Centres from radii: the outer face clockwise, so that every other
/// coherently oriented face is counterclockwise; then repeatedly place the
/// third vertex of a face with two placed vertices.
fn layout(
    n: usize,
    faces: &[[usize; 3]],
    outer: [usize; 3],
    radii: &[f64],
) -> Result<Vec<Complex64>> {
    let mut pos: Vec<Option<Complex64>> = vec![None; n];
    let [o0, o1, o2] = outer;
    let (r0, r1, r2) = (radii[o0], radii[o1], radii[o2]);
    pos[o0] = Some(Complex64::new(0.0, 0.0));
    pos[o1] = Some(Complex64::new(r0 + r1, 0.0));
    let alpha = corner(r0, r1, r2);
    pos[o2] = Some(Complex64::from_polar(r0 + r2, -alpha));
    let mut remaining = n - 3;
    while remaining > 0 {
        let mut progress = false;
        for f in faces {
            for s in 0..3 {
                let (u, v, w) = (f[s], f[(s + 1) % 3], f[(s + 2) % 3]);
                if let (Some(pu), Some(pv), None) = (pos[u], pos[v], pos[w]) {
                    let dir = (pv - pu) / (pv - pu).norm();
                    let a = corner(radii[u], radii[v], radii[w]);
                    pos[w] = Some(pu + dir * Complex64::from_polar(radii[u] + radii[w], a));
                    remaining -= 1;
                    progress = true;
                }
            }
        }
        if !progress {
            return Err(Error::Geometry(
                "layout could not reach every vertex".into(),
            ));
        }
    }
    Ok(pos.into_iter().map(|p| p.expect("placed")).collect())
}
