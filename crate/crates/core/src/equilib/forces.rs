use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::graphlab::Graph;
use crate::{Error, Result};

pub type Point = [f64; 2];

#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    pub positions: Vec<Point>,
}

impl Layout {
    pub fn new(positions: Vec<Point>) -> Self {
        Layout { positions }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `n` points on a circle of radius `r`, vertex `i` at angle `2 pi i / n`.
    pub fn regular_polygon(n: usize, r: f64) -> Self {
        let step = 2.0 * core::f64::consts::PI / n as f64;
        Layout::new(
            (0..n)
                .map(|i| {
                    let t = step * i as f64;
                    [r * Float::cos(t), r * Float::sin(t)]
                })
                .collect(),
        )
    }

    fn check_distinct(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if dist(self.positions[i], self.positions[j]) == 0.0 {
                    return Err(Error::Coincident(i, j));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForceKind {
    Fr,
    Kk,
}

/// Force model and its scale constants, all 1 by default.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ForceModel {
    pub kind: ForceKind,
    /// Fruchterman–Reingold optimal distance.
    pub k: f64,
    /// Kamada–Kawai unit length: `l_ij = L d_ij`.
    pub l: f64,
    /// Kamada–Kawai spring scale: `k_ij = K / d_ij^2`.
    pub kk: f64,
}

impl ForceModel {
    pub fn fr() -> Self {
        ForceModel {
            kind: ForceKind::Fr,
            k: 1.0,
            l: 1.0,
            kk: 1.0,
        }
    }

    pub fn kamada_kawai() -> Self {
        ForceModel {
            kind: ForceKind::Kk,
            ..Self::fr()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.k > 0.0 && self.l > 0.0 && self.kk > 0.0) {
            return Err(Error::InvalidArgument(
                "force scales must be positive".into(),
            ));
        }
        Ok(())
    }
}

pub(crate) fn dist(p: Point, q: Point) -> f64 {
    Float::hypot(p[0] - q[0], p[1] - q[1])
}

/// Net Fruchterman–Reingold force: `d^2 / k` pulling along every edge and
/// `k^2 / d` pushing between every pair.
pub fn fr_forces(g: &Graph, layout: &Layout, k: f64) -> Result<Vec<Point>> {
    check_sizes(g, layout)?;
    layout.check_distinct()?;
    let n = g.n();
    let mut f = vec![[0.0; 2]; n];
    let p = &layout.positions;
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (p[j][0] - p[i][0], p[j][1] - p[i][1]);
            let d = Float::hypot(dx, dy);
            let mut mag = -k * k / d;
            if g.has_edge(i, j) {
                mag += d * d / k;
            }
            // Positive `mag` moves i toward j.
            let (ux, uy) = (dx / d, dy / d);
            f[i][0] += mag * ux;
            f[i][1] += mag * uy;
            f[j][0] -= mag * ux;
            f[j][1] -= mag * uy;
        }
    }
    Ok(f)
}

fn check_sizes(g: &Graph, layout: &Layout) -> Result<()> {
    if g.n() != layout.len() {
        return Err(Error::InvalidArgument(alloc::format!(
            "layout has {} points for {} vertices",
            layout.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Hop distances; errors on a disconnected graph.
pub(crate) fn hop_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.n())
        .map(|s| {
            g.bfs(s)
                .into_iter()
                .map(|d| d.ok_or_else(|| Error::InvalidGraph("graph is disconnected".into())))
                .collect()
        })
        .collect()
}

/// Kamada–Kawai energy `sum_{i<j} k_ij (|p_i - p_j| - l_ij)^2 / 2` and its
/// gradient.
pub fn kk_energy_gradient(
    g: &Graph,
    layout: &Layout,
    model: &ForceModel,
) -> Result<(f64, Vec<Point>)> {
    check_sizes(g, layout)?;
    model.validate()?;
    layout.check_distinct()?;
    let hops = hop_matrix(g)?;
    kk_with_hops(&hops, layout, model)
}

pub(crate) fn kk_with_hops(
    hops: &[Vec<usize>],
    layout: &Layout,
    model: &ForceModel,
) -> Result<(f64, Vec<Point>)> {
    let n = layout.len();
    let p = &layout.positions;
    let mut e = 0.0;
    let mut grad = vec![[0.0; 2]; n];
    for i in 0..n {
        for j in i + 1..n {
            let dij = hops[i][j] as f64;
            let l = model.l * dij;
            let kij = model.kk / (dij * dij);
            let (dx, dy) = (p[i][0] - p[j][0], p[i][1] - p[j][1]);
            let d = Float::hypot(dx, dy);
            if d == 0.0 {
                return Err(Error::Coincident(i, j));
            }
            e += 0.5 * kij * (d - l) * (d - l);
            let s = kij * (d - l) / d;
            grad[i][0] += s * dx;
            grad[i][1] += s * dy;
            grad[j][0] -= s * dx;
            grad[j][1] -= s * dy;
        }
    }
    Ok((e, grad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphlab::{build_graph, GraphSpec};

    #[test]
    fn unit_edge_balances() {
        let g = build_graph(&GraphSpec::Path(2)).unwrap();
        let f = fr_forces(&g, &Layout::new(vec![[0.0, 0.0], [1.0, 0.0]]), 1.0).unwrap();
        assert!(f.iter().flatten().all(|v| v.abs() < 1e-15));
        let one = Graph::new(1, &[]).unwrap();
        assert_eq!(
            fr_forces(&one, &Layout::new(vec![[3.0, 4.0]]), 1.0).unwrap(),
            vec![[0.0, 0.0]]
        );
    }

    #[test]
    fn p3_end_force() {
        let g = build_graph(&GraphSpec::Path(4)).unwrap();
        let (a, b) = (0.9, 1.3);
        let lay = Layout::new(vec![[0.0, 0.0], [a, 0.0], [a + b, 0.0], [2.0 * a + b, 0.0]]);
        let f = fr_forces(&g, &lay, 1.0).unwrap();
        let p = 2.0 * a.powi(5) + 3.0 * a.powi(4) * b + a.powi(3) * b * b
            - 5.0 * a * a
            - 5.0 * a * b
            - b * b;
        let den = 2.0 * a.powi(3) + 3.0 * a * a * b + a * b * b;
        assert!((f[0][0].abs() - p.abs() / den).abs() < 1e-12);
    }

    #[test]
    fn kk_rest_and_stretched() {
        let g = build_graph(&GraphSpec::Path(2)).unwrap();
        let m = ForceModel::kamada_kawai();
        let (e, grad) =
            kk_energy_gradient(&g, &Layout::new(vec![[0.0, 0.0], [1.0, 0.0]]), &m).unwrap();
        assert_eq!(e, 0.0);
        assert!(grad.iter().flatten().all(|v| *v == 0.0));
        let (e, _) =
            kk_energy_gradient(&g, &Layout::new(vec![[0.0, 0.0], [2.0, 0.0]]), &m).unwrap();
        assert!((e - 0.5).abs() < 1e-15);
    }

    #[test]
    fn coincident_rejected() {
        let g = build_graph(&GraphSpec::Path(2)).unwrap();
        let lay = Layout::new(vec![[1.0, 1.0], [1.0, 1.0]]);
        assert_eq!(fr_forces(&g, &lay, 1.0), Err(Error::Coincident(0, 1)));
    }
}
