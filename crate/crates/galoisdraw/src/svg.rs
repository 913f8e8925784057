//! Standalone SVG figures. The y axis points up, so coordinates are
//! mirrored on output.

use std::fmt::Write;

use galoisdraw_core::equilib::Point;
use galoisdraw_core::packing::Packing;

const PADDING: f64 = 0.05;
const STROKE: f64 = 0.004;
const POINT_RADIUS: f64 = 0.012;

struct Bounds {
    min: [f64; 2],
    max: [f64; 2],
}

impl Bounds {
    fn empty() -> Self {
        Bounds {
            min: [f64::INFINITY; 2],
            max: [f64::NEG_INFINITY; 2],
        }
    }

    fn include(&mut self, x: f64, y: f64, r: f64) {
        self.min[0] = self.min[0].min(x - r);
        self.min[1] = self.min[1].min(-y - r);
        self.max[0] = self.max[0].max(x + r);
        self.max[1] = self.max[1].max(-y + r);
    }

    /// `(x, y, w, h)` of the padded view box and the figure scale.
    fn view(&self) -> ([f64; 4], f64) {
        if !(self.min[0] <= self.max[0]) {
            return ([0.0, 0.0, 1.0, 1.0], 1.0);
        }
        let w = self.max[0] - self.min[0];
        let h = self.max[1] - self.min[1];
        let scale = if w.max(h) > 0.0 { w.max(h) } else { 1.0 };
        let pad = if w.max(h) > 0.0 { PADDING * scale } else { 0.5 };
        (
            [
                self.min[0] - pad,
                self.min[1] - pad,
                w + 2.0 * pad,
                h + 2.0 * pad,
            ],
            scale,
        )
    }
}

fn header(out: &mut String, view: [f64; 4]) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        view[0], view[1], view[2], view[3]
    );
}

/// Vertices as filled dots and edges as segments.
pub fn layout_svg(points: &[Point], edges: &[(usize, usize)]) -> String {
    let mut b = Bounds::empty();
    for p in points {
        b.include(p[0], p[1], 0.0);
    }
    let (view, scale) = b.view();
    let mut out = String::new();
    header(&mut out, view);
    let _ = writeln!(
        out,
        "<g stroke=\"black\" stroke-width=\"{:.6}\">",
        STROKE * scale
    );
    for &(u, v) in edges {
        let (p, q) = (points[u], points[v]);
        let _ = writeln!(
            out,
            "<line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\"/>",
            p[0], -p[1], q[0], -q[1]
        );
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for p in points {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\"/>",
            p[0],
            -p[1],
            POINT_RADIUS * scale
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// One stroked circle per vertex.
pub fn packing_svg(p: &Packing) -> String {
    let mut b = Bounds::empty();
    for c in &p.circles {
        b.include(c.center.re, c.center.im, c.radius);
    }
    let (view, scale) = b.view();
    let mut out = String::new();
    header(&mut out, view);
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{:.6}\">",
        STROKE * scale
    );
    for c in &p.circles {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\"/>",
            c.center.re, -c.center.im, c.radius
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_layout_is_a_document() {
        let s = layout_svg(&[], &[]);
        assert!(s.starts_with("<svg "));
        assert!(s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<circle").count(), 0);
    }

    #[test]
    fn padding_is_five_percent() {
        let s = layout_svg(&[[0.0, 0.0], [10.0, 0.0], [10.0, 10.0]], &[(0, 1)]);
        assert!(s.contains("viewBox=\"-0.500000 -10.500000 11.000000 11.000000\""));
        assert_eq!(s.matches("<line").count(), 1);
    }
}
