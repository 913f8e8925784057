//! Möbius maps `z -> (a z + b) / (c z + d)`, optionally preceded by complex
//! conjugation, and the map that makes two disjoint circles concentric.

use num_complex::Complex64;
use num_traits::{Float, Zero};

use super::circle::Circle;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub conjugate_first: bool,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl MobiusMap {
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        conjugate_first: bool,
    ) -> Result<Self> {
        if (a * d - b * c).norm() == 0.0 {
            return Err(Error::Geometry("degenerate map: ad - bc = 0".into()));
        }
        Ok(MobiusMap {
            a,
            b,
            c,
            d,
            conjugate_first,
        })
    }

    pub fn identity() -> Self {
        MobiusMap {
            a: re(1.0),
            b: re(0.0),
            c: re(0.0),
            d: re(1.0),
            conjugate_first: false,
        }
    }

    /// `z -> s z + t`.
    pub fn affine(s: Complex64, t: Complex64) -> Result<Self> {
        Self::new(s, t, re(0.0), re(1.0), false)
    }

    /// Reflection in the circle `|z - q| = r`: `z -> q + r^2 / conj(z - q)`.
    pub fn inversion(q: Complex64, r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::InvalidArgument(
                "inversion radius must be positive".into(),
            ));
        }
        Self::new(q, re(r * r) - q * q.conj(), re(1.0), -q.conj(), true)
    }

    fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Image of `z`; `None` at the pole.
    pub fn apply(&self, z: Complex64) -> Option<Complex64> {
        let z = if self.conjugate_first { z.conj() } else { z };
        let den = self.c * z + self.d;
        if den.is_zero() {
            return None;
        }
        Some((self.a * z + self.b) / den)
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &MobiusMap) -> MobiusMap {
        let (a2, b2, c2, d2) = if self.conjugate_first {
            (
                inner.a.conj(),
                inner.b.conj(),
                inner.c.conj(),
                inner.d.conj(),
            )
        } else {
            (inner.a, inner.b, inner.c, inner.d)
        };
        MobiusMap {
            a: self.a * a2 + self.b * c2,
            b: self.a * b2 + self.b * d2,
            c: self.c * a2 + self.d * c2,
            d: self.c * b2 + self.d * d2,
            conjugate_first: self.conjugate_first != inner.conjugate_first,
        }
    }

    /// Image circle, and whether the disk inside `circle` went to the
    /// outside of the image. Errors when the image is a line.
    pub fn apply_circle(&self, circle: &Circle) -> Result<(Circle, bool)> {
        let q = if self.conjugate_first {
            circle.center.conj()
        } else {
            circle.center
        };
        let r = circle.radius;
        if self.c.is_zero() {
            return Ok((
                Circle {
                    center: (self.a * q + self.b) / self.d,
                    radius: (self.a / self.d).norm() * r,
                },
                false,
            ));
        }
        let q1 = self.c * q + self.d;
        let r1 = self.c.norm() * r;
        let s = q1.norm_sqr() - r1 * r1;
        if s.abs() <= 1e-14 * (q1.norm_sqr() + r1 * r1) {
            return Err(Error::Geometry(
                "circle passes through the pole; its image is a line".into(),
            ));
        }
        let inv_center = q1.conj() / s;
        let inv_radius = r1 / s.abs();
        let k = self.det() / self.c;
        Ok((
            Circle {
                center: self.a / self.c - k * inv_center,
                radius: k.norm() * inv_radius,
            },
            s < 0.0,
        ))
    }
}

/// Map sending `c1` and `c2` to concentric circles with the image of `c2`
/// enclosing the image of `c1`: an inversion centred at one of the two
/// limiting points of the pair. Concentric input gives the identity.
pub fn concentric_map(c1: &Circle, c2: &Circle) -> Result<MobiusMap> {
    let (r1, r2) = (c1.radius, c2.radius);
    if !(r1 > 0.0 && r2 > 0.0) {
        return Err(Error::InvalidArgument("radii must be positive".into()));
    }
    let delta = c2.center - c1.center;
    let dist = delta.norm();
    let scale = r1.max(r2).max(dist);
    let eps = 1e-12 * scale;
    if dist <= eps {
        if (r1 - r2).abs() <= eps {
            return Err(Error::Geometry("circles coincide".into()));
        }
        return Ok(MobiusMap::identity());
    }
    let nested = dist < (r1 - r2).abs() - eps;
    let apart = dist > r1 + r2 + eps;
    if !nested && !apart {
        return Err(Error::Geometry("circles intersect or are tangent".into()));
    }
    let u = delta / dist;
    // Radical axis crossing, then the limiting points at power distance.
    let x = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
    let power = x * x - r1 * r1;
    let root = Float::sqrt(power);
    let mut best: Option<(MobiusMap, f64)> = None;
    for t in [x - root, x + root] {
        let m = MobiusMap::inversion(c1.center + u * t, scale)?;
        let (i1, _) = m.apply_circle(c1)?;
        let (i2, _) = m.apply_circle(c2)?;
        let margin = i2.radius - i1.radius;
        if margin > 0.0 && best.as_ref().map_or(true, |(_, b)| margin > *b) {
            best = Some((m, margin));
        }
    }
    best.map(|(m, _)| m)
        .ok_or_else(|| Error::Geometry("no limiting point gives the requested nesting".into()))
}

/// Radical-axis crossing and limiting points of two non-concentric circles,
/// as positions along the line of centres measured from `c1`.
pub fn limiting_points(c1: &Circle, c2: &Circle) -> Result<(f64, f64, f64)> {
    let dist = (c2.center - c1.center).norm();
    if dist == 0.0 {
        return Err(Error::Geometry("concentric circles".into()));
    }
    let x = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
    let power = x * x - c1.radius * c1.radius;
    if power <= 0.0 {
        return Err(Error::Geometry("circles intersect or are tangent".into()));
    }
    let root = Float::sqrt(power);
    Ok((x, x - root, x + root))
}
