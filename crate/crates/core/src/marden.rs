//! Ellipses inscribed in a triangle from the partial-fraction roots of
//! Marden's theorem.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geom::Point;

/// An ellipse inscribed in a triangle, described by its foci and its
/// points of contact with the three sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MardenEllipse {
    pub foci: [Point; 2],
    /// `tangency[k]` lies on the side opposite vertex `k`.
    pub tangency: [Point; 3],
}

impl MardenEllipse {
    /// `|P − F1| + |P − F2|`; constant (the major axis length) on the ellipse.
    pub fn focal_sum(&self, p: Point) -> f64 {
        p.distance(self.foci[0]) + p.distance(self.foci[1])
    }

    pub fn semi_major(&self) -> f64 {
        0.5 * self.focal_sum(self.tangency[0])
    }
}

fn c(p: Point) -> Complex64 {
    Complex64::new(p.x, p.y)
}

fn pt(z: Complex64) -> Point {
    Point::new(z.re, z.im)
}

/// Foci and contact points of the ellipse inscribed in the triangle `z`
/// whose foci are the zeros of `Σ t_k / (x − z_k)`.
///
/// The weights are normalized to sum to one and must all be positive.
pub fn marden_foci(z: [Point; 3], t: [f64; 3]) -> Result<MardenEllipse> {
    if !z.iter().all(|p| p.is_finite()) || !t.iter().all(|w| w.is_finite()) {
        return Err(Error::NonFinite);
    }
    let total: f64 = t.iter().sum();
    if total.is_nan() || total <= 0.0 || t.iter().any(|&w| w.is_nan() || w <= 0.0) {
        return Err(Error::NonPositiveWeights);
    }
    let t = t.map(|w| w / total);
    let scale = z[0].distance(z[1]).max(z[1].distance(z[2])).max(z[2].distance(z[0]));
    if (z[1] - z[0]).cross(z[2] - z[0]).abs() <= 1e-12 * scale * scale {
        return Err(Error::CollinearTriangle);
    }
    let [z1, z2, z3] = z.map(c);
    let [t1, t2, t3] = t;
    // numerator of the partial fractions: x² − bx + k
    let b = t1 * (z2 + z3) + t2 * (z1 + z3) + t3 * (z1 + z2);
    let k = t1 * z2 * z3 + t2 * z1 * z3 + t3 * z1 * z2;
    let root = (b * b - 4.0 * k).sqrt();
    let foci = [pt(0.5 * (b - root)), pt(0.5 * (b + root))];
    let tangency =
        [pt((t2 * z3 + t3 * z2) / (t2 + t3)), pt((t1 * z3 + t3 * z1) / (t1 + t3)), pt((t1 * z2 + t2 * z1) / (t1 + t2))];
    Ok(MardenEllipse { foci, tangency })
}
