//! One-parameter families of ellipses inscribed in a convex quadrilateral.
//!
//! Three normalized frames carry an explicit family:
//!
//! * `Q_{s,t}` (vertices `(0,0), (0,1), (s,t), (1,0)`), parametrized by the
//!   x-coordinate `q` of the tangency point on the bottom side;
//! * `Q_{s,t,v,w}` (vertices `(0,0), (0,1), (s,t), (v,w)`), parametrized by
//!   the height `r` of the tangency point on the left side;
//! * the centered parallelogram with vertices `(−l−d,−k), (−l+d,k),
//!   (l+d,k), (l−d,−k)`, parametrized by `v ∈ (−1, 1)`.
//!
//! [`inscribe`] works on arbitrary convex quadrilaterals by normalizing,
//! building the family member and pulling everything back. Its parameter is
//! always the position of the tangency point on side `A1A2`, as a fraction
//! of the way from `A1` to `A2`.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::affine::{normalize_to_qstvw, AffineMap};
use crate::conic::{ConicCoeffs, EllipseGeometry};
use crate::error::{check_open, Error, Result};
use crate::geom::{line_intersection, Point, Vector};
use crate::poly::Poly;
use crate::quad::{check_family_region, check_qst_region, Quadrilateral, CLASSIFY_TOL};

/// Family parameters must stay this far inside their open intervals.
pub const PARAM_MARGIN: f64 = 1e-9;

/// Relative discriminant size accepted as a double root when recovering
/// tangency points numerically.
const DOUBLE_ROOT_TOL: f64 = 1e-7;

/// Which normalized family produced an [`InscribedEllipse`], with the
/// frame's own parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyFrame {
    Qst { s: f64, t: f64, q: f64 },
    Qstvw { s: f64, t: f64, v: f64, w: f64, r: f64 },
    Parallelogram { l: f64, k: f64, d: f64, v: f64 },
    Incircle,
}

/// A member of the inscribed family together with its points of contact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedEllipse {
    pub conic: ConicCoeffs,
    /// Fraction along `A1 → A2` of the tangency point on `S1`.
    pub param: f64,
    /// Tangency points on `S1..S4`, in side order.
    pub tangency: [Point; 4],
    pub frame: FamilyFrame,
}

impl InscribedEllipse {
    pub fn center(&self) -> Result<Point> {
        self.conic.center()
    }

    pub fn geometry(&self) -> Result<EllipseGeometry> {
        self.conic.geometry()
    }

    pub fn eccentricity(&self) -> Result<f64> {
        Ok(self.geometry()?.eccentricity)
    }

    /// Largest tangency defect against the sides of `q`. For each contact
    /// point this is the maximum of the conic residual (relative to the
    /// coefficient size and the squared diameter), the relative distance
    /// to the side line, and the cosine between the gradient and the side.
    pub fn tangency_defect(&self, q: &Quadrilateral) -> f64 {
        let diam = q.diameter();
        let scale = self.conic.max_abs() * (1.0 + diam * diam);
        let mut worst = 0.0_f64;
        for (p, side) in self.tangency.iter().zip(q.sides()) {
            let residual = self.conic.evaluate(*p).abs() / scale;
            let off_line = side.line_distance(*p) / diam;
            let g = self.conic.gradient(*p);
            let dir = side.direction();
            let cos = if g.norm() == 0.0 { 1.0 } else { g.dot(dir).abs() / (g.norm() * dir.norm()) };
            let u = side.project_param(*p);
            let outside = if u > 0.0 && u < 1.0 { 0.0 } else { 1.0 };
            worst = worst.max(residual).max(off_line).max(cos).max(outside);
        }
        worst
    }
}

fn check_unit_param(name: &'static str, value: f64) -> Result<()> {
    check_open(name, value, 0.0, 1.0, PARAM_MARGIN)
}

/// The ellipse inscribed in `Q_{s,t}` and tangent to the bottom side at `(q, 0)`.
pub fn qst_conic(s: f64, t: f64, q: f64) -> Result<ConicCoeffs> {
    check_qst_region(s, t)?;
    check_unit_param("q", q)?;
    let lead = (1.0 - q) * s + q * t;
    ConicCoeffs::new(
        t * t,
        4.0 * q * q * (t - 1.0) * t + 2.0 * q * t * (s - t + 2.0) - 2.0 * s * t,
        lead * lead,
        -2.0 * q * t * t,
        -2.0 * q * t * lead,
        q * q * t * t,
    )
}

/// Height of the Newton line of `Q_{s,t}` (through the diagonal midpoints
/// `(s/2, t/2)` and `(1/2, 1/2)`) above `x`.
pub fn qst_newton_line(s: f64, t: f64, x: f64) -> f64 {
    0.5 * (s - t + 2.0 * x * (t - 1.0)) / (s - 1.0)
}

/// The inscribed ellipse written around a center `(h, L(h))` on the Newton
/// line, with `q` the tangency abscissa on the bottom side:
///
/// `(x−h)² + (2(q−h)/L)(x−h)(y−L) + (h/L)²(y−L)² + q² − 2qh = 0`.
///
/// Only the member with `h` = [`qst_center_param`] is an ellipse of the family.
pub fn qst_conic_from_center(s: f64, t: f64, q: f64, h: f64) -> Result<ConicCoeffs> {
    check_qst_region(s, t)?;
    check_unit_param("q", q)?;
    let l = qst_newton_line(s, t, h);
    if !(l.is_finite() && l != 0.0) {
        return Err(Error::ParamOutOfRegion { name: "h", value: h });
    }
    ConicCoeffs::new(1.0, 2.0 * (q - h) / l, (h / l).powi(2), -2.0 * q, -2.0 * h * q / l, q * q)
}

/// Abscissa `h` of the center of the `q`-th member of the `Q_{s,t}` family,
/// and the center itself.
pub fn qst_center_param(s: f64, t: f64, q: f64) -> Result<(f64, Point)> {
    check_qst_region(s, t)?;
    check_unit_param("q", q)?;
    let h = 0.5 * (q * (t - s) + s) / (q * (t - 1.0) + 1.0);
    Ok((h, Point::new(h, qst_newton_line(s, t, h))))
}

/// Contact points of the `q`-th member of the `Q_{s,t}` family with `S1..S4`.
pub fn qst_tangency(s: f64, t: f64, q: f64) -> Result<[Point; 4]> {
    check_qst_region(s, t)?;
    check_unit_param("q", q)?;
    let d1 = (t - s) * q + s;
    let d2 = (t - 1.0) * (s + t) * q + s;
    let d3 = (s + t - 2.0) * q + 1.0;
    Ok([
        Point::new(0.0, q * t / d1),
        Point::new((1.0 - q) * s * s / d2, t * (s + q * (t - 1.0)) / d2),
        Point::new((s + q * (t - 1.0)) / d3, (1.0 - q) * t / d3),
        Point::new(q, 0.0),
    ])
}

/// Vertices of the parallelogram frame, clockwise from the lower left.
pub fn parallelogram_vertices(l: f64, k: f64, d: f64) -> [Point; 4] {
    [Point::new(-l - d, -k), Point::new(-l + d, k), Point::new(l + d, k), Point::new(l - d, -k)]
}

fn check_parallelogram(l: f64, k: f64, d: f64, v: f64) -> Result<()> {
    check_open("l", l, 0.0, f64::INFINITY, 0.0)?;
    check_open("k", k, 0.0, f64::INFINITY, 0.0)?;
    check_open("d", d, f64::NEG_INFINITY, l, 0.0)?;
    check_open("v", v, -1.0, 1.0, PARAM_MARGIN)
}

/// Contact points of the `v`-th inscribed ellipse of the parallelogram frame.
pub fn parallelogram_tangency(l: f64, k: f64, d: f64, v: f64) -> Result<[Point; 4]> {
    check_parallelogram(l, k, d, v)?;
    Ok([
        Point::new(-l + d * v, k * v),
        Point::new(-l * v + d, k),
        Point::new(l - d * v, -k * v),
        Point::new(l * v - d, -k),
    ])
}

/// The `v`-th inscribed ellipse of the parallelogram frame, centered at the
/// origin. Writing a side line as `n·x = 1` and its contact point as `p`,
/// the ellipse `xᵀSx = 1` satisfies `Sp = n`; two adjacent sides fix `S`.
pub fn parallelogram_conic(l: f64, k: f64, d: f64, v: f64) -> Result<ConicCoeffs> {
    let pts = parallelogram_tangency(l, k, d, v)?;
    let verts = parallelogram_vertices(l, k, d);
    let normal = |a: Point, b: Point| -> Result<Vector> {
        let m = Matrix2::new(a.x, a.y, b.x, b.y);
        let n = m.try_inverse().ok_or(Error::SingularMap)? * nalgebra::Vector2::new(1.0, 1.0);
        Ok(Vector::new(n.x, n.y))
    };
    let n1 = normal(verts[0], verts[1])?;
    let n2 = normal(verts[1], verts[2])?;
    let normals = Matrix2::new(n1.x, n2.x, n1.y, n2.y);
    let contacts = Matrix2::new(pts[0].x, pts[1].x, pts[0].y, pts[1].y);
    let shape = normals * contacts.try_inverse().ok_or(Error::SingularMap)?;
    let off = 0.5 * (shape[(0, 1)] + shape[(1, 0)]);
    ConicCoeffs::new(shape[(0, 0)], 2.0 * off, shape[(1, 1)], 0.0, 0.0, -1.0)
}

/// Coefficients `A(r), B(r), C(r), D(r), E(r), F(r)` of the `Q_{s,t,v,w}`
/// family as polynomials in `r`. No region check is made.
pub fn qstvw_coeff_polys(s: f64, t: f64, v: f64, w: f64) -> [Poly; 6] {
    let vs = v * s;
    let a = Poly::new(vec![
        t * t * v * v,
        2.0 * v * (s * t - 2.0 * w * s - t * t * v + t * s * w),
        s * s + v * v * t * t + w * w * s * s - 2.0 * t * v * s * (w + 1.0) + 2.0 * w * s * (2.0 * v - s),
    ]);
    let b = Poly::new(vec![-2.0 * vs * v * t, -2.0 * vs * (s * (w + 1.0) - v * t - 2.0 * v), -4.0 * vs * (v - s)]);
    let c = Poly::constant(vs * vs);
    let d = Poly::new(vec![0.0, 2.0 * vs * (2.0 * w * s - t * v), 2.0 * vs * (t * v - s * (w + 1.0))]);
    let e = Poly::new(vec![0.0, -2.0 * vs * vs]);
    let f = Poly::new(vec![0.0, 0.0, vs * vs]);
    [a, b, c, d, e, f]
}

/// The ellipse inscribed in `Q_{s,t,v,w}` and tangent to the left side at `(0, r)`.
pub fn qstvw_conic(s: f64, t: f64, v: f64, w: f64, r: f64) -> Result<ConicCoeffs> {
    check_family_region(s, t, v, w)?;
    check_unit_param("r", r)?;
    let polys = qstvw_coeff_polys(s, t, v, w);
    ConicCoeffs::from_array(polys.map(|p| p.eval(r)))
}

/// Abscissa of the contact point on the bottom side `A4A1` of `Q_{s,t,v,w}`.
pub fn qstvw_bottom_contact(s: f64, t: f64, v: f64, w: f64, r: f64) -> f64 {
    let f2 = v * t - w * s;
    s * v * r / ((s - f2) * r + f2)
}

/// Contact point of `conic` with the segment `a → b`, found as the double
/// root of the conic restricted to the side line.
pub fn double_root_contact(conic: &ConicCoeffs, a: Point, b: Point, side: usize) -> Result<Point> {
    let dir = b - a;
    let (qa, qb, qc) = conic.restrict_to_line(a, dir);
    let disc = qb * qb - 4.0 * qa * qc;
    let scale = (qb * qb).max((4.0 * qa * qc).abs());
    if qa <= 0.0 || disc.is_nan() || disc.abs() > DOUBLE_ROOT_TOL * scale {
        return Err(Error::TangencyNotFound { side });
    }
    let lambda = -qb / (2.0 * qa);
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::TangencyNotFound { side });
    }
    Ok(a + dir * lambda)
}

/// Contact points of the `r`-th member of the `Q_{s,t,v,w}` family. The
/// left and bottom contacts are explicit; the other two are recovered as
/// double roots.
pub fn qstvw_tangency(s: f64, t: f64, v: f64, w: f64, r: f64) -> Result<[Point; 4]> {
    let conic = qstvw_conic(s, t, v, w, r)?;
    let a2 = Point::new(0.0, 1.0);
    let a3 = Point::new(s, t);
    let a4 = Point::new(v, w);
    let x4 = qstvw_bottom_contact(s, t, v, w, r);
    Ok([
        Point::new(0.0, r),
        double_root_contact(&conic, a2, a3, 2)?,
        double_root_contact(&conic, a3, a4, 3)?,
        Point::new(x4, w * x4 / v),
    ])
}

fn pull_back(map: &AffineMap, conic: &ConicCoeffs, tangency: [Point; 4]) -> Result<(ConicCoeffs, [Point; 4])> {
    let inv = map.invert()?;
    Ok((inv.apply_to_conic(conic)?.normalized(), tangency.map(|p| inv.apply(p))))
}

/// The inscribed ellipse of `q` touching `S1` at fraction `param` of the way
/// from `A1` to `A2`.
///
/// Parallelograms are mapped affinely onto the square frame; every other
/// quadrilateral goes through the similarity frame `Q_{s,t,v,w}`.
pub fn inscribe(q: &Quadrilateral, param: f64) -> Result<InscribedEllipse> {
    check_unit_param("r", param)?;
    if q.classify(CLASSIFY_TOL).parallelogram {
        let verts = q.vertices();
        let square = parallelogram_vertices(1.0, 1.0, 0.0);
        let map = AffineMap::from_triangles([verts[0], verts[1], verts[3]], [square[0], square[1], square[3]])?;
        let v = 2.0 * param - 1.0;
        let conic = parallelogram_conic(1.0, 1.0, 0.0, v)?;
        let (conic, tangency) = pull_back(&map, &conic, parallelogram_tangency(1.0, 1.0, 0.0, v)?)?;
        return Ok(InscribedEllipse {
            conic,
            param,
            tangency,
            frame: FamilyFrame::Parallelogram { l: 1.0, k: 1.0, d: 0.0, v },
        });
    }
    let frame = normalize_to_qstvw(q)?;
    let (s, t, v, w) = (frame.s, frame.t, frame.v, frame.w);
    let conic = qstvw_conic(s, t, v, w, param)?;
    let (conic, tangency) = pull_back(&frame.map, &conic, qstvw_tangency(s, t, v, w, param)?)?;
    Ok(InscribedEllipse { conic, param, tangency, frame: FamilyFrame::Qstvw { s, t, v, w, r: param } })
}

/// The inscribed circle of a tangential quadrilateral.
pub fn inscribed_circle(q: &Quadrilateral) -> Result<InscribedEllipse> {
    if !q.classify(CLASSIFY_TOL).tangential {
        return Err(Error::NotTangential);
    }
    let [a1, a2, a3, a4] = *q.vertices();
    let bis1 = (a2 - a1).normalized() + (a4 - a1).normalized();
    let bis2 = (a1 - a2).normalized() + (a3 - a2).normalized();
    let center = line_intersection(a1, bis1, a2, bis2).ok_or(Error::NotTangential)?;
    let radius = q.side(0).line_distance(center);
    let tangency = q.sides().map(|side| side.start.lerp(side.end, side.project_param(center)));
    Ok(InscribedEllipse {
        conic: ConicCoeffs::circle(center, radius).normalized(),
        param: q.side(0).project_param(center),
        tangency,
        frame: FamilyFrame::Incircle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::qstvw_quad;

    fn close(p: Point, q: Point, tol: f64) -> bool {
        p.distance(q) <= tol
    }

    fn example() -> Quadrilateral {
        qstvw_quad(8.0, 4.0, 6.0, 2.0).unwrap()
    }

    fn example_conic() -> ConicCoeffs {
        ConicCoeffs::new(33.0, -148.0, 196.0, 28.0, -168.0, 36.0).unwrap()
    }

    #[test]
    fn qst_conic_at_symmetric_frame() {
        let c = qst_conic(2.0, 2.0, 0.5).unwrap();
        assert_eq!(c.to_array(), [4.0, -2.0, 4.0, -4.0, -4.0, 1.0]);
        let center = c.center().unwrap();
        assert!(close(center, Point::new(2.0 / 3.0, 2.0 / 3.0), 1e-15));
        let (h, from_param) = qst_center_param(2.0, 2.0, 0.5).unwrap();
        assert!((h - 2.0 / 3.0).abs() < 1e-15);
        assert!(close(from_param, center, 1e-15));
    }

    #[test]
    fn qst_params_rejected_at_endpoints() {
        for q in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(matches!(qst_conic(2.0, 3.0, q), Err(Error::ParamOutOfRegion { .. })));
        }
        assert!(qst_conic(1.0, 3.0, 0.5).is_err());
        assert!(qst_conic(0.2, 0.3, 0.5).is_err());
    }

    #[test]
    fn qst_contacts_at_symmetric_frame() {
        let pts = qst_tangency(2.0, 2.0, 0.5).unwrap();
        let want = [(0.0, 0.5), (0.5, 1.25), (1.25, 0.5), (0.5, 0.0)];
        let c = qst_conic(2.0, 2.0, 0.5).unwrap();
        for (p, (x, y)) in pts.iter().zip(want) {
            assert!(close(*p, Point::new(x, y), 1e-15), "{p:?}");
            assert!(c.evaluate(*p).abs() < 1e-14);
        }
    }

    #[test]
    fn center_form_matches_at_symmetric_frame() {
        let (h, _) = qst_center_param(2.0, 3.0, 0.3).unwrap();
        let a = qst_conic_from_center(2.0, 3.0, 0.3, h).unwrap();
        let b = qst_conic(2.0, 3.0, 0.3).unwrap();
        assert!(a.proportionality_error(&b) < 1e-13);
    }

    #[test]
    fn square_frame_family() {
        let pts = parallelogram_tangency(1.0, 1.0, 0.0, 0.0).unwrap();
        let c = parallelogram_conic(1.0, 1.0, 0.0, 0.0).unwrap();
        let g = c.geometry().unwrap();
        assert!(g.eccentricity < 1e-12);
        assert!((g.semi_major - 1.0).abs() < 1e-15);
        for p in pts {
            assert!((p.to_vector().norm() - 1.0).abs() < 1e-15);
        }
        let c = parallelogram_conic(1.0, 1.0, 0.0, 0.4).unwrap();
        let want = ConicCoeffs::new(1.0, 0.8, 1.0, 0.0, 0.0, -(1.0 - 0.16)).unwrap();
        assert!(c.proportionality_error(&want) < 1e-15);
        assert!(parallelogram_conic(1.0, 1.0, 0.0, 1.0).is_err());
        assert!(parallelogram_conic(1.0, 1.0, 1.5, 0.0).is_err());
    }

    #[test]
    fn sheared_parallelogram_family_is_tangent() {
        let (l, k, d) = (2.0, 1.0, 0.7);
        let q = Quadrilateral::from_clockwise(parallelogram_vertices(l, k, d)).unwrap();
        for v in [-0.9, -0.3, 0.0, 0.5, 0.95] {
            let conic = parallelogram_conic(l, k, d, v).unwrap();
            let tangency = parallelogram_tangency(l, k, d, v).unwrap();
            let ie = InscribedEllipse { conic, param: 0.5 * (v + 1.0), tangency, frame: FamilyFrame::Incircle };
            assert!(conic.is_ellipse());
            assert!(ie.tangency_defect(&q) < 1e-12, "v = {v}");
        }
    }

    #[test]
    fn example_family_member() {
        let c = qstvw_conic(8.0, 4.0, 6.0, 2.0, 3.0 / 7.0).unwrap();
        assert_eq!(c.c, 2304.0);
        assert!(c.proportionality_error(&example_conic()) < 1e-14);
        assert!((c.c / example_conic().c - 576.0 / 49.0).abs() < 1e-12);
        let polys = qstvw_coeff_polys(8.0, 4.0, 6.0, 2.0);
        assert_eq!(polys[2].coeffs(), &[2304.0]);
        assert_eq!(polys[4].coeffs(), &[0.0, -4608.0]);
        assert_eq!(polys[5].coeffs(), &[0.0, 0.0, 2304.0]);
    }

    #[test]
    fn example_contacts() {
        let pts = qstvw_tangency(8.0, 4.0, 6.0, 2.0, 3.0 / 7.0).unwrap();
        let want = [(0.0, 3.0 / 7.0), (32.0 / 9.0, 7.0 / 3.0), (62.0 / 9.0, 26.0 / 9.0), (18.0 / 7.0, 6.0 / 7.0)];
        for (p, (x, y)) in pts.iter().zip(want) {
            assert!(close(*p, Point::new(x, y), 1e-12), "{p:?}");
        }
    }

    #[test]
    fn inscribe_example() {
        let ie = inscribe(&example(), 3.0 / 7.0).unwrap();
        assert!(ie.conic.proportionality_error(&example_conic()) < 1e-12);
        assert!(close(ie.center().unwrap(), Point::new(3.5, 1.75), 1e-12));
        assert!(ie.tangency_defect(&example()) < 1e-12);
    }

    #[test]
    fn inscribe_is_equivariant() {
        let m = AffineMap::translation(Vector::new(-3.0, 7.0)).then_after(&AffineMap::rotation(0.3));
        let moved = m.apply_to_quad(&example()).unwrap();
        // rotation by 0.3 keeps A1 lowest-leftmost for this quad
        assert!(close(moved.vertex(0), m.apply(Point::ORIGIN), 1e-12));
        let a = inscribe(&example(), 0.37).unwrap();
        let b = inscribe(&moved, 0.37).unwrap();
        for (p, q) in a.tangency.iter().zip(b.tangency) {
            assert!(close(m.apply(*p), q, 1e-11));
        }
        assert!(m.apply_to_conic(&a.conic).unwrap().proportionality_error(&b.conic) < 1e-11);
    }

    #[test]
    fn inscribe_in_trapezoids_and_parallelograms() {
        let trapezoid = Quadrilateral::new([
            Point::new(0.0, 0.0),
            Point::new(1.0, 2.0),
            Point::new(2.5, 2.0),
            Point::new(4.0, 0.0),
        ])
        .unwrap();
        let rhombus = Quadrilateral::new([
            Point::new(0.0, 0.0),
            Point::new(1.0, 2.0),
            Point::new(4.0, 2.0),
            Point::new(3.0, 0.0),
        ])
        .unwrap();
        for q in [trapezoid, trapezoid.relabeled(1), rhombus] {
            for r in [0.05, 0.3, 0.5, 0.81, 0.999] {
                let ie = inscribe(&q, r).unwrap();
                assert!(ie.conic.is_ellipse());
                assert!(ie.tangency_defect(&q) < 1e-9, "{q:?} at {r}: {}", ie.tangency_defect(&q));
                assert!((q.side(0).project_param(ie.tangency[0]) - r).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn square_incircle() {
        let sq = Quadrilateral::new([
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        let ie = inscribe(&sq, 0.5).unwrap();
        let want = ConicCoeffs::circle(Point::new(0.5, 0.5), 0.5);
        assert!(ie.conic.proportionality_error(&want) < 1e-14);
        let circle = inscribed_circle(&sq).unwrap();
        assert!(circle.conic.proportionality_error(&want) < 1e-14);
        assert!((circle.param - 0.5).abs() < 1e-15);
        assert_eq!(inscribed_circle(&example()), Err(Error::NotTangential));
    }

    #[test]
    fn kite_incircle() {
        let kite = Quadrilateral::new([
            Point::new(0.0, 0.0),
            Point::new(-1.0, 2.0),
            Point::new(0.0, 5.0),
            Point::new(1.0, 2.0),
        ])
        .unwrap();
        let ie = inscribed_circle(&kite).unwrap();
        assert!(ie.tangency_defect(&kite) < 1e-12);
        assert!(ie.eccentricity().unwrap() < 1e-7);
        let member = inscribe(&kite, ie.param).unwrap();
        assert!(member.conic.proportionality_error(&ie.conic) < 1e-9);
    }
}
