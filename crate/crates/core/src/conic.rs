//! General conic algebra: ellipse detection, center, semi-axes,
//! eccentricity, and point/line queries for `Ax²+Bxy+Cy²+Dx+Ey+F=0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Direction, Point, Vector};

/// Default relative tolerance for double-root detection in [`ConicCoeffs::line_intersect`].
pub const TANGENCY_TOL: f64 = 1e-9;

/// Coefficients `(A, B, C, D, E, F)` of `Ax²+Bxy+Cy²+Dx+Ey+F = 0`.
///
/// A conic is a projective object: two coefficient sextuples describe the
/// same curve iff they are proportional. Use [`ConicCoeffs::normalized`]
/// for a canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConicCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

/// Center, semi-axes and orientation of an ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipseGeometry {
    pub center: Point,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub eccentricity: f64,
    /// Unit vector along the major axis.
    pub major_axis_direction: Direction,
}

impl EllipseGeometry {
    /// Unit vector along the minor axis.
    pub fn minor_axis_direction(&self) -> Direction {
        self.major_axis_direction.perp()
    }

    /// `b² / a²`.
    pub fn axis_ratio_sq(&self) -> f64 {
        let q = self.semi_minor / self.semi_major;
        q * q
    }

    /// The two foci, on the major axis at distance `√(a² − b²)` from the center.
    pub fn foci(&self) -> [Point; 2] {
        let c = ((self.semi_major - self.semi_minor) * (self.semi_major + self.semi_minor)).max(0.0).sqrt();
        let u = self.major_axis_direction * c;
        [self.center - u, self.center + u]
    }

    /// Point at angle `theta` in the ellipse's own parametrization.
    pub fn point_at(&self, theta: f64) -> Point {
        let u = self.major_axis_direction;
        let v = self.minor_axis_direction();
        self.center + u * (self.semi_major * theta.cos()) + v * (self.semi_minor * theta.sin())
    }
}

/// Real intersections of a line with a conic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineHits {
    None,
    /// Double root: the line is tangent at this point.
    Tangent(Point),
    /// Two distinct points, ordered by the line parameter.
    Secant(Point, Point),
}

impl LineHits {
    pub fn points(&self) -> Vec<Point> {
        match *self {
            LineHits::None => vec![],
            LineHits::Tangent(p) => vec![p],
            LineHits::Secant(p, q) => vec![p, q],
        }
    }
}

impl ConicCoeffs {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        let conic = ConicCoeffs { a, b, c, d, e, f };
        if !conic.to_array().iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(Error::DegenerateConic);
        }
        Ok(conic)
    }

    pub fn from_array(k: [f64; 6]) -> Result<Self> {
        Self::new(k[0], k[1], k[2], k[3], k[4], k[5])
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// Circle with the given center and radius.
    pub fn circle(center: Point, radius: f64) -> Self {
        ConicCoeffs {
            a: 1.0,
            b: 0.0,
            c: 1.0,
            d: -2.0 * center.x,
            e: -2.0 * center.y,
            f: center.x * center.x + center.y * center.y - radius * radius,
        }
    }

    pub fn scaled(&self, k: f64) -> Self {
        let [a, b, c, d, e, f] = self.to_array().map(|v| v * k);
        ConicCoeffs { a, b, c, d, e, f }
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Representative with `A > 0` (or `A = 0`, `C > 0`).
    pub fn sign_normalized(&self) -> Self {
        if self.a < 0.0 || (self.a == 0.0 && self.c < 0.0) {
            self.scaled(-1.0)
        } else {
            *self
        }
    }

    /// Sign-normalized and rescaled so the largest coefficient magnitude is 1.
    pub fn normalized(&self) -> Self {
        let s = self.sign_normalized();
        let m = s.max_abs();
        let [a, b, c, d, e, f] = s.to_array().map(|v| v / m);
        ConicCoeffs { a, b, c, d, e, f }
    }

    /// Largest coefficient difference between the normalized forms. Zero iff
    /// the two sextuples describe the same conic.
    pub fn proportionality_error(&self, other: &ConicCoeffs) -> f64 {
        let p = self.normalized().to_array();
        let q = other.normalized().to_array();
        p.iter().zip(q.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    /// `(Δ, δ) = (4AC − B², CD² + AE² − BDE − FΔ)` of the sign-normalized coefficients.
    pub fn discriminants(&self) -> (f64, f64) {
        let ConicCoeffs { a, b, c, d, e, f } = self.sign_normalized();
        let delta_big = 4.0 * a * c - b * b;
        let delta_small = c * d * d + a * e * e - b * d * e - f * delta_big;
        (delta_big, delta_small)
    }

    /// True iff `Δ > 0` and `δ > 0`.
    pub fn is_ellipse(&self) -> bool {
        let n = self.normalized();
        let (big, small) = n.discriminants();
        big > 0.0 && small > 0.0
    }

    fn require_ellipse(&self) -> Result<ConicCoeffs> {
        let n = self.normalized();
        let (delta_big, delta_small) = n.discriminants();
        if delta_big > 0.0 && delta_small > 0.0 {
            Ok(n)
        } else {
            Err(Error::NotAnEllipse { delta_big, delta_small })
        }
    }

    /// Unique stationary point of the quadratic form,
    /// `((BE − 2CD)/Δ, (BD − 2AE)/Δ)`.
    pub fn center(&self) -> Result<Point> {
        let (delta_big, delta_small) = self.discriminants();
        if delta_big <= 0.0 {
            return Err(Error::NotAnEllipse { delta_big, delta_small });
        }
        let ConicCoeffs { a, b, c, d, e, .. } = *self;
        Ok(Point::new((b * e - 2.0 * c * d) / delta_big, (b * d - 2.0 * a * e) / delta_big))
    }

    /// Semi-axes from `a² = ½μ(A + C + R)`, `b² = ½μ(A + C − R)` with
    /// `μ = 4δ/Δ²` and `R = √((A−C)² + B²)`.
    pub fn geometry(&self) -> Result<EllipseGeometry> {
        let n = self.require_ellipse()?;
        let (delta_big, delta_small) = n.discriminants();
        let ConicCoeffs { a, b, c, .. } = n;
        let mu = 4.0 * delta_small / (delta_big * delta_big);
        let root = (a - c).hypot(b);
        let major_sq = 0.5 * mu * (a + c + root);
        let minor_sq = 0.5 * mu * (a + c - root);
        let ratio = n.axis_ratio_sq();
        Ok(EllipseGeometry {
            center: n.center()?,
            semi_major: major_sq.sqrt(),
            semi_minor: minor_sq.max(0.0).sqrt(),
            eccentricity: (1.0 - ratio).max(0.0).sqrt(),
            major_axis_direction: n.major_axis_direction(),
        })
    }

    /// `b²/a² = (A + C − R)/(A + C + R)`. Meaningful for ellipses only.
    pub fn axis_ratio_sq(&self) -> f64 {
        let ConicCoeffs { a, b, c, .. } = self.sign_normalized();
        let root = (a - c).hypot(b);
        (a + c - root) / (a + c + root)
    }

    /// Eigenvector of `[[A, B/2], [B/2, C]]` for the smaller eigenvalue,
    /// normalized. Returns `(1, 0)` for circles.
    fn major_axis_direction(&self) -> Direction {
        let ConicCoeffs { a, b, c, .. } = self.sign_normalized();
        let root = (a - c).hypot(b);
        if root <= 1e-15 * (a.abs() + c.abs()) {
            return Vector::new(1.0, 0.0);
        }
        let lambda = 0.5 * (a + c - root);
        let v1 = Vector::new(0.5 * b, lambda - a);
        let v2 = Vector::new(lambda - c, 0.5 * b);
        let v = if v1.norm_sq() >= v2.norm_sq() { v1 } else { v2 };
        v.normalized()
    }

    /// Residual of the conic equation at `p`.
    pub fn evaluate(&self, p: Point) -> f64 {
        let ConicCoeffs { a, b, c, d, e, f } = *self;
        let (x, y) = (p.x, p.y);
        a * x * x + b * x * y + c * y * y + d * x + e * y + f
    }

    /// `(2Ax + By + D, Bx + 2Cy + E)`.
    pub fn gradient(&self, p: Point) -> Vector {
        let ConicCoeffs { a, b, c, d, e, .. } = *self;
        Vector::new(2.0 * a * p.x + b * p.y + d, b * p.x + 2.0 * c * p.y + e)
    }

    /// Quadratic part applied to `u`: `[[A, B/2], [B/2, C]] u`.
    pub fn quadratic_apply(&self, u: Vector) -> Vector {
        Vector::new(self.a * u.x + 0.5 * self.b * u.y, 0.5 * self.b * u.x + self.c * u.y)
    }

    /// Bilinear form of the quadratic part, `uᵀ Q₂ v`.
    pub fn quadratic_form(&self, u: Vector, v: Vector) -> f64 {
        u.dot(self.quadratic_apply(v))
    }

    /// Coefficients `(α, β, γ)` of `αλ² + βλ + γ`, the conic restricted to `p0 + λ dir`.
    pub fn restrict_to_line(&self, p0: Point, dir: Direction) -> (f64, f64, f64) {
        (self.quadratic_form(dir, dir), self.gradient(p0).dot(dir), self.evaluate(p0))
    }

    /// Real intersections of the line `p0 + λ dir` with the conic, using
    /// [`TANGENCY_TOL`] for double-root detection.
    pub fn line_intersect(&self, p0: Point, dir: Direction) -> LineHits {
        self.line_intersect_tol(p0, dir, TANGENCY_TOL)
    }

    /// As [`line_intersect`](Self::line_intersect); a discriminant with
    /// `|τ| ≤ tol · max(β², |4αγ|)` counts as a double root.
    pub fn line_intersect_tol(&self, p0: Point, dir: Direction, tol: f64) -> LineHits {
        let (qa, qb, qc) = self.restrict_to_line(p0, dir);
        if qa == 0.0 {
            if qb == 0.0 {
                return LineHits::None;
            }
            return LineHits::Tangent(p0 + dir * (-qc / qb));
        }
        let tau = qb * qb - 4.0 * qa * qc;
        let scale = (qb * qb).max((4.0 * qa * qc).abs());
        if tau.abs() <= tol * scale {
            return LineHits::Tangent(p0 + dir * (-qb / (2.0 * qa)));
        }
        if tau < 0.0 {
            return LineHits::None;
        }
        let sq = tau.sqrt();
        let q = -0.5 * (qb + qb.signum() * sq);
        let (mut l1, mut l2) = if q == 0.0 { (-sq / (2.0 * qa), sq / (2.0 * qa)) } else { (q / qa, qc / q) };
        if l1 > l2 {
            std::mem::swap(&mut l1, &mut l2);
        }
        LineHits::Secant(p0 + dir * l1, p0 + dir * l2)
    }
}
