//! Affine maps of the plane and normalization of convex quadrilaterals to
//! the two canonical frames:
//!
//! * `Q_{s,t}` with vertices `(0,0), (0,1), (s,t), (1,0)`, reached by a
//!   general affine map;
//! * `Q_{s,t,v,w}` with vertices `(0,0), (0,1), (s,t), (v,w)`, reached by a
//!   similarity, so eccentricities are unchanged.

use nalgebra::{Matrix2, Matrix3, Vector2};

use crate::conic::ConicCoeffs;
use crate::error::{Error, Result};
use crate::geom::{Point, Vector};
use crate::quad::{f_values, FValues, Quadrilateral, CLASSIFY_TOL};

/// `x ↦ Lx + b` with `L` invertible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    linear: Matrix2<f64>,
    translation: Vector2<f64>,
}

impl AffineMap {
    /// `linear` is row-major.
    pub fn new(linear: [[f64; 2]; 2], translation: Vector) -> Result<Self> {
        let m = Matrix2::new(linear[0][0], linear[0][1], linear[1][0], linear[1][1]);
        Self::from_parts(m, Vector2::new(translation.x, translation.y))
    }

    fn from_parts(linear: Matrix2<f64>, translation: Vector2<f64>) -> Result<Self> {
        let scale = linear.amax();
        if !(linear.iter().all(|v| v.is_finite()) && translation.iter().all(|v| v.is_finite())) {
            return Err(Error::NonFinite);
        }
        if scale == 0.0 || linear.determinant().abs() <= 1e-12 * scale * scale {
            return Err(Error::SingularMap);
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn identity() -> Self {
        AffineMap { linear: Matrix2::identity(), translation: Vector2::zeros() }
    }

    pub fn translation(v: Vector) -> Self {
        AffineMap { linear: Matrix2::identity(), translation: Vector2::new(v.x, v.y) }
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        AffineMap { linear: Matrix2::new(c, -s, s, c), translation: Vector2::zeros() }
    }

    /// `(x, y) ↦ (kx, ky)`.
    pub fn scaling(k: f64) -> Result<Self> {
        Self::from_parts(Matrix2::identity() * k, Vector2::zeros())
    }

    /// The unique affine map sending `src[i]` to `dst[i]`.
    pub fn from_triangles(src: [Point; 3], dst: [Point; 3]) -> Result<Self> {
        let s = Matrix2::new(src[1].x - src[0].x, src[2].x - src[0].x, src[1].y - src[0].y, src[2].y - src[0].y);
        let d = Matrix2::new(dst[1].x - dst[0].x, dst[2].x - dst[0].x, dst[1].y - dst[0].y, dst[2].y - dst[0].y);
        let s_inv = s.try_inverse().ok_or(Error::SingularMap)?;
        let linear = d * s_inv;
        let translation = Vector2::new(dst[0].x, dst[0].y) - linear * Vector2::new(src[0].x, src[0].y);
        Self::from_parts(linear, translation)
    }

    /// Row-major linear part.
    pub fn linear(&self) -> [[f64; 2]; 2] {
        let m = &self.linear;
        [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
    }

    pub fn translation_part(&self) -> Vector {
        Vector::new(self.translation.x, self.translation.y)
    }

    pub fn determinant(&self) -> f64 {
        self.linear.determinant()
    }

    pub fn apply(&self, p: Point) -> Point {
        let v = self.linear * Vector2::new(p.x, p.y) + self.translation;
        Point::new(v.x, v.y)
    }

    /// Action on free vectors (the linear part only).
    pub fn apply_vector(&self, u: Vector) -> Vector {
        let v = self.linear * Vector2::new(u.x, u.y);
        Vector::new(v.x, v.y)
    }

    /// Image of a quadrilateral, re-canonicalized.
    pub fn apply_to_quad(&self, q: &Quadrilateral) -> Result<Quadrilateral> {
        Quadrilateral::new(q.vertices().map(|p| self.apply(p)))
    }

    /// `second ∘ first`.
    pub fn compose(second: &AffineMap, first: &AffineMap) -> AffineMap {
        AffineMap {
            linear: second.linear * first.linear,
            translation: second.linear * first.translation + second.translation,
        }
    }

    /// `self ∘ first`.
    pub fn then_after(&self, first: &AffineMap) -> AffineMap {
        Self::compose(self, first)
    }

    pub fn invert(&self) -> Result<AffineMap> {
        let inv = self.linear.try_inverse().ok_or(Error::SingularMap)?;
        Self::from_parts(inv, -(inv * self.translation))
    }

    fn homogeneous(&self) -> Matrix3<f64> {
        let l = &self.linear;
        let t = &self.translation;
        Matrix3::new(l[(0, 0)], l[(0, 1)], t.x, l[(1, 0)], l[(1, 1)], t.y, 0.0, 0.0, 1.0)
    }

    /// Image conic: with `H` the homogeneous matrix of the map and `K` the
    /// symmetric conic matrix, returns `H⁻ᵀ K H⁻¹`.
    pub fn apply_to_conic(&self, c: &ConicCoeffs) -> Result<ConicCoeffs> {
        let h_inv = self.homogeneous().try_inverse().ok_or(Error::SingularMap)?;
        let k = Matrix3::new(c.a, 0.5 * c.b, 0.5 * c.d, 0.5 * c.b, c.c, 0.5 * c.e, 0.5 * c.d, 0.5 * c.e, c.f);
        let img = h_inv.transpose() * k * h_inv;
        ConicCoeffs::new(
            img[(0, 0)],
            img[(0, 1)] + img[(1, 0)],
            img[(1, 1)],
            img[(0, 2)] + img[(2, 0)],
            img[(1, 2)] + img[(2, 1)],
            img[(2, 2)],
        )
    }

    /// Largest entry difference from another map (linear and translation parts).
    pub fn max_difference(&self, other: &AffineMap) -> f64 {
        (self.linear - other.linear).amax().max((self.translation - other.translation).amax())
    }
}

/// Affine normalization to `Q_{s,t}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QstFrame {
    /// Sends the relabeled `A1, A2, A4` to `(0,0), (0,1), (1,0)`.
    pub map: AffineMap,
    pub s: f64,
    pub t: f64,
    /// Vertex `A_{shift+1}` of the input plays the role of the frame's `A1`.
    /// Frame side `S_j` is input side `S_{j+shift}`.
    pub shift: usize,
}

/// Similarity normalization to `Q_{s,t,v,w}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QstvwFrame {
    /// Sends `A1 → (0,0)`, `A2 → (0,1)`, `A3 → (s,t)`, `A4 → (v,w)`.
    pub map: AffineMap,
    pub s: f64,
    pub t: f64,
    pub v: f64,
    pub w: f64,
}

impl QstvwFrame {
    pub fn f_values(&self) -> FValues {
        f_values(self.s, self.t, self.v, self.w)
    }

    /// `|A1A2|` of the input; the map scales lengths by its reciprocal.
    pub fn unit_length(&self) -> f64 {
        1.0 / self.map.determinant().abs().sqrt()
    }
}

fn affine_qst(q: &Quadrilateral) -> Result<(AffineMap, f64, f64)> {
    let v = q.vertices();
    let map =
        AffineMap::from_triangles([v[0], v[1], v[3]], [Point::ORIGIN, Point::new(0.0, 1.0), Point::new(1.0, 0.0)])?;
    let a3 = map.apply(v[2]);
    Ok((map, a3.x, a3.y))
}

/// Affine map taking `q` (with its current labeling) to `Q_{s,t}`.
///
/// When `s = 1` (`S1 ∥ S3`) the labeling is advanced by one vertex, which
/// turns the parallel pair into `S2 ∥ S4` (`t = 1`), and `shift` records it.
pub fn normalize_to_qst(q: &Quadrilateral) -> Result<QstFrame> {
    if q.classify(CLASSIFY_TOL).parallelogram {
        return Err(Error::IsParallelogram);
    }
    for shift in 0..2 {
        let (map, s, t) = affine_qst(&q.relabeled(shift))?;
        if (s - 1.0).abs() > CLASSIFY_TOL * (1.0 + s.abs().max(t.abs())) {
            return Ok(QstFrame { map, s, t, shift });
        }
    }
    unreachable!("a quadrilateral with both pairs of opposite sides parallel is a parallelogram")
}

/// Similarity taking `q` (with its current labeling) to `Q_{s,t,v,w}`:
/// translate `A1` to the origin, rotate `A1A2` onto the positive y-axis,
/// scale by `1/|A1A2|`.
pub fn normalize_to_qstvw(q: &Quadrilateral) -> Result<QstvwFrame> {
    if q.classify(CLASSIFY_TOL).parallelogram {
        return Err(Error::IsParallelogram);
    }
    let v = q.vertices();
    let side = v[1] - v[0];
    let len = side.norm();
    let angle = std::f64::consts::FRAC_PI_2 - side.y.atan2(side.x);
    let map = AffineMap::scaling(1.0 / len)?
        .then_after(&AffineMap::rotation(angle))
        .then_after(&AffineMap::translation(-v[0].to_vector()));
    let a3 = map.apply(v[2]);
    let a4 = map.apply(v[3]);
    Ok(QstvwFrame { map, s: a3.x, t: a3.y, v: a4.x, w: a4.y })
}
