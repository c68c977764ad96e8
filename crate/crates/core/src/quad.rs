//! Convex quadrilaterals: canonical vertex order, diagonal data and the
//! classification lattice (parallelogram, trapezoid, tangential,
//! orthodiagonal, kite, midpoint diagonal types 1 and 2).
//!
//! Vertices `A1..A4` run clockwise from the lower-left vertex. Sides are
//! `S1 = A1A2`, `S2 = A2A3`, `S3 = A3A4`, `S4 = A4A1`; side lengths are
//! `a = |A1A4|`, `b = |A1A2|`, `c = |A2A3|`, `d = |A3A4|`; diagonals are
//! `D1 = A1A3` and `D2 = A2A4`.

use serde::{Deserialize, Serialize};

use crate::error::{check_open, Error, Result};
use crate::geom::{line_intersection, Point, Segment};

/// Default relative tolerance for classification predicates.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Quads whose smallest turn `|cross|` falls below this fraction of `diam²`
/// are rejected as degenerate.
pub const CONVEXITY_TOL: f64 = 1e-12;

/// A strictly convex quadrilateral with clockwise vertices.
///
/// Values built by [`Quadrilateral::new`] start at the lower-left vertex
/// (minimum `y`, ties by minimum `x`). [`Quadrilateral::relabeled`] yields
/// the same shape with a different starting vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadrilateral {
    vertices: [Point; 4],
}

/// Diagonals, their midpoints and their intersection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalData {
    pub d1: Segment,
    pub d2: Segment,
    /// Midpoint of `D1`.
    pub m1: Point,
    /// Midpoint of `D2`.
    pub m2: Point,
    /// Intersection of the diagonals.
    pub p: Point,
    /// Segment `M1M2`, which lies on the Newton line. `None` for parallelograms.
    pub newton_segment: Option<Segment>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub convex: bool,
    pub parallelogram: bool,
    pub trapezoid: bool,
    pub tangential: bool,
    pub orthodiagonal: bool,
    pub kite: bool,
    pub mdq_type1: bool,
    pub mdq_type2: bool,
    /// `(a, b, c, d)`.
    pub side_lengths: (f64, f64, f64, f64),
}

impl ClassificationReport {
    pub fn is_mdq(&self) -> bool {
        self.mdq_type1 || self.mdq_type2
    }
}

fn orientation_crosses(v: &[Point; 4]) -> [f64; 4] {
    std::array::from_fn(|i| {
        let e0 = v[(i + 1) % 4] - v[i];
        let e1 = v[(i + 2) % 4] - v[(i + 1) % 4];
        e0.cross(e1)
    })
}

fn diameter(v: &[Point; 4]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..4 {
        for j in i + 1..4 {
            d = d.max(v[i].distance(v[j]));
        }
    }
    d
}

fn lower_left_index(v: &[Point; 4]) -> usize {
    (0..4).min_by(|&i, &j| v[i].y.partial_cmp(&v[j].y).unwrap().then(v[i].x.partial_cmp(&v[j].x).unwrap())).unwrap()
}

impl Quadrilateral {
    /// Canonicalizes four points given in any order: sorts them around
    /// their centroid, orients clockwise, and starts at the lower-left vertex.
    pub fn new(raw: [Point; 4]) -> Result<Self> {
        if !raw.iter().all(|p| p.is_finite()) {
            return Err(Error::NonFinite);
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if raw[i] == raw[j] {
                    return Err(Error::DuplicateVertex);
                }
            }
        }
        let cx = raw.iter().map(|p| p.x).sum::<f64>() / 4.0;
        let cy = raw.iter().map(|p| p.y).sum::<f64>() / 4.0;
        let mut sorted = raw;
        // descending angle = clockwise
        sorted.sort_by(|p, q| {
            let ap = (p.y - cy).atan2(p.x - cx);
            let aq = (q.y - cy).atan2(q.x - cx);
            aq.partial_cmp(&ap).unwrap()
        });
        let start = lower_left_index(&sorted);
        let vertices = std::array::from_fn(|i| sorted[(start + i) % 4]);
        Self::from_clockwise(vertices)
    }

    /// Accepts vertices already in clockwise order, keeping the given start.
    pub fn from_clockwise(vertices: [Point; 4]) -> Result<Self> {
        if !vertices.iter().all(|p| p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let diam = diameter(&vertices);
        if diam == 0.0 {
            return Err(Error::DuplicateVertex);
        }
        let floor = CONVEXITY_TOL * diam * diam;
        if orientation_crosses(&vertices).iter().all(|&c| c < -floor) {
            Ok(Quadrilateral { vertices })
        } else {
            Err(Error::NonConvexInput)
        }
    }

    pub fn vertices(&self) -> &[Point; 4] {
        &self.vertices
    }

    /// Vertex `A_{i+1}` for `i` in `0..4`.
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % 4]
    }

    /// Same quadrilateral with vertex `A_{shift+1}` as the new `A1`.
    pub fn relabeled(&self, shift: usize) -> Quadrilateral {
        Quadrilateral { vertices: std::array::from_fn(|i| self.vertices[(i + shift) % 4]) }
    }

    /// True if `A1` is the lower-left vertex.
    pub fn is_canonical(&self) -> bool {
        lower_left_index(&self.vertices) == 0
    }

    /// Side `S_{i+1}` from `A_{i+1}` to `A_{i+2}`.
    pub fn side(&self, i: usize) -> Segment {
        Segment::new(self.vertex(i), self.vertex(i + 1))
    }

    pub fn sides(&self) -> [Segment; 4] {
        std::array::from_fn(|i| self.side(i))
    }

    /// `(a, b, c, d) = (|A1A4|, |A1A2|, |A2A3|, |A3A4|)`.
    pub fn side_lengths(&self) -> (f64, f64, f64, f64) {
        let v = &self.vertices;
        (v[0].distance(v[3]), v[0].distance(v[1]), v[1].distance(v[2]), v[2].distance(v[3]))
    }

    pub fn perimeter(&self) -> f64 {
        let (a, b, c, d) = self.side_lengths();
        a + b + c + d
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.vertices)
    }

    pub fn diagonals(&self) -> DiagonalData {
        let v = &self.vertices;
        let d1 = Segment::new(v[0], v[2]);
        let d2 = Segment::new(v[1], v[3]);
        let m1 = d1.midpoint();
        let m2 = d2.midpoint();
        let p = line_intersection(v[0], d1.direction(), v[1], d2.direction())
            .expect("diagonals of a convex quadrilateral intersect");
        let newton_segment = if m1.distance(m2) > 1e-14 * self.diameter() { Some(Segment::new(m1, m2)) } else { None };
        DiagonalData { d1, d2, m1, m2, p, newton_segment }
    }

    /// True if the point lies on the open Newton segment `M1M2`.
    pub fn on_newton_segment(&self, p: Point, tol: f64) -> bool {
        match self.diagonals().newton_segment {
            Some(seg) => seg.contains_interior(p, tol),
            None => p.distance(self.diagonals().m1) <= tol * self.diameter(),
        }
    }

    /// Classification with relative tolerance `tol`.
    pub fn classify(&self, tol: f64) -> ClassificationReport {
        let diag = self.diagonals();
        let diam = self.diameter();
        let (a, b, c, d) = self.side_lengths();
        let per = a + b + c + d;

        let mdq_type1 = diag.p.distance(diag.m2) <= tol * diam;
        let mdq_type2 = diag.p.distance(diag.m1) <= tol * diam;
        let parallelogram = mdq_type1 && mdq_type2;

        let sides = self.sides();
        let parallel = |i: usize, j: usize| sides[i].direction().is_parallel(sides[j].direction(), tol);
        let trapezoid = parallelogram || parallel(0, 2) || parallel(1, 3);

        let u = diag.d1.direction();
        let v = diag.d2.direction();
        let orthodiagonal = (u.dot(v) / (u.norm() * v.norm())).abs() <= tol;

        let eq = |x: f64, y: f64| (x - y).abs() <= tol * per;
        ClassificationReport {
            convex: true,
            parallelogram,
            trapezoid,
            tangential: eq(a + c, b + d),
            orthodiagonal,
            kite: (eq(a, b) && eq(c, d)) || (eq(b, c) && eq(a, d)),
            mdq_type1,
            mdq_type2,
            side_lengths: (a, b, c, d),
        }
    }

    /// Relative distance of the diagonal intersection from the two
    /// midpoints: `(|P − M2|, |P − M1|) / diam`. Zero in the first slot
    /// means type 1, zero in the second means type 2.
    pub fn mdq_defects(&self) -> (f64, f64) {
        let diag = self.diagonals();
        let diam = self.diameter();
        (diag.p.distance(diag.m2) / diam, diag.p.distance(diag.m1) / diam)
    }
}

/// Whether `(s, t)` lies in `{s, t > 0, s + t > 1, s ≠ 1}`.
pub fn check_qst_region(s: f64, t: f64) -> Result<()> {
    check_open("s", s, 0.0, f64::INFINITY, 0.0)?;
    check_open("t", t, 0.0, f64::INFINITY, 0.0)?;
    if (s + t).is_nan() || s + t <= 1.0 {
        return Err(Error::ParamOutOfRegion { name: "s + t", value: s + t });
    }
    if (s - 1.0).abs() <= CLASSIFY_TOL {
        return Err(Error::ParamOutOfRegion { name: "s", value: s });
    }
    Ok(())
}

/// MDQ types of the frame `(0,0), (0,1), (s,t), (1,0)`: type 1 iff `s = t`,
/// type 2 iff `s + t = 2`.
pub fn mdq_type_qst(s: f64, t: f64) -> Result<(bool, bool)> {
    check_qst_region(s, t)?;
    let scale = 1.0 + s.abs().max(t.abs());
    Ok(((s - t).abs() <= CLASSIFY_TOL * scale, (s + t - 2.0).abs() <= CLASSIFY_TOL * scale))
}

/// The auxiliary quantities of the frame `(0,0), (0,1), (s,t), (v,w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FValues {
    /// `v(t − 1) + (1 − w)s`
    pub f1: f64,
    /// `vt − ws`
    pub f2: f64,
    /// `ws − v(t − 1)`
    pub f3: f64,
}

pub fn f_values(s: f64, t: f64, v: f64, w: f64) -> FValues {
    FValues { f1: v * (t - 1.0) + (1.0 - w) * s, f2: v * t - w * s, f3: w * s - v * (t - 1.0) }
}

fn frame_scale(s: f64, t: f64, v: f64, w: f64) -> f64 {
    1.0 + s.abs().max(t.abs()).max(v.abs()).max(w.abs())
}

/// Convexity conditions of the `(s,t,v,w)` frame: `s, v > 0`, `f1 > 0`,
/// `f2 > 0`. These are exactly what the inscribed family needs.
pub fn check_family_region(s: f64, t: f64, v: f64, w: f64) -> Result<()> {
    for (name, value) in [("s", s), ("t", t), ("v", v), ("w", w)] {
        if !value.is_finite() {
            return Err(Error::ParamOutOfRegion { name, value });
        }
    }
    check_open("s", s, 0.0, f64::INFINITY, 0.0)?;
    check_open("v", v, 0.0, f64::INFINITY, 0.0)?;
    let f = f_values(s, t, v, w);
    check_open("f1", f.f1, 0.0, f64::INFINITY, 0.0)?;
    check_open("f2", f.f2, 0.0, f64::INFINITY, 0.0)?;
    Ok(())
}

/// Full analysis region: the family conditions plus `s ≠ v` (S1 ∦ S3)
/// and `f3 ≠ 0` (S2 ∦ S4), i.e. no two sides parallel.
pub fn check_frame_region(s: f64, t: f64, v: f64, w: f64) -> Result<()> {
    check_family_region(s, t, v, w)?;
    let scale = frame_scale(s, t, v, w);
    if (s - v).abs() <= CLASSIFY_TOL * scale {
        return Err(Error::ParamOutOfRegion { name: "s - v", value: s - v });
    }
    let f3 = f_values(s, t, v, w).f3;
    if f3.abs() <= CLASSIFY_TOL * scale * scale {
        return Err(Error::ParamOutOfRegion { name: "f3", value: f3 });
    }
    Ok(())
}

/// MDQ types of the frame `(0,0), (0,1), (s,t), (v,w)`: type 1 iff
/// `vt = (w+1)s`, type 2 iff `(t−2)v = (w−1)s`.
pub fn mdq_type_qstvw(s: f64, t: f64, v: f64, w: f64) -> Result<(bool, bool)> {
    check_frame_region(s, t, v, w)?;
    let tol = CLASSIFY_TOL * frame_scale(s, t, v, w).powi(2);
    Ok(((v * t - (w + 1.0) * s).abs() <= tol, ((t - 2.0) * v - (w - 1.0) * s).abs() <= tol))
}

/// The frame quadrilateral `(0,0), (0,1), (s,t), (v,w)` in that (clockwise) order.
pub fn qstvw_quad(s: f64, t: f64, v: f64, w: f64) -> Result<Quadrilateral> {
    Quadrilateral::from_clockwise([Point::ORIGIN, Point::new(0.0, 1.0), Point::new(s, t), Point::new(v, w)])
}

/// The frame quadrilateral `(0,0), (0,1), (s,t), (1,0)`.
pub fn qst_quad(s: f64, t: f64) -> Result<Quadrilateral> {
    qstvw_quad(s, t, 1.0, 0.0)
}
