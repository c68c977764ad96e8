//! Planar points, vectors and slopes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A free vector in the plane. Also used for directions, where only the
/// line it spans matters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

/// Directions are vectors compared projectively (sign and length ignored).
pub type Direction = Vector;

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn to_vector(self) -> Vector {
        Vector::new(self.x, self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// `self + t (other - self)`.
    #[inline]
    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl Vector {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vector { x, y }
    }

    #[inline]
    pub fn dot(self, other: Vector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Vector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counterclockwise rotation by a quarter turn.
    #[inline]
    pub fn perp(self) -> Vector {
        Vector::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Vector {
        let n = self.norm();
        Vector::new(self.x / n, self.y / n)
    }

    /// `|sin θ|` of the angle between the lines spanned by two vectors.
    /// Zero means parallel, one means perpendicular.
    pub fn sin_angle(self, other: Vector) -> f64 {
        let denom = self.norm() * other.norm();
        if denom == 0.0 {
            return 0.0;
        }
        (self.cross(other) / denom).abs().min(1.0)
    }

    /// Projective parallelism test: `|u × v| ≤ tol |u||v|`.
    #[inline]
    pub fn is_parallel(self, other: Vector, tol: f64) -> bool {
        self.sin_angle(other) <= tol
    }

    pub fn slope(self) -> Slope {
        Slope::of(self)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    #[inline]
    fn add(self, v: Vector) -> Point {
        Point::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub<Vector> for Point {
    type Output = Point;
    #[inline]
    fn sub(self, v: Vector) -> Point {
        Point::new(self.x - v.x, self.y - v.y)
    }
}

impl Sub for Point {
    type Output = Vector;
    #[inline]
    fn sub(self, other: Point) -> Vector {
        Vector::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Vector {
    type Output = Vector;
    #[inline]
    fn add(self, v: Vector) -> Vector {
        Vector::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub for Vector {
    type Output = Vector;
    #[inline]
    fn sub(self, v: Vector) -> Vector {
        Vector::new(self.x - v.x, self.y - v.y)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    #[inline]
    fn mul(self, k: f64) -> Vector {
        Vector::new(self.x * k, self.y * k)
    }
}

impl Neg for Vector {
    type Output = Vector;
    #[inline]
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Slope of a line. Vertical lines get their own variant instead of an
/// infinite float.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Slope {
    Finite(f64),
    Vertical,
}

impl Slope {
    /// Lines whose run is below `1e-15` of their length count as vertical.
    pub fn of(v: Vector) -> Slope {
        if v.x.abs() <= 1e-15 * v.norm() {
            Slope::Vertical
        } else {
            Slope::Finite(v.y / v.x)
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Slope::Finite(m) => Some(m),
            Slope::Vertical => None,
        }
    }
}

/// A segment between two points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub const fn new(start: Point, end: Point) -> Self {
        Segment { start, end }
    }

    pub fn direction(&self) -> Vector {
        self.end - self.start
    }

    pub fn midpoint(&self) -> Point {
        self.start.midpoint(self.end)
    }

    pub fn length(&self) -> f64 {
        self.direction().norm()
    }

    /// Parameter of the orthogonal projection of `p` onto the supporting line,
    /// with 0 at `start` and 1 at `end`.
    pub fn project_param(&self, p: Point) -> f64 {
        let d = self.direction();
        (p - self.start).dot(d) / d.norm_sq()
    }

    /// Distance from `p` to the supporting line.
    pub fn line_distance(&self, p: Point) -> f64 {
        let d = self.direction();
        (p - self.start).cross(d).abs() / d.norm()
    }

    /// True when `p` lies on the open segment, within `tol` relative to the
    /// segment length.
    pub fn contains_interior(&self, p: Point, tol: f64) -> bool {
        let len = self.length();
        let u = self.project_param(p);
        self.line_distance(p) <= tol * len && u > tol && u < 1.0 - tol
    }
}

/// Intersection of the lines `p + λu` and `q + μv`, or `None` if parallel.
pub fn line_intersection(p: Point, u: Vector, q: Point, v: Vector) -> Option<Point> {
    let det = u.cross(v);
    if det.abs() <= 1e-15 * u.norm() * v.norm() {
        return None;
    }
    let lambda = (q - p).cross(v) / det;
    Some(p + u * lambda)
}
