//! Conjugate diameters of ellipses and the parallelism checks between
//! diagonals, conjugate diameters and tangency chords.
//!
//! Two directions `u`, `v` are conjugate for a conic with quadratic part
//! `Q₂ = [[A, B/2], [B/2, C]]` when `uᵀQ₂v = 0`. The midpoints of all chords
//! parallel to `u` then lie on the diameter with direction `v`.

use serde::{Deserialize, Serialize};

use crate::conic::ConicCoeffs;
use crate::error::{Error, Result};
use crate::family::InscribedEllipse;
use crate::geom::{Direction, Point, Segment, Slope};
use crate::quad::Quadrilateral;

/// Default parallelism tolerance on `|sin θ|`.
pub const PARALLEL_TOL: f64 = 1e-9;

/// Ellipses with `b/a` above `1 − CIRCLE_TOL` are treated as circles.
pub const CIRCLE_TOL: f64 = 1e-9;

/// A pair of conjugate diameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiameterPair {
    pub dir1: Direction,
    pub dir2: Direction,
    pub endpoints1: (Point, Point),
    pub endpoints2: (Point, Point),
    pub len1_sq: f64,
    pub len2_sq: f64,
}

/// The direction conjugate to `u`: the perpendicular of `Q₂u`.
pub fn conjugate_direction(c: &ConicCoeffs, u: Direction) -> Direction {
    c.quadratic_apply(u).perp()
}

/// Where the line through the center with direction `u` meets the ellipse,
/// ordered along `u`.
pub fn diameter_endpoints(c: &ConicCoeffs, u: Direction) -> Result<(Point, Point)> {
    let center = c.center()?;
    let lambda = (-c.evaluate(center) / c.quadratic_form(u, u)).sqrt();
    if !lambda.is_finite() {
        let (delta_big, delta_small) = c.discriminants();
        return Err(Error::NotAnEllipse { delta_big, delta_small });
    }
    Ok((center - u * lambda, center + u * lambda))
}

fn len_sq(ends: (Point, Point)) -> f64 {
    (ends.1 - ends.0).norm_sq()
}

/// The diameter with direction `u` and its conjugate.
pub fn conjugate_pair(c: &ConicCoeffs, u: Direction) -> Result<DiameterPair> {
    let dir1 = u.normalized();
    let dir2 = conjugate_direction(c, dir1).normalized();
    let endpoints1 = diameter_endpoints(c, dir1)?;
    let endpoints2 = diameter_endpoints(c, dir2)?;
    Ok(DiameterPair { dir1, dir2, endpoints1, endpoints2, len1_sq: len_sq(endpoints1), len2_sq: len_sq(endpoints2) })
}

/// The conjugate diameters of equal length. They run along the diagonals
/// of the rectangle circumscribed about the ellipse along its axes, i.e.
/// along `a·major ± b·minor`.
pub fn equal_conjugate_diameters(c: &ConicCoeffs) -> Result<DiameterPair> {
    let g = c.geometry()?;
    if g.semi_minor / g.semi_major > 1.0 - CIRCLE_TOL {
        return Err(Error::IsCircle);
    }
    let major = g.major_axis_direction * g.semi_major;
    let minor = g.minor_axis_direction() * g.semi_minor;
    let dir1 = (major + minor).normalized();
    let dir2 = (major - minor).normalized();
    let endpoints1 = diameter_endpoints(c, dir1)?;
    let endpoints2 = diameter_endpoints(c, dir2)?;
    Ok(DiameterPair { dir1, dir2, endpoints1, endpoints2, len1_sq: len_sq(endpoints1), len2_sq: len_sq(endpoints2) })
}

/// Identifies a chord between two tangency points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chord {
    Q1Q2,
    Q2Q3,
    Q3Q4,
    Q1Q4,
}

impl Chord {
    pub const ALL: [Chord; 4] = [Chord::Q1Q2, Chord::Q2Q3, Chord::Q3Q4, Chord::Q1Q4];

    fn endpoints(self) -> (usize, usize) {
        match self {
            Chord::Q1Q2 => (0, 1),
            Chord::Q2Q3 => (1, 2),
            Chord::Q3Q4 => (2, 3),
            Chord::Q1Q4 => (0, 3),
        }
    }
}

/// The four chords joining consecutive tangency points, in [`Chord::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangencyChords {
    pub chords: [Segment; 4],
    pub slopes: [Slope; 4],
}

impl TangencyChords {
    pub fn get(&self, chord: Chord) -> Segment {
        self.chords[chord as usize]
    }

    pub fn slope(&self, chord: Chord) -> Slope {
        self.slopes[chord as usize]
    }
}

pub fn tangency_chords(ie: &InscribedEllipse) -> TangencyChords {
    let chords = Chord::ALL.map(|ch| {
        let (i, j) = ch.endpoints();
        Segment::new(ie.tangency[i], ie.tangency[j])
    });
    TangencyChords { chords, slopes: chords.map(|s| s.direction().slope()) }
}

/// Parallelism of the tangency chords with the diagonals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct T2Report {
    pub parallel_to_d1: Vec<Chord>,
    pub parallel_to_d2: Vec<Chord>,
    /// `|sin|` of the angle between each chord and `(D1, D2)`, in [`Chord::ALL`] order.
    pub sines: [[f64; 2]; 4],
}

impl T2Report {
    /// Worst `|sin|` among the pairings `q2q3, q1q4 ∥ D2`.
    pub fn type1_defect(&self) -> f64 {
        self.sines[Chord::Q2Q3 as usize][1].max(self.sines[Chord::Q1Q4 as usize][1])
    }

    /// Worst `|sin|` among the pairings `q1q2, q3q4 ∥ D1`.
    pub fn type2_defect(&self) -> f64 {
        self.sines[Chord::Q1Q2 as usize][0].max(self.sines[Chord::Q3Q4 as usize][0])
    }

    /// Smallest `|sin|` among the four pairings above; a non-MDQ keeps this
    /// away from zero.
    pub fn best_alignment(&self) -> f64 {
        [
            self.sines[Chord::Q2Q3 as usize][1],
            self.sines[Chord::Q1Q4 as usize][1],
            self.sines[Chord::Q1Q2 as usize][0],
            self.sines[Chord::Q3Q4 as usize][0],
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
    }
}

pub fn check_t2(q: &Quadrilateral, ie: &InscribedEllipse, tol: f64) -> T2Report {
    let diag = q.diagonals();
    let dirs = [diag.d1.direction(), diag.d2.direction()];
    let chords = tangency_chords(ie);
    let sines = chords.chords.map(|s| dirs.map(|d| s.direction().sin_angle(d)));
    let pick = |k: usize| -> Vec<Chord> { Chord::ALL.into_iter().filter(|ch| sines[*ch as usize][k] <= tol).collect() };
    T2Report { parallel_to_d1: pick(0), parallel_to_d2: pick(1), sines }
}

/// `|sin|` of the angle between the direction conjugate to `D1` and `D2`.
pub fn t1_margin(q: &Quadrilateral, c: &ConicCoeffs) -> f64 {
    let diag = q.diagonals();
    conjugate_direction(c, diag.d1.direction()).sin_angle(diag.d2.direction())
}

/// Whether the diameters parallel to the two diagonals are conjugate.
pub fn check_t1(q: &Quadrilateral, c: &ConicCoeffs, tol: f64) -> bool {
    t1_margin(q, c) <= tol
}
