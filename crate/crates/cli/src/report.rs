//! Report documents written to standard output.

use inellipse_core::{
    equal_conjugate_diameters, ClassificationReport, FamilyFrame, InscribedEllipse, MinEccMethod, MinEccResult, Point,
    Quadrilateral, T3Report, Vector,
};
use serde::Serialize;

use crate::verify::VerificationBlock;
use crate::CliError;

fn xy(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

fn dxy(v: Vector) -> [f64; 2] {
    [v.x, v.y]
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Canonical order: clockwise from the lowest vertex.
    pub vertices: [[f64; 2]; 4],
    pub classification: ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ellipse: Option<EllipseBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_ecc: Option<MinEccBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t3: Option<T3Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal_conjugate_diameters: Option<ConjugateBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationBlock>,
}

impl ReportDocument {
    pub fn new(label: Option<String>, q: &Quadrilateral, tol: f64) -> Self {
        ReportDocument {
            label,
            vertices: q.vertices().map(xy),
            classification: q.classify(tol),
            ellipse: None,
            min_ecc: None,
            t3: None,
            equal_conjugate_diameters: None,
            verification: None,
        }
    }
}

/// An inscribed ellipse. Coefficients of `Ax² + Bxy + Cy² + Dx + Ey + F`
/// are divided by `scale` so the largest has magnitude 1.
#[derive(Debug, Clone, Serialize)]
pub struct EllipseBlock {
    /// Fraction along the first side of its tangency point.
    pub param: f64,
    pub coefficients: [f64; 6],
    pub scale: f64,
    pub center: [f64; 2],
    pub semi_axes: [f64; 2],
    pub major_axis: [f64; 2],
    pub eccentricity: f64,
    /// Tangency points on the four sides, in side order.
    pub tangency: [[f64; 2]; 4],
    pub frame: FamilyFrame,
}

impl EllipseBlock {
    pub fn new(ie: &InscribedEllipse) -> Result<Self, CliError> {
        let g = ie.geometry()?;
        Ok(EllipseBlock {
            param: ie.param,
            coefficients: ie.conic.normalized().to_array(),
            scale: ie.conic.max_abs(),
            center: xy(g.center),
            semi_axes: [g.semi_major, g.semi_minor],
            major_axis: dxy(g.major_axis_direction),
            eccentricity: g.eccentricity,
            tangency: ie.tangency.map(xy),
            frame: ie.frame,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinEccBlock {
    pub r_star: f64,
    pub method: MinEccMethod,
    /// `b²/a²` of the optimal ellipse.
    pub axis_ratio_sq: f64,
}

impl From<&MinEccResult> for MinEccBlock {
    fn from(res: &MinEccResult) -> Self {
        MinEccBlock { r_star: res.r_star, method: res.method, axis_ratio_sq: res.axis_ratio_sq }
    }
}

/// The equal conjugate diameters of an ellipse and how they sit against the
/// diagonals. Emitted for every non-circular optimum, midpoint diagonal or
/// not, so the alignment can be explored on arbitrary input.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugateBlock {
    pub directions: [[f64; 2]; 2],
    pub endpoints: [[[f64; 2]; 2]; 2],
    pub len_sq: [f64; 2],
    /// `|sin|` of the angle between each diameter and the diagonals `(D1, D2)`.
    pub sin_to_diagonals: [[f64; 2]; 2],
}

impl ConjugateBlock {
    /// `None` for circles, whose equal conjugate diameters are not unique.
    pub fn new(q: &Quadrilateral, ie: &InscribedEllipse) -> Option<Self> {
        let pair = equal_conjugate_diameters(&ie.conic).ok()?;
        let diag = q.diagonals();
        let dirs = [diag.d1.direction(), diag.d2.direction()];
        Some(ConjugateBlock {
            directions: [dxy(pair.dir1), dxy(pair.dir2)],
            endpoints: [[xy(pair.endpoints1.0), xy(pair.endpoints1.1)], [xy(pair.endpoints2.0), xy(pair.endpoints2.1)]],
            len_sq: [pair.len1_sq, pair.len2_sq],
            sin_to_diagonals: [pair.dir1, pair.dir2].map(|u| dirs.map(|d| u.sin_angle(d))),
        })
    }
}
