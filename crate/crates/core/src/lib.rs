//! Ellipses inscribed in convex quadrilaterals.
//!
//! The crate classifies quadrilaterals (midpoint diagonal, tangential,
//! orthodiagonal, ...), builds the one-parameter family of inscribed
//! ellipses, and finds the inscribed ellipse of minimal eccentricity.
//! For midpoint diagonal quadrilaterals that ellipse is obtained in closed
//! form, and its equal conjugate diameters are parallel to the diagonals.

pub mod affine;
pub mod conic;
pub mod diameters;
pub mod error;
pub mod family;
pub mod geom;
pub mod marden;
pub mod min_ecc;
pub mod poly;
pub mod quad;

pub use affine::{normalize_to_qst, normalize_to_qstvw, AffineMap, QstFrame, QstvwFrame};
pub use conic::{ConicCoeffs, EllipseGeometry, LineHits, TANGENCY_TOL};
pub use diameters::{
    check_t1, check_t2, conjugate_direction, diameter_endpoints, equal_conjugate_diameters, tangency_chords, Chord,
    DiameterPair, T2Report, TangencyChords,
};
pub use error::{Error, Result};
pub use family::{inscribe, inscribed_circle, FamilyFrame, InscribedEllipse};
pub use geom::{Direction, Point, Segment, Slope, Vector};
pub use marden::{marden_foci, MardenEllipse};
pub use min_ecc::{
    alpha_root, min_ecc, min_ecc_numeric, verify_t3, EccFunctional, MinEccMethod, MinEccResult, T3Report,
};
pub use poly::Poly;
pub use quad::{ClassificationReport, DiagonalData, FValues, Quadrilateral, CLASSIFY_TOL};
