use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("vertices are not in strictly convex position")]
    NonConvexInput,
    #[error("repeated vertex")]
    DuplicateVertex,
    #[error("all quadratic coefficients of the conic vanish")]
    DegenerateConic,
    #[error("conic is not an ellipse (Δ = {delta_big}, δ = {delta_small})")]
    NotAnEllipse { delta_big: f64, delta_small: f64 },
    #[error("{name} = {value} is outside its admissible region")]
    ParamOutOfRegion { name: &'static str, value: f64 },
    #[error("quadrilateral is a parallelogram")]
    IsParallelogram,
    #[error("affine map is singular")]
    SingularMap,
    #[error("no tangency found on side {side}")]
    TangencyNotFound { side: usize },
    #[error("quadrilateral has no inscribed circle")]
    NotTangential,
    #[error("ellipse is a circle; equal conjugate diameters are not unique")]
    IsCircle,
    #[error("triangle vertices are collinear")]
    CollinearTriangle,
    #[error("weights must be positive after normalization")]
    NonPositiveWeights,
    #[error("no root of the quadratic lies in (0, 1)")]
    NoRootInJ,
    #[error("quadrilateral is not a midpoint diagonal quadrilateral")]
    NotMdq,
    #[error("found {count} critical points of the axis ratio in (0, 1); expected one")]
    MultipleCriticalPoints { count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with `ParamOutOfRegion` unless `lo + margin < value < hi - margin`.
pub(crate) fn check_open(name: &'static str, value: f64, lo: f64, hi: f64, margin: f64) -> Result<()> {
    if value.is_finite() && value > lo + margin && value < hi - margin {
        Ok(())
    } else {
        Err(Error::ParamOutOfRegion { name, value })
    }
}
