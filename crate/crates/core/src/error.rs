use crate::algebra::AlgebraId;

/// Errors raised by the geometry routines.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("algebra mismatch: {left:?} vs {right:?}")]
    AlgebraMismatch { left: AlgebraId, right: AlgebraId },
    #[error("expected {expected} coefficients, got {found}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("parameter {0} outside [0, 1]")]
    ParameterOutOfRange(f64),
    #[error("transition parameter mismatch: algebra has t = {algebra}, requested t = {requested}")]
    ParameterMismatch { algebra: f64, requested: f64 },
    #[error("signature entries must be +1 or -1")]
    InvalidSignature,
    #[error("vector does not belong to this space")]
    SpaceMismatch,
    #[error("vectors are not linearly independent")]
    NotIndependent,
    #[error("span contains no vector with invertible self-product")]
    DegenerateSpan,
    #[error("base point is isotropic")]
    IsotropicBasePoint,
    #[error("vector is not a good point")]
    NotGood,
    #[error("point is singular")]
    SingularPoint,
    #[error("tangent vectors are based at different points")]
    BaseMismatch,
    #[error("vector is not orthogonal to the base point")]
    NotTangent,
    #[error("tance to the base point is not invertible")]
    ZeroTance,
    #[error("tangent vector is zero")]
    ZeroTangent,
    #[error("restriction of the form to the geodesic plane is not real")]
    NonRealSpanForm,
    #[error("null direction pairs non-trivially with the geodesic plane")]
    DegenerateNullDirection,
    #[error("finite-difference step must be positive")]
    InvalidStep,
    #[error("plane is degenerate: sectional curvature undefined")]
    DegeneratePlane,
    #[error("tangent pair is not orthonormal")]
    NotOrthonormal,
    #[error("curvature formula quantity is not real (residual {0:e})")]
    NonRealQuantity(f64),
    #[error("metric signature differs between sample points")]
    SignatureVaries,
    #[error("oriented circles coincide or are opposite")]
    DegenerateAngle,
    #[error("boundary points must be distinct null directions")]
    InvalidBoundary,
    #[error("point lies outside the bidisc ball")]
    OutsideBall,
    #[error("could not sample a regular point")]
    SamplingFailed,
}

pub type Result<T> = core::result::Result<T, Error>;
