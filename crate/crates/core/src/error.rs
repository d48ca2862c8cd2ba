use thiserror::Error;

/// Errors raised by the geometry kernel and the theorem checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields (radicands {0} and {1})")]
    MixedRadicands(String, String),
    #[error("square-free normalization of zero")]
    ZeroRadicand,
    #[error("radicand {0} exceeds the factorization bound")]
    RadicandTooLarge(String),
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("point does not lie on the line")]
    NotOnLine,
    #[error("cross-ratio is indeterminate (0/0)")]
    IndeterminateCrossRatio,
    #[error("conic matrix is not symmetric")]
    NonSymmetricConic,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("line is tangent to the absolute conic")]
    TangentLine,
    #[error("point lies on the absolute conic")]
    PointOnConic,
    #[error("classification needs a real conic")]
    ImaginaryConic,
    #[error("operation needs rational input")]
    NotRational,
    #[error("no involution exchanges the given pairs")]
    InconsistentPairs,
    #[error("quadrangle is degenerate")]
    DegenerateQuadrangle,
    #[error("quadrangle vertex lies on the line")]
    VertexOnLine,
    #[error("quadrangle pairs do not form an involution")]
    PappusViolation,
    #[error("projectivity is the identity")]
    IdentityMap,
    #[error("projectivity has a double fixed point")]
    ParabolicMap,
    #[error("projectivities act on different lines")]
    DifferentLines,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("absolute involution has real fixed points")]
    RealFixedPoints,
    #[error("point lies at infinity")]
    PointAtInfinity,
    #[error("point is the pole of the line; every line through it is perpendicular")]
    PointIsPole,
    #[error("operation is not defined in this model: {0}")]
    NotApplicable(&'static str),
    #[error("degenerate pencil of lines")]
    DegeneratePencil,
    #[error("general position guard failed: {0}")]
    Guard(String),
    #[error("vertex lies on the absolute conic: {0}")]
    BoundaryVertex(&'static str),
    #[error("configuration does not belong to a named shadow")]
    UnclassifiedShadow,
    #[error("configuration classified as {found}, expected {expected}")]
    KindMismatch { expected: String, found: String },
    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("sampling exhausted after {0} attempts")]
    SamplingExhausted(u64),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
