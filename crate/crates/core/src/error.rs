use thiserror::Error;

use crate::taxonomy::ProperName;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector has a non-finite component")]
    NonFinite,
    #[error("zero vector has no causal character")]
    ZeroVector,
    #[error("vector is not unit: <u,u> = {0}")]
    NotUnit(f64),
    #[error("pseudo-angle requires non-null vectors")]
    NullInput,
    #[error("vectors span a null (degenerate) plane: <u,v> = {0}")]
    NullSpan(f64),
    #[error("vector is not time-like")]
    NotTimeLike,
    #[error("vectors are linearly dependent")]
    DegeneratePair,

    #[error("point is not on the de Sitter quadric: <v,v> = {0}")]
    NotOnQuadric(f64),
    #[error("position vector is not space-like: <v,v> = {0}")]
    NotSpaceLikePosition(f64),
    #[error("points coincide or are antipodal")]
    CoincidentPoints,
    #[error("tangent toward the point is null: <p,q> = {0}")]
    NullTangent(f64),
    #[error("operation is undefined for a {0:?} segment")]
    UnsupportedKind(crate::geodesic::SegmentKind),

    #[error("triangle is degenerate: vertices coincide or lie on one geodesic")]
    DegenerateTriangle,
    #[error("edge opposite vertex {edge} is impossible: <p,q> = {inner}")]
    ImpossibleEdge { edge: usize, inner: f64 },
    #[error("edge opposite vertex {edge} is null: <p,q> = {inner}")]
    NullEdge { edge: usize, inner: f64 },
    #[error("triangle is not spatiolateral")]
    NotSpatiolateral,
    #[error("edge-length sum {0} is within tolerance of 2*pi")]
    BoundaryCase(f64),
    #[error("{0:?} triangles have no polar triangle")]
    NoPolarTriangle(ProperName),
    #[error("no distinguished vertex is defined for this triangle")]
    NotApplicable,
    #[error("expected exactly one distinguished vertex, found {0}")]
    AmbiguousVertex(usize),
    #[error("non-contractible spatiolateral triangle bounds no region, so it has no area")]
    NonContractible,
    #[error("no area formula for {0:?} triangles")]
    UnsupportedTriangleType(Option<ProperName>),

    #[error("grid size {0} is below the minimum of 8")]
    GridTooSmall(usize),
    #[error("fan from vertex {0} leaves the region of traceable geodesics")]
    DegenerateFan(usize),
    #[error(
        "oracle did not converge: error estimate {est_error:e} after {refinements} refinements"
    )]
    NonConvergent { est_error: f64, refinements: usize },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("no {target:?} triangle found in {attempts} attempts")]
    ExhaustedAttempts { target: ProperName, attempts: usize },
}
