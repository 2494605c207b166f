//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong when building geometry or evaluating metrics.
///
/// Violations of the inequalities under test are *not* errors; they are
/// reported as witnesses by the sweep functions in [`crate::verify`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point coordinates must be finite")]
    NonFinitePoint,

    #[error("point must have at least one coordinate")]
    EmptyPoint,

    #[error("sphere radius must be positive, got {0}")]
    InvalidRadius(f64),

    #[error("half-space normal must have unit norm (|normal| = {0})")]
    NonUnitNormal(f64),

    #[error("finite point set must be nonempty")]
    EmptyPointSet,

    #[error("polygonal chain needs at least two vertices")]
    ChainTooShort,

    #[error("polygonal chain has coincident consecutive vertices at index {0}")]
    ChainDuplicateVertex(usize),

    #[error("polygonal chains are supported in dimension 2 only, got {0}")]
    ChainNotPlanar(usize),

    #[error("unsupported analytic pair — discretize first")]
    UnsupportedHausdorffPair,

    #[error("metric constant c must be positive, got {0}")]
    InvalidConstant(f64),

    #[error("point not in domain")]
    PointNotInDomain,

    #[error("domain has no interior tag but the operation requires one")]
    MissingInterior,

    #[error("boundary set has no interior on either side")]
    NoInterior,

    #[error("point not in unit ball")]
    NotInUnitBall,

    #[error("point at the origin is excluded")]
    OriginExcluded,

    #[error("ball radii undefined on the boundary")]
    BallRadiiOnBoundary,

    #[error("ball radius parameter must be positive, got {0}")]
    InvalidBallRadius(f64),

    #[error("reflection pole")]
    ReflectionPole,

    #[error("matrix is not orthogonal within 1e-12")]
    NotOrthogonal,

    #[error("inversion center undefined for a = 0")]
    InversionCenterAtOrigin,

    #[error("log-ratio bound requires x >= y > 0, got x = {x}, y = {y}")]
    LogRatioPrecondition { x: f64, y: f64 },

    #[error("schedule not decreasing")]
    ScheduleNotDecreasing,

    #[error("perturbation is only defined for finite point sets and chains")]
    UnsupportedPerturbation,

    #[error("bilipschitz estimation needs at least {min} sample pairs, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("all sampled pairs were coincident")]
    AllPairsCoincident,

    #[error("probe radii must be strictly decreasing and at least {min:e}")]
    InvalidProbeRadii { min: f64 },

    #[error("at least {min} probes per circle are required, got {got}")]
    TooFewProbes { min: usize, got: usize },

    #[error("more than half of the probes at radius {radius} were outside the map's domain")]
    TooManyProbesSkipped { radius: f64 },

    #[error("config: {0}")]
    Config(String),

    #[error("domain file {path}: {source}")]
    DomainFile { path: String, source: Box<Error> },

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    MalformedJson {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown key {key:?} in {context}")]
    UnknownKey { key: String, context: String },

    #[error("missing key {key:?} in {context}")]
    MissingKey { key: String, context: String },

    #[error("invalid value for {key:?} in {context}: {message}")]
    InvalidValue {
        key: String,
        context: String,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
