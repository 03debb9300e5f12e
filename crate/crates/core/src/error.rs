use thiserror::Error;

/// Errors raised by the algebra core.
///
/// Verdicts such as "not effective" or "not Cartier" are ordinary return
/// values; only malformed input and broken preconditions end up here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ray {index} is not primitive (gcd {gcd})")]
    NonPrimitiveRay { index: usize, gcd: i64 },
    #[error("ray {index} has length {len}, expected {dim}")]
    RayDimension { index: usize, len: usize, dim: usize },
    #[error("cone {cone} is not simplicial: {reason}")]
    NonSimplicialCone { cone: usize, reason: String },
    #[error("fan is incomplete: facet {facet:?} lies in {count} maximal cone(s)")]
    IncompleteFan { facet: Vec<usize>, count: usize },
    #[error("fan is disconnected: {components} components in the cone adjacency graph")]
    DisconnectedFan { components: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("malformed divisor class: {0}")]
    MalformedClass(String),
    #[error("class has no integer lift: {0}")]
    NoLiftFound(String),
    #[error("input class is not effective")]
    NotEffectiveInput,
    #[error("eta must be a nonzero effective class")]
    ZeroEta,
    #[error("lattice enumeration is unbounded: {0}")]
    EnumerationBudgetExceeded(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero polynomial has no intrinsic degree")]
    ZeroPolynomial,
    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("ideal has a degree-zero generator, so it is not contained in the irrelevant ideal")]
    UnitGenerator,
    #[error("ideal generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("quotient has dimension {0} in the socle degree, expected 1")]
    SocleDimensionNotOne(usize),

    #[error("{got} polynomials exceed the ambient dimension {dim}")]
    TooManyPolynomials { got: usize, dim: usize },
    #[error("index {index} is excluded ({reason})")]
    ExcludedIndex { index: i64, reason: String },
    #[error("index {index} outside 0..={max}")]
    HodgeIndexOutOfRange { index: i64, max: i64 },
    #[error("at least one polynomial is required")]
    NoPolynomials,

    #[error("degenerate denominator: r = {r} must exceed k + 1 = {}", k + 1)]
    DegenerateDenominator { r: i64, k: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name used in structured error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrimitiveRay { .. } => "NonPrimitiveRay",
            Error::RayDimension { .. } => "RayDimension",
            Error::NonSimplicialCone { .. } => "NonSimplicialCone",
            Error::IncompleteFan { .. } => "IncompleteFan",
            Error::DisconnectedFan { .. } => "DisconnectedFan",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidFan(_) => "InvalidFan",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::MalformedClass(_) => "MalformedClass",
            Error::NoLiftFound(_) => "NoLiftFound",
            Error::NotEffectiveInput => "NotEffectiveInput",
            Error::ZeroEta => "ZeroEta",
            Error::EnumerationBudgetExceeded(_) => "EnumerationBudgetExceeded",
            Error::Overflow(_) => "Overflow",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::Parse { .. } => "Parse",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::RingMismatch => "RingMismatch",
            Error::UnitGenerator => "UnitGenerator",
            Error::ZeroGenerator(_) => "ZeroGenerator",
            Error::SocleDimensionNotOne(_) => "SocleDimensionNotOne",
            Error::TooManyPolynomials { .. } => "TooManyPolynomials",
            Error::ExcludedIndex { .. } => "ExcludedIndex",
            Error::HodgeIndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NoPolynomials => "NoPolynomials",
            Error::DegenerateDenominator { .. } => "DegenerateDenominator",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
