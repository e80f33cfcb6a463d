use thiserror::Error;

/// Which of the five defining relations a candidate representation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationViolation {
    /// ab + ba = c
    Commutator,
    /// ac + ca = a
    WeightA,
    /// bc + cb = b
    WeightB,
    /// a^4 = 0
    NilpotentA,
    /// b^4 = 0
    NilpotentB,
    /// c^2 = c
    IdempotentC,
}

impl std::fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RelationViolation::Commutator => "ab + ba = c",
            RelationViolation::WeightA => "ac + ca = a",
            RelationViolation::WeightB => "bc + cb = b",
            RelationViolation::NilpotentA => "a^4 = 0",
            RelationViolation::NilpotentB => "b^4 = 0",
            RelationViolation::IdempotentC => "c^2 = c",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree {0} outside supported range 1..=16")]
    BadDegree(u32),
    #[error("modulus {0:#b} does not have degree {1}")]
    BadModulusDegree(u32, u32),
    #[error("modulus {0:#b} is reducible over GF(2)")]
    ReducibleModulus(u32),
    #[error("inversion of zero in GF(2^{0})")]
    ZeroInverse(u32),
    #[error("(0,0) is not a point of the projective line")]
    ZeroProjectivePoint,
    #[error("field element {0} out of range for GF(2^{1})")]
    ElementOutOfRange(u32, u32),
    #[error("field context mismatch")]
    ContextMismatch,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("defining relations violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    RelationsViolated(Vec<RelationViolation>),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("invalid label: {0}")]
    BadLabel(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("cannot classify representation: {0}")]
    Unclassified(String),
    #[error("endomorphism ring modulo its radical is a field extension of degree {0}; enlarge the coefficient field")]
    FieldTooSmall(usize),
    #[error("split budget exhausted on a {dim}-dimensional summand; offending module: {stuck}")]
    SplitBudget { dim: usize, stuck: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
