use std::fmt;

use thiserror::Error;

/// A slot of a parameter matrix whose entry exceeds its degree bound.
///
/// Indices are 1-based (row `i` in `1..=t+1`, column `j` in `1..=t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotViolation {
    pub i: usize,
    pub j: usize,
    pub degree: i64,
    pub bound: i64,
}

impl fmt::Display for SlotViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BOUND_VIOLATION({},{},{},{})", self.i, self.j, self.degree, self.bound)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("DIVISION_BY_ZERO")]
    DivisionByZero,
    #[error("FIELD_MISMATCH: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("NOT_PRIME: {0} is not a word-size prime")]
    NotPrime(u64),
    #[error("PARSE_ERROR: {reason} in {input:?}")]
    Parse { input: String, reason: String },
    #[error("ZERO_POLYNOMIAL")]
    ZeroPolynomial,
    #[error("NOT_HOMOGENEOUS: {0}")]
    NotHomogeneous(String),
    #[error("BAD_M_VECTOR: {0}")]
    BadMVector(String),
    #[error("NOT_LEXSEGMENT: m = {0:?}")]
    NotLexSegment(Vec<u32>),
    #[error("COLENGTH_TOO_SMALL: colength {0} < 2")]
    ColengthTooSmall(u64),
    #[error("BAD_MATRIX: {0}")]
    BadMatrix(String),
    #[error("{}", join_violations(.0))]
    BoundViolation(Vec<SlotViolation>),
    #[error("LEADING_TERM_MISMATCH: f_{index} has leading term {found}, expected {expected}")]
    LeadingTermMismatch {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("WRONG_INITIAL_IDEAL: expected minimal generators {expected:?}, found {found:?}")]
    WrongInitialIdeal {
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("NOT_GROEBNER: {0}")]
    NotGroebner(String),
    #[error("MOVE_NOT_APPLICABLE: Red({i},{j}) {reason}")]
    MoveNotApplicable { i: usize, j: usize, reason: String },
    #[error("NON_TERMINATION_GUARD: {moves} reduction moves exceeded cap {cap}")]
    NonTerminationGuard { moves: usize, cap: usize },
    #[error("INTERNAL_REDUCTION_FAILURE: {0}")]
    InternalReductionFailure(String),
    #[error("EMPTY_STRATUM: degree {j}, u = {u} outside [{lower}, {upper}]")]
    EmptyStratum {
        j: u32,
        u: i64,
        lower: i64,
        upper: i64,
    },
    #[error("CHAR_TOO_SMALL: characteristic {prime} must exceed {max_degree}")]
    CharTooSmall { prime: u64, max_degree: usize },
    #[error("IO_ERROR: {0}")]
    Io(String),
}

fn join_violations(v: &[SlotViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl Error {
    /// Stable upper-case code, as printed at the start of the message.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::FieldMismatch(..) => "FIELD_MISMATCH",
            Error::NotPrime(_) => "NOT_PRIME",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::NotHomogeneous(_) => "NOT_HOMOGENEOUS",
            Error::BadMVector(_) => "BAD_M_VECTOR",
            Error::NotLexSegment(_) => "NOT_LEXSEGMENT",
            Error::ColengthTooSmall(_) => "COLENGTH_TOO_SMALL",
            Error::BadMatrix(_) => "BAD_MATRIX",
            Error::BoundViolation(_) => "BOUND_VIOLATION",
            Error::LeadingTermMismatch { .. } => "LEADING_TERM_MISMATCH",
            Error::WrongInitialIdeal { .. } => "WRONG_INITIAL_IDEAL",
            Error::NotGroebner(_) => "NOT_GROEBNER",
            Error::MoveNotApplicable { .. } => "MOVE_NOT_APPLICABLE",
            Error::NonTerminationGuard { .. } => "NON_TERMINATION_GUARD",
            Error::InternalReductionFailure(_) => "INTERNAL_REDUCTION_FAILURE",
            Error::EmptyStratum { .. } => "EMPTY_STRATUM",
            Error::CharTooSmall { .. } => "CHAR_TOO_SMALL",
            Error::Io(_) => "IO_ERROR",
        }
    }

    /// Process exit code: 3 for internal defects, 2 for everything the caller
    /// can fix by changing the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonTerminationGuard { .. } | Error::InternalReductionFailure(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
