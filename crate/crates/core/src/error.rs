use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial text; `position` is a byte offset.
    Syntax { position: usize, message: String },
    UnknownVariable { position: usize, name: String },
    NonRationalLiteral { position: usize, literal: String },
    InvalidVariableName(String),
    RingMismatch,
    ZeroPolynomial,
    /// A local order was given where a global one is required, or vice versa.
    OrderMismatch(&'static str),
    BudgetExceeded { pairs: usize },
    /// The gradient does not vanish at the origin.
    NotSingular,
    /// The local algebra at the origin is infinite dimensional.
    NonIsolated,
    NonIntegralMilnorOrlik,
    UnsupportedCorank(usize),
    InvalidIndex(String),
    NotDuVal(String),
    InvalidHyperplane(String),
    PositiveDimensional,
    PointNotCritical,
    InconsistentConstraints(String),
    UnknownLocus(String),
    InvalidLambda(String),
    InvalidTransition(String),
    ValidationMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { position, message } => {
                write!(f, "syntax error at offset {position}: {message}")
            }
            Error::UnknownVariable { position, name } => {
                write!(f, "unknown variable `{name}` at offset {position}")
            }
            Error::NonRationalLiteral { position, literal } => {
                write!(f, "non-rational literal `{literal}` at offset {position}")
            }
            Error::InvalidVariableName(n) => write!(f, "invalid variable name `{n}`"),
            Error::RingMismatch => f.write_str("polynomials live in different rings"),
            Error::ZeroPolynomial => f.write_str("operation undefined for the zero polynomial"),
            Error::OrderMismatch(what) => write!(f, "term order mismatch: {what}"),
            Error::BudgetExceeded { pairs } => {
                write!(f, "computation budget exceeded after {pairs} pairs")
            }
            Error::NotSingular => f.write_str("the origin is not a singular point"),
            Error::NonIsolated => f.write_str("the singularity at the origin is not isolated"),
            Error::NonIntegralMilnorOrlik => {
                f.write_str("Milnor-Orlik product is not a non-negative integer")
            }
            Error::UnsupportedCorank(c) => write!(f, "splitting lemma unsupported for corank {c}"),
            Error::InvalidIndex(m) => write!(f, "invalid index: {m}"),
            Error::NotDuVal(m) => write!(f, "section is not a Du Val singularity: {m}"),
            Error::InvalidHyperplane(m) => write!(f, "invalid hyperplane: {m}"),
            Error::PositiveDimensional => f.write_str("solution set is positive dimensional"),
            Error::PointNotCritical => f.write_str("point does not satisfy the critical system"),
            Error::InconsistentConstraints(m) => write!(f, "inconsistent constraints: {m}"),
            Error::UnknownLocus(m) => write!(f, "unknown locus `{m}`"),
            Error::InvalidLambda(m) => write!(f, "invalid deformation vector: {m}"),
            Error::InvalidTransition(m) => write!(f, "invalid transition data: {m}"),
            Error::ValidationMismatch(m) => write!(f, "validation mismatch: {m}"),
        }
    }
}

impl core::error::Error for Error {}
