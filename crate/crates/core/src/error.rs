use std::fmt;

use thiserror::Error;

use crate::ginverse::GInverseKind;

/// Argument and input errors. A mathematically negative answer ("this element
/// has no e-core inverse") is never an `Error`; see [`NotInvertible`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("backend mismatch: expected {expected}, found {found}")]
    BackendMismatch { expected: String, found: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("power n = {n} outside supported range {min}..={max}")]
    PowerOutOfRange { n: u32, min: u32, max: u32 },
    #[error("{kind} requires weight {weight}")]
    MissingWeight { kind: GInverseKind, weight: char },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("enumeration space of {size} matrices exceeds the exhaustive limit {limit}")]
    SpaceTooLarge { size: u128, limit: u128 },
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A characterization that must hold in a matrix ring did not. Signals a bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Which membership or prerequisite was missing when an inverse does not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// a ∉ a²R
    NotInA2R,
    /// a ∉ Ra²
    NotInRA2,
    /// a ∉ Ra*ea
    NotInRAstarEA,
    /// a ∉ af⁻¹a*R
    NotInAFinvAstarR,
    /// a ∉ Raⁿ
    NotInRAn(u32),
    /// a ∉ aⁿR
    NotInAnR(u32),
    /// a ∉ R(a*)ⁿea
    NotInRAstarNEA(u32),
    /// a ∉ af⁻¹(a*)ⁿR
    NotInAFinvAstarNR(u32),
    /// A prerequisite inverse is missing.
    Prerequisite(GInverseKind, Box<Reason>),
    /// The candidate failed the listed defining equations.
    EquationsFailed(Vec<String>),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NotInA2R => write!(f, "a ∉ a²R"),
            Reason::NotInRA2 => write!(f, "a ∉ Ra²"),
            Reason::NotInRAstarEA => write!(f, "a ∉ Ra*ea"),
            Reason::NotInAFinvAstarR => write!(f, "a ∉ af⁻¹a*R"),
            Reason::NotInRAn(n) => write!(f, "a ∉ Ra^{n}"),
            Reason::NotInAnR(n) => write!(f, "a ∉ a^{n}R"),
            Reason::NotInRAstarNEA(n) => write!(f, "a ∉ R(a*)^{n}ea"),
            Reason::NotInAFinvAstarNR(n) => write!(f, "a ∉ af⁻¹(a*)^{n}R"),
            Reason::Prerequisite(kind, inner) => write!(f, "no {kind}: {inner}"),
            Reason::EquationsFailed(eqs) => write!(f, "equations {} fail", eqs.join(", ")),
        }
    }
}

/// Negative answer: the requested inverse does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} does not exist: {reason}")]
pub struct NotInvertible {
    pub kind: GInverseKind,
    pub reason: Reason,
}

impl NotInvertible {
    pub fn new(kind: GInverseKind, reason: Reason) -> Self {
        Self { kind, reason }
    }
}

/// Either the constructed object or the reason it does not exist.
pub type Outcome<T> = std::result::Result<T, NotInvertible>;
