//! Exact weighted core inverses, weighted dual core inverses, group inverses,
//! weighted Moore–Penrose inverses and weighted-EP detection for square
//! matrices over exact *-fields.
//!
//! The ring is `Mat<S>` for a [`StarScalar`] backend `S`; its involution is
//! conjugate-transpose. Weights e and f are invertible Hermitian matrices
//! ([`Weight`]). Constructors return certificates that can be replayed, and
//! nonexistence of an inverse is reported as a typed [`NotInvertible`] value.

pub mod characterize;
pub mod cli;
pub mod codec;
pub mod error;
pub mod ginverse;
pub mod matrix;
pub mod oracle;
pub mod random;
pub mod scalar;

pub use error::{Error, NotInvertible, Outcome, Reason, Result};
pub use ginverse::{GInverseKind, InverseCertificate};
pub use matrix::{Mat, Weight};
pub use scalar::{Backend, Fp, GaussianRational, Rational, StarScalar, F2, F3, F5};
