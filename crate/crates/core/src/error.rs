use thiserror::Error;

use crate::algebra::Signature;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported signature ({p},{q}): need p + q <= 4")]
    SignatureTooLarge { p: u8, q: u8 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation requires signature {expected}, got {found}")]
    WrongSignature { expected: Signature, found: Signature },

    #[error("grade {grade} out of range for an algebra of dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("expected an even multivector, odd part has magnitude {odd_norm:e}")]
    NotEven { odd_norm: f64 },

    #[error("expected a {expected} spinor, got {found}")]
    KindMismatch { expected: &'static str, found: &'static str },

    #[error(
        "rotor is not normalized: R*conj(R) deviates from 1 by {deviation:e}; \
         divide R by the square root of its center-valued norm first"
    )]
    NotNormalized { deviation: f64 },

    #[error("decomposition undefined: Psi*conj(Psi) = {re:e} + {im:e} e123 is singular")]
    SingularDensity { re: f64, im: f64 },

    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),

    #[error("element is outside the requested span (residual {residual:e})")]
    OutOfSpan { residual: f64 },

    #[error("invalid blade name {0:?}")]
    InvalidBlade(String),

    #[error("matrix shape {rows}x{cols} does not match the expected {expected}x{expected}")]
    MatrixShape { rows: usize, cols: usize, expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
