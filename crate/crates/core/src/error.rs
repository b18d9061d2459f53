use alloc::string::String;

/// Usage errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to}): {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("order {order} needs {expected} coefficients, got {found}")]
    CoefficientCount { order: u32, expected: usize, found: usize },
    #[error("malformed rational {0:?}")]
    ParseRational(String),
    #[error("series truncation bound mismatch: {left} vs {right}")]
    BoundMismatch { left: usize, right: usize },
    #[error("operands live in different coefficient rings")]
    ContextMismatch,
    #[error("series constant term must be a nonzero rational")]
    NotAUnit,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("character index {index} out of range for modulus {modulus} ({count} characters)")]
    CharacterIndex { modulus: u64, index: usize, count: usize },
}
