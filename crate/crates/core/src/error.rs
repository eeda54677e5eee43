use std::fmt;

use thiserror::Error;

/// A named hypothesis of a verification check.
///
/// Each variant mirrors one side condition of the identity being checked, so a
/// rejected parameter tuple always reports which hypothesis it violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gate {
    PrimeTooSmall,
    DIsZero,
    DCubedIsOne,
    MIsZero,
    NIsZero,
    ArgumentIsOne,
    AIsZero,
    BIsZero,
    Singular,
    JIsZero,
    JIs1728,
    BranchEquation,
    AuxIsZero,
    BranchDenominator,
    ArgumentIsZero,
    TDivisibleByP,
    QNotOneModM,
}

impl Gate {
    pub fn name(self) -> &'static str {
        match self {
            Gate::PrimeTooSmall => "prime_too_small",
            Gate::DIsZero => "d_is_zero",
            Gate::DCubedIsOne => "d_cubed_is_one",
            Gate::MIsZero => "m_is_zero",
            Gate::NIsZero => "n_is_zero",
            Gate::ArgumentIsOne => "argument_is_one",
            Gate::AIsZero => "a_is_zero",
            Gate::BIsZero => "b_is_zero",
            Gate::Singular => "singular_curve",
            Gate::JIsZero => "j_is_zero",
            Gate::JIs1728 => "j_is_1728",
            Gate::BranchEquation => "branch_equation",
            Gate::AuxIsZero => "aux_is_zero",
            Gate::BranchDenominator => "branch_denominator",
            Gate::ArgumentIsZero => "argument_is_zero",
            Gate::TDivisibleByP => "t_divisible_by_p",
            Gate::QNotOneModM => "q_not_1_mod_m",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator of {0} is divisible by p")]
    DenominatorDivisibleByP(String),
    #[error("operands belong to different p-adic contexts")]
    ContextMismatch,
    #[error("element is not a unit (it vanishes mod p)")]
    NotAUnit,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("precision exhausted: {available} digits available, {required} required; raise K")]
    PrecisionExhausted { available: i64, required: i64 },
    #[error("p^K = {p}^{k} does not fit the 62-bit working modulus")]
    PrecisionTooLarge { p: u64, k: u32 },
    #[error("{0} is not an odd prime")]
    CompositeP(u64),
    #[error("field of order {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("character index is trivial (k = 0 mod q - 1)")]
    TrivialCharacter,
    #[error("q = {q} is not 1 mod {m}")]
    ModulusMismatch { q: u64, m: u64 },
    #[error("p-adic value is not a rational integer at the available precision")]
    NotAnInteger,
    #[error("bound {bound} needs more than the {available} available p-adic digits")]
    BoundTooLargeForPrecision { bound: u64, available: i64 },
    #[error("no integer of absolute value at most {bound} matches the p-adic value")]
    NoRepresentativeInBound { bound: u64 },
    #[error("Hessian curve is singular (d^3 = 1)")]
    SingularHessian,
    #[error("Weierstrass curve is singular (4a^3 + 27b^2 = 0)")]
    SingularCurve,
    #[error("cannot sum an empty list of p-adic numbers")]
    EmptySum,
    #[error("precondition failed: {0}")]
    PreconditionFailed(Gate),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
