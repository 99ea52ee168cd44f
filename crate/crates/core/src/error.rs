use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the arithmetic, set, series and paradox layers.
///
/// The expression language forwards these unchanged inside
/// [`crate::exprlang::LangError::Eval`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero: division by zero")]
    DivisionByZero,
    #[error("NotExactlyDivisible: {dividend} is not exactly divisible by {divisor}")]
    NotExactlyDivisible { dividend: String, divisor: String },
    #[error("NegativePowerOfSum: negative power of a multi-term number {0}")]
    NegativePowerOfSum(String),
    #[error("ZeroToZero: 0^0 is undefined")]
    ZeroToZero,
    #[error("ExponentNotLinearInGrossone: exponent {0} is not of the form a*G + d with integer a, d")]
    ExponentNotLinearInGrossone(String),
    #[error("ExponentTooLarge: exponent {0} is too large to expand")]
    ExponentTooLarge(String),
    #[error("NonPositiveBase: base {0} must be positive")]
    NonPositiveBase(String),
    #[error("NotAGrossInteger: {0} is not a gross-integer")]
    NotAGrossInteger(String),
    #[error("ZeroModulus: modulus must be a positive integer")]
    ZeroModulus,
    #[error("NotAMonomial: {0} has more than one term")]
    NotAMonomial(String),
    #[error("CoefficientNotPerfectPower: coefficient of {0} is not a perfect {1}-th power")]
    CoefficientNotPerfectPower(String, u32),
    #[error("BaseRootUnsupported: roots of exponential factors are not supported ({0})")]
    BaseRootUnsupported(String),
    #[error("FractionalGrossPower: {0} has a fractional power of G and cannot be evaluated")]
    FractionalGrossPower(String),
    #[error("ResidueOutOfRange: residue {k} must lie in 1..={n}")]
    ResidueOutOfRange { k: BigInt, n: BigInt },
    #[error("InvalidStep: step must be a positive integer, got {0}")]
    InvalidStep(BigInt),
    #[error("NonPositiveCount: count {0} must be a positive gross-integer")]
    NonPositiveCount(String),
    #[error("IndexOutOfRange: index {index} outside 1..={count}")]
    IndexOutOfRange { index: String, count: String },
    #[error("GrossFirstUnsupported: progression starting at {0} cannot be intersected")]
    GrossFirstUnsupported(String),
    #[error("ElementAlreadyPresent: {0} already belongs to the set")]
    ElementAlreadyPresent(BigInt),
    #[error("ElementNotPresent: {0} does not belong to the set")]
    ElementNotPresent(BigInt),
    #[error("UnitRatio: ratio 1 is an arithmetic progression, use ap_sum")]
    UnitRatio,
    #[error("ZeroRatio: ratio must be nonzero")]
    ZeroRatio,
    #[error("OddLength: rearranged Grandi sum needs an even number of addends, got {0}")]
    OddLength(String),
    #[error("TooManyNewcomers: {0} newcomers exceed the G rooms of the hotel")]
    TooManyNewcomers(String),
    #[error("NotInfinitesimalWidth: width {0} must be c*G^-m with c > 0, m > 0")]
    NotInfinitesimalWidth(String),
    #[error("CountNotGrossInteger: segment count {0} is not a gross-integer")]
    CountNotGrossInteger(String),
    #[error("UnknownParadox: {0}")]
    UnknownParadox(String),
}

impl Error {
    /// Stable variant name, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NotExactlyDivisible { .. } => "NotExactlyDivisible",
            Error::NegativePowerOfSum(_) => "NegativePowerOfSum",
            Error::ZeroToZero => "ZeroToZero",
            Error::ExponentNotLinearInGrossone(_) => "ExponentNotLinearInGrossone",
            Error::ExponentTooLarge(_) => "ExponentTooLarge",
            Error::NonPositiveBase(_) => "NonPositiveBase",
            Error::NotAGrossInteger(_) => "NotAGrossInteger",
            Error::ZeroModulus => "ZeroModulus",
            Error::NotAMonomial(_) => "NotAMonomial",
            Error::CoefficientNotPerfectPower(..) => "CoefficientNotPerfectPower",
            Error::BaseRootUnsupported(_) => "BaseRootUnsupported",
            Error::FractionalGrossPower(_) => "FractionalGrossPower",
            Error::ResidueOutOfRange { .. } => "ResidueOutOfRange",
            Error::InvalidStep(_) => "InvalidStep",
            Error::NonPositiveCount(_) => "NonPositiveCount",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::GrossFirstUnsupported(_) => "GrossFirstUnsupported",
            Error::ElementAlreadyPresent(_) => "ElementAlreadyPresent",
            Error::ElementNotPresent(_) => "ElementNotPresent",
            Error::UnitRatio => "UnitRatio",
            Error::ZeroRatio => "ZeroRatio",
            Error::OddLength(_) => "OddLength",
            Error::TooManyNewcomers(_) => "TooManyNewcomers",
            Error::NotInfinitesimalWidth(_) => "NotInfinitesimalWidth",
            Error::CountNotGrossInteger(_) => "CountNotGrossInteger",
            Error::UnknownParadox(_) => "UnknownParadox",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
