use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial {divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid column set {0:?}: need 1 <= i < j < k <= n")]
    InvalidColumns(Vec<usize>),

    #[error("invalid block structure: {0}")]
    InvalidBlocks(String),

    #[error("invalid subset {0:?}")]
    InvalidSubset(Vec<usize>),

    #[error("n = {0} is too small, need n >= 3")]
    TooSmall(usize),

    #[error("triple {0:?} is not a generator of this matching-field ideal")]
    NotAGenerator((usize, usize, usize)),

    #[error("invalid weight order: {0}")]
    InvalidWeightOrder(String),

    #[error("step budget of {0} exceeded")]
    BudgetExceeded(usize),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("generators do not have linear quotients in the given order")]
    NotLinearQuotients,

    #[error("layers are only defined for arity >= 2")]
    ArityTooSmall,

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("monomial map is not injective: {0}")]
    NotInjective(String),

    #[error("relabelling is not total: {0} does not occur in the top layer")]
    RelabelNotTotal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
