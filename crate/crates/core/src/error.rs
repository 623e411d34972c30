use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point [0:0] is not a point of P^1")]
    ZeroPoint,
    #[error("matrix is singular (ad - bc = 0)")]
    SingularMatrix,
    #[error("binary form is identically zero")]
    ZeroForm,
    #[error("every form in the tuple is zero")]
    AllFormsZero,
    #[error("expected {expected} coefficients for a degree {degree} form, got {got}")]
    CoefficientCount {
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("forms have mixed degrees: {0} and {1}")]
    MixedDegrees(usize, usize),
    #[error("configuration needs at least one form")]
    NoForms,
    #[error("dimension mismatch: configuration has (n={config_n}, d={config_d}), linearization has (n={lin_n}, d={lin_d})")]
    DimensionMismatch {
        config_n: usize,
        config_d: usize,
        lin_n: usize,
        lin_d: usize,
    },
    #[error("linearization needs {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weight k_{index} = {value} is not strictly positive")]
    NonPositiveWeight { index: usize, value: String },
    #[error("weight k_{index} = {value} is not an integer")]
    NonIntegerWeight { index: usize, value: String },
    #[error("cannot normalize: sum of k_i + d*k_(n+1) vanishes")]
    DegenerateNormalization,
    #[error("linearization lies on wall {0}")]
    OnWall(String),
    #[error("linearizations are not adjacent across wall {0}")]
    NotAdjacent(String),
    #[error("mark index {index} out of range 1..={n}")]
    MarkOutOfRange { index: usize, n: usize },
    #[error("wall degree {d_i} exceeds total degree {d}")]
    WallDegree { d_i: usize, d: usize },
    #[error("invalid divisor label: {0}")]
    InvalidLabel(String),
    #[error("2^(n-1)(d+1) is not an integer for n={n}, d={d}, r={r}")]
    NonIntegralPicard { n: usize, d: usize, r: usize },
    #[error("moduli space is empty for (n={n}, d={d}, r={r})")]
    EmptyModuli { n: usize, d: usize, r: usize },
    #[error("invalid comb: {0}")]
    InvalidComb(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("total degree {0} is even; the handle need not be unique")]
    EvenTotalDegree(u64),
    #[error("curve has no stable model")]
    Unstabilizable,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
