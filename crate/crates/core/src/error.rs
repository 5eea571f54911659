use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("cannot invert zero in the cyclotomic field of index {index}")]
    InverseOfZero { index: usize },

    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),

    #[error("squarefree kernel of {0} does not fit in 64 bits")]
    RadicandTooLarge(String),

    #[error("residue {residue} is not a unit modulo {modulus}")]
    NotAUnit { residue: usize, modulus: usize },

    #[error("cannot lift from index {from} to index {to}: {from} does not divide {to}")]
    IndexNotDivisor { from: usize, to: usize },

    #[error("not a subgroup of (Z/{modulus})^*: {reason}")]
    NotASubgroup { modulus: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("lemma hypothesis a^2 = p(b^2 + c^2) fails: {lhs} != {rhs}")]
    LemmaHypothesis { lhs: String, rhs: String },

    #[error("cot multiple-angle map C_{k} has a pole at cot(pi/{n})")]
    Pole { n: usize, k: usize },

    #[error("side lengths {0} violate the triangle inequality")]
    TriangleInequality(String),

    #[error("rational-distance search is not available for n = {0}: no such point exists for n = 5 or n >= 7 apart from 8, 12, 24, and those have no rational-parameter family")]
    UnsupportedPolygon(usize),

    #[error("internal assertion failed: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable reason code, used in error certificates.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZeroPoly => "division_by_zero",
            Error::GcdOfZeros => "gcd_of_zeros",
            Error::InverseOfZero { .. } => "inverse_of_zero",
            Error::NegativeRadicand(_) => "negative_radicand",
            Error::RadicandTooLarge(_) => "radicand_too_large",
            Error::NotAUnit { .. } => "not_a_unit",
            Error::IndexNotDivisor { .. } => "index_not_divisor",
            Error::NotASubgroup { .. } => "not_a_subgroup",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NotPrime(_) => "not_prime",
            Error::LemmaHypothesis { .. } => "lemma_hypothesis",
            Error::Pole { .. } => "pole",
            Error::TriangleInequality(_) => "triangle_inequality",
            Error::UnsupportedPolygon(_) => "unsupported_polygon",
            Error::Internal(_) => "internal_assertion",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
