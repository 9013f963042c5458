use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    InvalidModulus(u64),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    NonPositiveDegree(String),
    #[error("generator `{name}` has truncation {truncation}; truncations must be at least 2")]
    InvalidTruncation { name: String, truncation: u32 },
    #[error("bracket degree n = {0} must be at least 2")]
    InvalidBracketShift(i64),
    #[error("{entry} is not homogeneous of degree {expected}")]
    InhomogeneousEntry { entry: String, expected: i64 },
    #[error("bracket undefined on pair ({0}, {1})")]
    BracketUndefined(String, String),
    #[error("element does not belong to this algebra")]
    AlgebraMismatch,

    #[error("element is not homogeneous of total degree {0}")]
    NotHomogeneous(usize),
    #[error("basis in bidegree ({s}, {t}) has {size} words, above the limit {limit}")]
    BasisBlowUp {
        s: usize,
        t: usize,
        size: usize,
        limit: usize,
    },
    #[error("E^{r}_{{{p},{q}}} is outside the safe region")]
    Unknown { r: usize, p: i64, q: i64 },
    #[error("page {0} was not computed")]
    PageOutOfRange(usize),
    #[error("representative does not lie in Z^{r}_{{{p},{q}}}")]
    NotACycle { r: usize, p: i64, q: i64 },
    #[error("{0}")]
    Selection(String),
}
