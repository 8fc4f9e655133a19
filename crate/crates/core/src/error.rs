use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplicity {0} must be greater than 1")]
    BadMultiplicity(i64),

    #[error("Seifert pair ({a},{b}) is not coprime")]
    NonCoprime { a: i64, b: i64 },

    #[error("multiplicities {0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("degree is zero: not a rational homology sphere")]
    NotRationalHomologySphere,

    #[error("bad fraction {p}/{q}: need p > q >= 1 and gcd(p,q) = 1")]
    BadFraction { p: i64, q: i64 },

    #[error("move precondition failed: {0}")]
    MovePreconditionFailed(String),

    #[error("intersection form is degenerate (det = 0)")]
    Degenerate,

    #[error("vector is not characteristic for this intersection form")]
    NotCharacteristic,

    #[error("spin structure index {index} out of range (have {count})")]
    SpinIndexOutOfRange { index: usize, count: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("table mismatch for {row}: computed mu-bar {computed}, dataset says {published}")]
    TableMismatch {
        row: String,
        computed: String,
        published: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}
