use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 1")]
    InvalidModulus(i64),

    #[error("invalid singularity parameters r={r}, a={a}: {reason}")]
    InvalidParams { r: i64, a: i64, reason: String },

    #[error("invalid Wahl parameters n={n}, q={q}: {reason}")]
    InvalidWahl { n: i64, q: i64, reason: String },

    #[error("continued fraction of {r}/{d} requested with d outside (0, r)")]
    FractionRange { r: i64, d: i64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable {0} has no value")]
    Unassigned(String),

    #[error("basis is rank deficient (rank {rank} of {expected})")]
    SingularBasis { rank: usize, expected: usize },

    #[error("target is not in the span of the basis")]
    OutOfSpan,

    #[error("coordinate {index} is not a polynomial: ({num})/({den})")]
    NotPolynomial { index: usize, num: String, den: String },

    #[error("operation of arity {0} present; insertion only handles m1, m2, m3")]
    ArityTooHigh(usize),

    #[error("spec is not in Def0: entry ({i},{j}) of the differential matrix is {value}")]
    NotInDef0 { i: usize, j: usize, value: String },

    #[error("degree bound violated at infinity: c[{j}][{i}][{k}] has degree {degree} > {bound}")]
    InfinityDegree { j: usize, i: usize, k: usize, degree: usize, bound: usize },

    #[error("golden mismatch for n={n}, q={q}: {cells} differing cells")]
    GoldenMismatch { n: u32, q: u32, cells: usize },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
