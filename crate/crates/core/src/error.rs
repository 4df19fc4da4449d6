use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("entries {0:?} are not weakly increasing")]
    NotAFlag(Vec<usize>),

    #[error("parameter {name} must be positive")]
    NonPositiveParameter { name: &'static str },

    #[error("partition has {length} parts but at most {limit} are allowed")]
    ShapeTooLong { length: usize, limit: usize },

    #[error("flag has {length} entries but {required} are required")]
    FlagTooShort { length: usize, required: usize },

    #[error("flag entry {value} at position {position} exceeds the bound {limit}")]
    FlagTooLarge {
        position: usize,
        value: usize,
        limit: usize,
    },

    #[error("flag entry {value} at position {position} is not a multiple of {t}")]
    FlagNotDivisible {
        position: usize,
        value: usize,
        t: usize,
    },

    #[error("residue class {residue} holds {outer} outer and {inner} inner beta numbers")]
    BlockMismatch {
        residue: usize,
        outer: usize,
        inner: usize,
    },

    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("polynomial uses {vars} variables, more than the {limit} available")]
    AmbientTooLarge { vars: usize, limit: usize },

    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix is {rows}x{cols}, expected a non-empty square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("division by x{0} - x{1} left a non-zero remainder")]
    InexactDivision(usize, usize),

    #[error("{0:?} is not a permutation in one-line notation")]
    NotAPermutation(Vec<usize>),

    #[error("permutation {0:?} contains the pattern 312")]
    Contains312(Vec<usize>),

    #[error("flag entry {value} at position {position} is outside [{position}, {limit}]")]
    FlagOutOfRange {
        position: usize,
        value: usize,
        limit: usize,
    },

    #[error("permutation {perm:?} has an ascent at {position} whose value is not a multiple of {t}")]
    AscentNotDivisible {
        perm: Vec<usize>,
        position: usize,
        t: usize,
    },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("size {size} exceeds the guard {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("exponent {exponent} of variable {var} in term {term} is not divisible by {t}")]
    ExponentNotDivisible {
        term: String,
        var: usize,
        exponent: u32,
        t: usize,
    },

    #[error("coefficient of term {term} is not a rational integer")]
    NonIntegerCoefficient { term: String },

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAPartition { .. } => "not_a_partition",
            Error::NotAFlag { .. } => "not_a_flag",
            Error::NonPositiveParameter { .. } => "non_positive_parameter",
            Error::ShapeTooLong { .. } => "shape_too_long",
            Error::FlagTooShort { .. } => "flag_too_short",
            Error::FlagTooLarge { .. } => "flag_too_large",
            Error::FlagNotDivisible { .. } => "flag_not_divisible",
            Error::BlockMismatch { .. } => "block_mismatch",
            Error::AmbientMismatch { .. } => "ambient_mismatch",
            Error::AmbientTooLarge { .. } => "ambient_too_large",
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::NotSquare { .. } => "not_square",
            Error::InexactDivision { .. } => "inexact_division",
            Error::NotAPermutation { .. } => "not_a_permutation",
            Error::Contains312 { .. } => "contains_312",
            Error::FlagOutOfRange { .. } => "flag_out_of_range",
            Error::AscentNotDivisible { .. } => "ascent_not_divisible",
            Error::InvalidPath { .. } => "invalid_path",
            Error::SizeGuard { .. } => "size_guard",
            Error::ExponentNotDivisible { .. } => "exponent_not_divisible",
            Error::NonIntegerCoefficient { .. } => "non_integer_coefficient",
            Error::TheoremViolation { .. } => "theorem_violation",
            Error::Invariant { .. } => "invariant",
            Error::Parse { .. } => "parse",
        }
    }
}
