use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the crate.
///
/// All arithmetic is exact and total; errors only arise from invalid inputs
/// (bad generator data, mismatched ambients, out-of-range bounds) or from I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i64),

    #[error("cannot parse {0:?} as a comma-separated list of integers")]
    GeneratorSyntax(String),

    #[error("generators {gens:?} have gcd {gcd} != 1; the semigroup would miss infinitely many integers")]
    NotCofinite { gens: Vec<i64>, gcd: i64 },

    #[error("Apery apex {0} must be a nonzero member of the semigroup")]
    ApexNotMember(i64),

    #[error("element list is empty")]
    EmptyElements,

    #[error("operands live over different ambient semigroups: <{left}> vs <{right}>")]
    AmbientMismatch { left: String, right: String },

    #[error("the ideal is not contained in its ambient semigroup ({witness} is not a member)")]
    NotAnIdealOfS { witness: i64 },

    #[error("<{sup}> does not contain <{sub}>: {witness} is missing")]
    NotAnExtension {
        sup: String,
        sub: String,
        witness: i64,
    },

    #[error("genus {genus} exceeds the ideal-enumeration bound {bound}")]
    GenusTooLarge { genus: i64, bound: i64 },

    #[error("max genus {requested} exceeds the hard cap {cap} (set ARFKIT_GENUS_CAP to raise it)")]
    BoundTooLarge { requested: i64, cap: i64 },

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv failure: {0}")]
    Csv(#[from] csv::Error),

    #[error("json failure: {0}")]
    Json(#[from] serde_json::Error),
}
