use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("not a bijection: {0:?}")]
    NotBijective(Vec<u32>),

    #[error("transposition needs 0 < a < b, got ({0},{1})")]
    BadTransposition(u32, u32),

    #[error("partition {parts:?} has more than {k} parts")]
    TooManyParts { parts: Vec<u32>, k: u32 },

    #[error("index set of length {len} cannot relabel a permutation moving points up to {needed}")]
    IndexSetTooShort { len: usize, needed: u32 },

    #[error("support of {perm} is not contained in [1,{n}]")]
    SupportExceeds { perm: String, n: u32 },

    #[error("{lower} and {upper} are not comparable in the {order}")]
    Incomparable {
        lower: String,
        upper: String,
        order: String,
    },

    #[error("{0} is not a cover in the requested order")]
    NotACover(String),

    #[error("variable x{0} is not classified by the index-set descriptor")]
    Unclassified(u32),

    #[error("invalid index set: {0}")]
    BadIndexSet(String),

    #[error("skew shapes are not accepted here")]
    SkewShape,

    #[error("invalid tableau: {0}")]
    BadTableau(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
