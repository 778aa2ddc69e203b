use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed next-vector {next:?}: {reason}")]
    MalformedNext { next: Vec<usize>, reason: String },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("polynomial variable counts differ ({0} vs {1})")]
    VariableMismatch(usize, usize),

    #[error("singular linear system while building {0}")]
    SingularSystem(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("partition {partition} has more than {k} parts")]
    BadShape { partition: String, k: usize },

    #[error("non-intersecting multipath with non-identity permutation {0:?}")]
    NonIdentityPermutation(Vec<usize>),

    #[error("multipath is not intersecting")]
    NotIntersecting,

    #[error("three or more paths meet at grid vertex ({col},{row})")]
    TriplePoint { col: usize, row: usize },

    #[error("multipath classification requires the 1^k destination geometry")]
    WrongShape,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("non-integral coefficient {0} where an integer was required")]
    NonIntegral(String),

    #[error("cache entry {0} failed its integrity check")]
    CacheCorrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
