use thiserror::Error;

/// Errors reported by the counting engine and its interfaces.
#[derive(Debug, Error)]
pub enum Error {
    /// The class (0, 0) does not define a moduli problem.
    #[error("the class (0, 0) is not a valid curve class")]
    ZeroClass,

    /// A point-constraint count must be nonnegative.
    #[error("point count r must be nonnegative, got {0}")]
    NegativePoints(i64),

    /// The codimension of the location constraint must be nonnegative.
    #[error("constraint codimension theta must be nonnegative, got {0}")]
    NegativeCodim(i64),

    /// Plane-curve counts are defined for positive degree only.
    #[error("plane degree d must be at least 1, got {0}")]
    NonPositiveDegree(i64),

    /// The Euler-class computation needs an honest singular point.
    #[error("multiplicity m must be at least 2, got {0}")]
    MultiplicityTooSmall(i64),

    /// The Euler-class computation needs a positive degree.
    #[error("degree d must be at least 1, got {0}")]
    InvalidDegree(i64),

    /// A location codimension outside {0, 1, 2} cuts the trivial cycle.
    #[error("location codimension theta must be 0, 1 or 2, got {0}")]
    CodimOutOfRange(i64),

    /// Classes from different linear systems cannot be combined.
    #[error("classes live in different linear systems (dimension {0} vs {1})")]
    DimensionMismatch(usize, usize),

    /// Requested a golden table that does not exist.
    #[error("unknown golden table `{0}`")]
    UnknownTable(String),

    /// The identity sweep is capped to keep runtimes bounded.
    #[error("identity sweep supports degrees up to {max}, requested {requested}")]
    DegreeGuard { requested: i64, max: i64 },

    /// The cache file declares a format this build does not understand.
    #[error("unsupported cache format version {0}")]
    CacheVersion(u32),

    /// A count field in the cache failed to parse as a decimal integer.
    #[error("malformed count `{0}` in cache entry")]
    BadCount(String),

    /// Cache file input/output failure.
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),

    /// Cache file is not valid JSON of the expected shape.
    #[error("cache parse: {0}")]
    Json(#[from] serde_json::Error),
}
