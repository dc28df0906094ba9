//! Crate-wide error type.
//!
//! Every fallible operation in the laboratory reports one of these variants;
//! the CLI maps them onto exit codes (usage errors → 1, budget skips → 3).

use thiserror::Error;

/// Errors raised by field construction, code operations, family builders and
/// the verification pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrthoError {
    /// The characteristic supplied to a field constructor is not prime.
    #[error("{0} is not a prime")]
    NotPrime(u64),

    /// Extension degree zero requested.
    #[error("extension degree must be at least 1")]
    ZeroDegree,

    /// `p^d` exceeds the log/exp table budget.
    #[error("field of order {p}^{d} exceeds the table budget of {budget} elements")]
    TableBudget { p: u64, d: u32, budget: u64 },

    /// A modulus given in a descriptor is not a primitive polynomial.
    #[error("modulus is not a primitive polynomial of degree {0}")]
    NotPrimitive(u32),

    /// Operation needs odd characteristic.
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,

    /// A subfield degree that does not divide the extension degree.
    #[error("subfield degree {sub} does not divide extension degree {degree}")]
    NotASubfield { sub: u32, degree: u32 },

    /// Element that should lie in a subfield does not.
    #[error("element {0} does not lie in the requested subfield")]
    NotInSubfield(u32),

    /// Element code outside `[0, p^d)`.
    #[error("element code {code} out of range for a field of order {order}")]
    ElementOutOfRange { code: u64, order: u64 },

    /// A zero argument where a unit is required (e.g. a2 = 0 in a Weil sum).
    #[error("argument must be nonzero: {0}")]
    ZeroArgument(&'static str),

    /// A Gauss value that has no representative in Z[ζ_p].
    #[error("value {0} is not an element of Z[zeta_p]")]
    NotCyclotomic(String),

    /// Code alphabet larger than the byte-packed enumerator supports.
    #[error("alphabet GF({0}) exceeds the supported maximum of 256 symbols")]
    AlphabetTooLarge(u64),

    /// Rows of unequal length or empty generator input.
    #[error("malformed generator matrix: {0}")]
    MalformedCode(String),

    /// Enumeration or search exceeds the configured budget.
    #[error("{what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded { what: String, needed: String, budget: u64 },

    /// Augmenting a code that already contains the all-one vector.
    #[error("the all-one vector already lies in the row span")]
    AllOnesInSpan,

    /// A weight distribution whose total is not `q^k`, or whose MacWilliams
    /// transform is not integral.
    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    /// A coordinate whose generator column is zero (locality undefined).
    #[error("generator column {0} is zero")]
    ZeroColumn(usize),

    /// No repair set of size at most `r_max` exists for some column.
    #[error("locality exceeds {r_max} (column {column} has no repair set of size ≤ {r_max})")]
    LocalityExceeds { r_max: usize, column: usize },

    /// A design request outside the supported range.
    #[error("unsupported design request: {0}")]
    UnsupportedDesign(String),

    /// Empty evaluation domain for a trace code.
    #[error("evaluation domain is empty")]
    EmptyDomain,

    /// Family parameters violate a hypothesis of the construction.
    #[error("invalid parameters for family {family}: {reason}")]
    InvalidParams { family: String, reason: String },

    /// Unknown family identifier.
    #[error("unknown family '{0}'")]
    UnknownFamily(String),

    /// Parameters outside every tabulated case: no prediction is made.
    #[error("no prediction for {0}")]
    NoPrediction(String),

    /// Text input (code file, descriptor, parameter string) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// File-system failure, carried as text so the error stays `Clone`.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for OrthoError {
    fn from(e: std::io::Error) -> Self {
        OrthoError::Io(e.to_string())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, OrthoError>;
