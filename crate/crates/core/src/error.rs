use std::fmt;

/// Crate-wide error type; variants carry enough context to pinpoint the
/// offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A preference relation would order a candidate before itself.
    Cycle { candidate: usize },
    /// A candidate index is outside `[0, m)`.
    Range { index: usize, m: usize },
    /// A candidate appears in more than one partition block.
    Overlap { candidate: usize },
    /// An enumeration or set size exceeded the configured cap.
    Limit { what: &'static str, cap: u64 },
    /// A scoring family cannot produce a vector for the requested size.
    Family { family: String, m: usize, reason: String },
    /// A transformed scoring rule violates the score-vector invariants.
    DegenerateRule { reason: String },
    /// A solver was invoked with a rule outside its declared domain.
    RuleDomain { solver: &'static str, rule: String },
    /// Parallel argument sequences have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// A candidate sequence contains a repeated candidate.
    DuplicateCandidate { index: usize },
    /// A gadget requires a regular graph and got an irregular one.
    NotRegular,
    /// Pairwise-margin targets differ from the base margins by an odd amount.
    Parity { a: usize, b: usize },
    /// A pairwise-margin target matrix is not skew-symmetric.
    SkewSymmetry { a: usize, b: usize },
    /// Insertion sides for a strongly pure rule could not be determined.
    PurityMetadata { family: String, m: usize },
    /// A construction received an empty collection where one is required.
    EmptyInput { what: &'static str },
    /// A construction parameter lies outside its documented range.
    Parameter { what: &'static str, value: i64 },
    /// An instance document failed to parse or validate.
    Parse { context: String },
    /// A rule descriptor names an unknown rule or family.
    UnknownRule { name: String },
    /// A solver engine was requested for a (rule, query) cell with no solver.
    IntractableWithoutOracle { rule: String, query: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Cycle { candidate } => {
                write!(f, "preference cycle through candidate {candidate}")
            }
            Error::Range { index, m } => {
                write!(f, "candidate index {index} out of range for {m} candidates")
            }
            Error::Overlap { candidate } => {
                write!(f, "candidate {candidate} appears in more than one block")
            }
            Error::Limit { what, cap } => write!(f, "{what} exceeds the cap of {cap}"),
            Error::Family { family, m, reason } => {
                write!(f, "family {family} has no valid vector for m={m}: {reason}")
            }
            Error::DegenerateRule { reason } => write!(f, "degenerate scoring rule: {reason}"),
            Error::RuleDomain { solver, rule } => {
                write!(f, "solver {solver} does not handle rule {rule}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "sequence lengths differ: {left} vs {right}")
            }
            Error::DuplicateCandidate { index } => {
                write!(f, "candidate {index} repeated in sequence")
            }
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::Parity { a, b } => {
                write!(f, "margin target for pair ({a}, {b}) has the wrong parity")
            }
            Error::SkewSymmetry { a, b } => {
                write!(f, "margin targets for ({a}, {b}) and ({b}, {a}) do not negate")
            }
            Error::PurityMetadata { family, m } => {
                write!(f, "cannot determine insertion side for {family} at m={m}")
            }
            Error::EmptyInput { what } => write!(f, "{what} must be nonempty"),
            Error::Parameter { what, value } => {
                write!(f, "parameter {what} = {value} out of range")
            }
            Error::Parse { context } => write!(f, "invalid instance document: {context}"),
            Error::UnknownRule { name } => write!(f, "unknown rule: {name}"),
            Error::IntractableWithoutOracle { rule, query } => {
                write!(f, "no solver covers {query} under {rule}; use the oracle engine")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
