use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier mismatch: expected {expected} points, found {found}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for carrier of size {size}")]
    PointOutOfRange { point: usize, size: usize },

    #[error("carrier of size {size} exceeds the supported maximum of {max}")]
    CarrierTooLarge { size: usize, max: usize },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("subspace carrier must be nonempty")]
    EmptySubspace,

    #[error("enumeration requested for n = {n}, maximum is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("basis does not generate the topology: {0}")]
    BasisDoesNotGenerate(String),

    #[error("not a directed set: {0}")]
    NotDirected(String),

    #[error("invalid net: {0}")]
    InvalidNet(String),

    #[error("index sets do not match the subnet map")]
    IndexMismatch,

    #[error("point {0} is not a cluster point of the net")]
    NotClusterPoint(usize),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("not an ultrafilter: {0}")]
    NotAnUltrafilter(String),

    #[error("invalid choice: {0}")]
    InvalidChoice(String),

    #[error("unregistered tag `{0}`")]
    UnregisteredTag(String),

    #[error("descriptor algebra not closed for this combination: {0}")]
    DescriptorClosure(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("ordinal value out of interval: {0}")]
    OutOfInterval(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("rational {0} is outside [0, 1)")]
    RationalOutOfRange(String),

    #[error("indices must be strictly increasing")]
    NotStrictlyIncreasing,

    #[error("invalid fan candidate {index}: {reason}")]
    InvalidCandidate { index: usize, reason: String },

    #[error("invalid Franklin presentation: {0}")]
    InvalidPresentation(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
