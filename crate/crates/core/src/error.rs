use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("integer square root of a negative number")]
    NegativeInput,
    #[error("value is not an integer")]
    NotInteger,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("graph must have at least 2 vertices")]
    TooSmall,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} distinct eigenvalues, not three")]
    NotThreeEigenvalues(usize),
    #[error("spectrum violates the trace identities")]
    TraceMismatch,
    #[error("Perron vector data inconsistent: {0}")]
    PerronInconsistent(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FeasibilityError {
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("parameters out of scope: {0}")]
    OutOfScope(String),
    #[error("invalid srg parameters: {0}")]
    InvalidSrgParameters(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("not a 2-design: {0}")]
    NotTwoDesign(String),
    #[error("not an affine resolvable design: {0}")]
    NotAffineResolvable(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no complete multipartite or clique-union structure on side {0}")]
    NoRecognizedStructure(usize),
    #[error("not strongly regular: {0}")]
    NotStronglyRegular(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("construction result is not a three-eigenvalue graph: {0}")]
    NotThreeEigenvalue(String),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarError {
    #[error("theta is an eigenvalue of the star complement")]
    ThetaIsEigenvalueOfC,
    #[error("star complement has {0} vertices; at most 40 are supported")]
    ComplementTooLarge(usize),
    #[error("vector length {0} does not match the star complement")]
    DimensionMismatch(usize),
    #[error("reconstructed A_X is not an adjacency matrix: {0}")]
    NonGraphicalAX(String),
    #[error("gram entries overflow 64-bit arithmetic")]
    Overflow,
    #[error("invalid search parameters: {0}")]
    InvalidParameters(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NonexistenceError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("refutation does not apply to {0}")]
    NotApplicable(String),
    #[error("degenerate range: n = {n} must exceed 1 + m = {}", m + 1)]
    DegenerateRange { n: i64, m: i64 },
    #[error("arithmetic overflow")]
    Overflow,
}
