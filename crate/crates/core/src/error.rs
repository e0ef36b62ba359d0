use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has {0} vertices, more than the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cannot delete every vertex of the graph")]
    EmptyRemainder,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {required} vertices, got {actual}")]
    TooFewVertices { required: usize, actual: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("malformed spectrum: {0}")]
    MalformedSpectrum(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("corpus line {line}: {source}")]
    CorpusLine { line: usize, source: ParseError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidCharacter { offset: usize, byte: u8 },
    #[error("long-form graph6 header (n > 62) is not supported")]
    Oversize,
    #[error("graph6 payload for n = {n} needs {expected} bytes, found {found}")]
    Truncated { n: usize, expected: usize, found: usize },
    #[error("graph6 payload for n = {n} has {found} bytes, expected {expected}")]
    TrailingBytes { n: usize, expected: usize, found: usize },
    #[error("malformed edge-list token {token:?} on line {line}")]
    MalformedToken { line: usize, token: String },
    #[error("edge-list is missing the vertex count")]
    MissingVertexCount,
    #[error("edge-list has an unpaired endpoint")]
    UnpairedEndpoint,
    #[error("edge ({u}, {v}) on line {line} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { line: usize, u: usize, v: usize, n: usize },
    #[error("edge ({0}, {0}) on line {1} is a self-loop")]
    SelfLoop(usize, usize),
    #[error("graph has {n} vertices; this format supports at most {max}")]
    TooManyVertices { n: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
