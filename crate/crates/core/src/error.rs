use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("vertices around index {0} are collinear")]
    CollinearRun(usize),
    #[error("edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("hole {0}: {1}")]
    InvalidHole(usize, Box<GeomError>),
    #[error("hole {0} is not strictly inside the outer boundary")]
    HoleNotInside(usize),
    #[error("holes {0} and {1} intersect")]
    HolesIntersect(usize, usize),
    #[error("no valid polygon after {0} attempts")]
    GenerationFailed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is disconnected")]
    GraphDisconnected,
    #[error("more than {0} colourings")]
    CapExceeded(usize),
    #[error("search exceeded the budget of {0} nodes")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("pair ({0}, {1}) shares a colour in piece {2}")]
    InconsistentPair(usize, usize, usize),
    #[error("piece colourings do not match the decomposition")]
    PieceMismatch,
    #[error("propagation stalled on a genuine polygon: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("input graph: {0}")]
    InvalidInput(String),
    #[error("layout failed verification: {0}")]
    GenerationFailed(String),
    #[error("invalid embedding: {0}")]
    EmbeddingInvalid(String),
    #[error("no embedding found within the search budget")]
    EmbeddingNotFound,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError { line, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
