use thiserror::Error;

/// Errors raised by graph construction, decomposition and the coloring engines.
///
/// Variants fall in two families. Input errors describe malformed data
/// (bad vertex ids, unparsable files). Domain errors describe well-formed
/// data that violates an operation's precondition (a non-cograph handed to
/// cotree machinery, an improper coloring handed to a hierarchy check).
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("operation needs at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("vertex set {0:?} is not a module")]
    NotAModule(Vec<usize>),
    #[error("vertex sets do not partition the vertex set")]
    NotAPartition,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { expected: usize, got: usize },
    #[error("colors must be positive (vertex {0} has color 0)")]
    ZeroColor(usize),
    #[error("coloring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("graph is not a cograph: {0:?} induces a P4")]
    NotACograph([usize; 4]),
    #[error("invalid cotree: {0}")]
    InvalidCotree(String),
    #[error("cotree does not generate the graph: {0}")]
    CotreeMismatch(String),
    #[error("leaf {0} appears more than once")]
    DuplicateLeaf(usize),
    #[error("prime module {0:?} unsupported by the prime solver")]
    UnsupportedPrime(Vec<usize>),
    #[error("prime solver broke its contract on module {module:?}: {msg}")]
    SolverContract {
        module: Vec<usize>,
        msg: &'static str,
    },
    #[error("graph is not P4-sparse: prime module {0:?} is not a spider")]
    NotP4Sparse(Vec<usize>),
    #[error("not a spider decomposition: {0}")]
    InvalidSpider(String),
    #[error("invalid head coloring: {0}")]
    InvalidHeadColoring(String),
    #[error("coloring is not modularly-minimal: module {module:?} uses {colors} colors, chromatic number {chi}")]
    NotModularlyMinimal {
        module: Vec<usize>,
        colors: usize,
        chi: usize,
    },
    #[error("{what} refused: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by malformed input rather than a violated
    /// precondition on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::EmptyVertexSet
                | Error::TooFewVertices { .. }
                | Error::NotAPermutation
                | Error::ColoringSize { .. }
                | Error::ZeroColor(_)
                | Error::DuplicateLeaf(_)
                | Error::InvalidConfig(_)
                | Error::Parse { .. }
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
