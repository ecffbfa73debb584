use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop {0}->{0} in a loopless digraph")]
    UnexpectedLoop(usize),
    #[error("operation requires a loopless digraph")]
    LoopsNotSupported,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("underlying graph is not a cycle on at least 3 vertices")]
    NotACycle,
    #[error("underlying graph is not a star")]
    NotAStar,
    #[error("digraph is not acyclic")]
    NotAcyclic,
    #[error("digraph is not an oriented tree")]
    NotAnOrientedTree,
    #[error("digraph contains a 2-cycle; an oriented graph is required")]
    NotOriented,
    #[error("digraph is not weakly connected")]
    NotWeaklyConnected,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("order {0} exceeds the enumeration bound {1}")]
    BoundExceeded(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix does not match the digraph's pattern")]
    PatternMismatch,
    #[error("F is undefined: the zero forcing number is 0 under the loop rule")]
    UndefinedF,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
