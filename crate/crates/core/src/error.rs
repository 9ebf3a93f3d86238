use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph on {0} vertices exceeds the supported maximum")]
    TooLarge(usize),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("malformed DIMACS input at line {line}: {reason}")]
    MalformedDimacs { line: usize, reason: String },
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("graph is not claw-free")]
    NotClawFree,
    #[error("graph is not triangle-free")]
    NotTriangleFree,
    #[error("bad automorphism: {0}")]
    BadAutomorphism(String),
    #[error("unsuitable host graph H: {0}")]
    BadH(String),
    #[error("set is not odd independent")]
    NotOis,
    #[error("independence number is at least 3")]
    AlphaTooLarge,
    #[error("solver budget exhausted before {0} could be determined")]
    Timeout(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
