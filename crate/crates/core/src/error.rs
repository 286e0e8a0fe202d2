use crate::spectral::PerronResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge ({0}, {1}) is already present")]
    EdgeExists(usize, usize),

    #[error("edge ({0}, {1}) is not present")]
    EdgeMissing(usize, usize),

    #[error("graph is disconnected; Perron positivity is not guaranteed")]
    Disconnected,

    #[error("graph has an isolated vertex")]
    IsolatedVertex,

    #[error("power iteration did not converge within {iterations} iterations (last q = {})", last.q)]
    NoConvergence {
        iterations: usize,
        last: Box<PerronResult>,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,
}
