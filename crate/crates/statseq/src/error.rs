use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("vertex label {label} out of range 1..={order}")]
    LabelOutOfRange { label: usize, order: usize },
    #[error("self-loop at vertex {vertex} not allowed")]
    SelfLoop { vertex: usize },
    #[error("canonicalization bound exceeded: order {order} > bound {bound}")]
    CanonBoundExceeded { order: usize, bound: usize },
    #[error("uniform construction undefined below order 19 (got {order})")]
    OrderBelowUniform { order: usize },
    #[error("{family} enumeration supports orders {lo}..={hi} (got {order})")]
    EnumerationBound {
        family: &'static str,
        lo: usize,
        hi: usize,
        order: usize,
    },
    #[error("connected enumeration at order 10 requires explicit opt-in (long runtime)")]
    OptInRequired,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("criterion domain requires k >= 7 (got {k})")]
    KBelowDomain { k: usize },
    #[error("invalid range {lo}..{hi}")]
    InvalidRange { lo: usize, hi: usize },
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
}

pub type Result<T> = std::result::Result<T, Error>;
