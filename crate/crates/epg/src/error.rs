use thiserror::Error;

/// Errors produced by group construction, graph algorithms and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    SpecSyntax { pos: usize, msg: String },

    #[error("Q{0} is not a valid quaternion order (must be a power of two, at least 8)")]
    InvalidQuaternionOrder(u64),

    #[error("D{0} is not a valid dihedral order (must be even, at least 6)")]
    InvalidDihedralOrder(u64),

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: u128, cap: u64 },

    #[error("cannot read table: {0}")]
    TableIo(#[from] std::io::Error),

    #[error("malformed table file: {0}")]
    TableFormat(String),

    #[error("not a group: {axiom} violated at indices {witness:?}")]
    NotAGroup {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("operation requires a nilpotent group")]
    NotNilpotent,

    #[error("{count} elements of order {prime} is not divisible by {prime} - 1")]
    InexactSubgroupCount { prime: u64, count: u64 },

    #[error("search budget exhausted; best known bounds: {lower} <= gamma <= {upper}")]
    SearchBudgetExceeded { lower: usize, upper: usize },

    #[error("graph has {n} vertices, above the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("eigensolver did not converge; off-diagonal norm {off_diagonal:.3e}")]
    NonConvergence { off_diagonal: f64 },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
