use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The border (spoke) weight is zero; the matrix splits into `{-nc}` and the tire block.
    #[error("border weight b is zero; use the block-diagonal decomposition instead")]
    ZeroBorder,
    /// The tire weight is zero, so crossings and transition points do not exist.
    #[error("tire weight a is zero; no crossing or transition point exists")]
    ZeroTire,
    #[error("unsupported circulant order n = {n}: {reason}")]
    UnsupportedOrder { n: usize, reason: &'static str },
    #[error("abscissa c must be nonzero")]
    ZeroAbscissa,
    #[error("degeneracy {0} has no configuration label (only 1, 2, 3 are classified)")]
    UnsupportedDegeneracy(usize),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {offdiag_norm:e})")]
    NoConvergence { sweeps: usize, offdiag_norm: f64 },
    #[error("vector is zero")]
    ZeroVector,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
