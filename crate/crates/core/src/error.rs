//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("velocity grid moment residual too large: {moment} = {value:.6e} deviates by {residual:.6e} (tol {tol:.1e})")]
    MomentResidualTooLarge {
        moment: &'static str,
        value: f64,
        residual: f64,
        tol: f64,
    },

    #[error("operands sampled on different grids ({left} vs {right} nodes)")]
    GridMismatch { left: usize, right: usize },

    #[error("kernel exponent gamma = {0} outside (-3, 1]")]
    GammaOutOfRange(f64),

    #[error("assembly budget exceeded: {requested} matrix entries > cap {cap}")]
    AssemblyBudgetExceeded { requested: usize, cap: usize },

    #[error("assembled operator fails to annihilate collision invariants: residual {residual:.3e} > tol {tol:.1e}")]
    NullspaceDefect { residual: f64, tol: f64 },

    #[error("operation not supported for the {0} kernel family")]
    UnsupportedKernel(&'static str),

    #[error("measured coercivity constant is not positive: delta = {0:.6e}")]
    NonpositiveGap(f64),

    #[error("moment Gram matrix ill-conditioned: cond = {0:.3e}")]
    IllConditionedGram(f64),

    #[error("implicit collision solve failed: {0}")]
    SolveFailure(String),

    #[error("initial data violates the global conservation constraint: residual {residual:.3e} > tol {tol:.1e}")]
    InadmissibleInitialData { residual: f64, tol: f64 },

    #[error("derivative order {n} not supported on this grid (counts {counts:?})")]
    UnsupportedN { n: usize, counts: [usize; 3] },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("nonlinear mode requires nonnegative initial distribution: min F = {0:.3e}")]
    NegativeInitialDistribution(f64),

    #[error("cache file rejected: {0}")]
    CacheMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
