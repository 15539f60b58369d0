use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConicalError {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("root solver did not converge after {iterations} iterations")]
    Nonconvergence { iterations: u32 },
    #[error("quadrature did not converge after {levels} step halvings")]
    QuadratureNonconvergence { levels: u32 },
    #[error("truncated expansion not accurate enough (estimate {estimate:e})")]
    Accuracy { estimate: f64 },
    #[error("result overflows binary64 (ln|value| = {lnmag})")]
    Overflow { lnmag: f64 },
}
