use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid argument (bad index range, bad option).
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("remainder order {order} is not available at epsilon = {epsilon}")]
    UnsupportedOrder { order: usize, epsilon: f64 },

    #[error("pole: {0}")]
    Pole(String),

    #[error("point budget exceeded: {requested} evaluations requested, budget is {budget}")]
    Budget { requested: usize, budget: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
