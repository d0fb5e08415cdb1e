use thiserror::Error;

/// Errors raised anywhere in the HAL pipeline.
///
/// `Validation` covers malformed inputs and configs, `Numerical` covers
/// nonfinite values discovered at run time. The CLI maps the two onto
/// different exit codes.
#[derive(Debug, Error)]
pub enum HalError {
    #[error("{0}")]
    Validation(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HalError>;

impl HalError {
    pub fn validation(msg: impl Into<String>) -> Self {
        HalError::Validation(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        HalError::Numerical(msg.into())
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        HalError::Io {
            context: context.into(),
            source,
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::HalError::Validation(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
