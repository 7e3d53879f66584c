//! Command-line front end and file formats for the `fge-core` library.

pub mod cli;
pub mod output;
pub mod sweep;

pub use sweep::{SpecError, SweepRow, SweepSpec};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] fge_core::Error),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// 2 for a malformed request, 1 for everything that fails while running it.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Spec(_) => 2,
            _ => 1,
        }
    }
}
