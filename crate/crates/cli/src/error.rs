use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph6::Graph6Error;
use crate::witness::WitnessError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    BadGraph { path: PathBuf, source: Graph6Error },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Core(#[from] bipminor_core::Error),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}
