//! File formats, witness documents, the verification harness and the
//! `bipminor` command line, on top of `bipminor-core`.

pub mod cli;
pub mod dot;
pub mod enumerate;
mod error;
pub mod graph6;
pub mod harness;
pub mod witness;

pub use cli::run;
pub use dot::{emit_dot, Highlight};
pub use error::CliError;
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use harness::{verify_harness, ClaimRecord, Suite, VerificationReport};
pub use witness::{StepRecord, Steps, WitnessDocument};
