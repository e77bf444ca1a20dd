//! Bipartite minors of small graphs.
//!
//! This crate implements three containment relations on finite simple graphs
//! (subgraph, minor, bipartite minor), the admissible contraction that the
//! bipartite minor relation is built on, and generators for the bull, dog,
//! cycle, path and H-tree families. Everything is exact and exhaustive, so it
//! is meant for graphs with at most a dozen or so vertices.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command-line tool live in the `bipminor` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod canonical;
mod error;
pub mod families;
pub mod graph;
pub mod relations;
pub mod structure;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use error::Error;
pub use families::FamilySpec;
pub use graph::{Bipartition, Graph};
pub use relations::{
    admissible_contract, admissible_pairs, bipartite_minor_closure, compare_family, is_bipartite_minor, is_minor,
    AdmissiblePair, MinorModel, Op, OpTrace, Relation, SearchOptions,
};
pub use structure::{BlockDecomposition, ConnectivityMode, CycleSeq};

pub type Result<T> = core::result::Result<T, Error>;
