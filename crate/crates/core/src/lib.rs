//! Exhaustive and exact verification of square-path packing, extremal edge
//! counts and spectral-radius conditions on small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`canon`]: bitset graphs, interchange format and
//!   canonical labelling.
//! * [`catalog`]: named graphs and the forbidden families.
//! * [`embed`]: subgraph, packing, square-path and Hamiltonicity solvers with
//!   certificates.
//! * [`spectral`] and [`poly`]: floating-point spectral radius estimates and
//!   exact integer characteristic polynomials with Sturm-sequence verdicts.
//! * [`enumerate`]: isomorph-free generation of sparse and small graphs.
//! * [`verify`]: the claim harnesses and their JSON reports.
//! * [`cli`]: the `sqlab` command line.

pub mod canon;
pub mod catalog;
pub mod cli;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use embed::{Certificate, Embedding, Ordering, OrderingKind};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, MAX_N};
