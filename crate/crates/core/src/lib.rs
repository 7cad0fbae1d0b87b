//! Exact combinatorics of local maximum independent sets.
//!
//! The crate works on small finite simple graphs (at most 64 vertices, one
//! machine word per adjacency row) and provides:
//!
//! - graph construction, neighborhoods and induced subgraphs ([`graph`]),
//!   plus graph6 and edge-list I/O ([`format`]);
//! - bipartite and general maximum matching with Hall violator
//!   certificates ([`matching`]);
//! - exact independence numbers and the families Ω, Ψ, Crown and CritIndep
//!   ([`independence`]);
//! - the canonical augmentation `A = S ∖ N[T]`, `B = T ∖ N[S]` together with
//!   augmentoid checkers ([`augmentoid`]);
//! - the closed-neighborhood decomposition around a member of Ψ
//!   ([`decomposition`]);
//! - an exhaustive verification harness and the command implementations used
//!   by the `lmis` binary ([`harness`], [`commands`]).

mod bits;

pub mod augmentoid;
pub mod commands;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod matching;

pub use error::{Error, Result};
pub use graph::{Graph, GraphId, InducedSubgraph, VertexSet, MAX_VERTICES};
