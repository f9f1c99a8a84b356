//! Overlapping clustering schemes for hypergraphs.
//!
//! A representable clustering scheme is the composite of two pieces: a motif
//! functor, which replaces the edges of a hypergraph by one hyperedge per
//! embedding of a motif, and the k-ly connected components functor, which
//! joins hyperedges that overlap in at least `k` vertices and reads the
//! components back as (possibly overlapping) vertex parts.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised as:
//!
//! - [`graph`]: hypergraphs, simple graphs, injective morphisms, restriction
//!   and small graph parameters (degeneracy, independence number, distance,
//!   isomorphism).
//! - [`builders`]: canonical named graphs and seeded random families.
//! - [`partition`]: partitioned sets with overlapping parts, their
//!   morphisms, spurious parts, refinement and part union.
//! - [`motif`]: embedding enumeration, the motif functor and counting bounds.
//! - [`line`]: k-line graphs, connected components and the k-ly connected
//!   components functor.
//! - [`scheme`]: clustering schemes as values (representable, the label
//!   sharing scheme, classic components and toy schemes).
//! - [`lab`]: exhaustive corpora and machine checks of excisiveness,
//!   functoriality, refinement and the representation hull lemmas.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod builders;
mod error;
pub mod graph;
pub mod lab;
pub mod line;
pub mod motif;
pub mod partition;
pub mod scheme;
mod unionfind;

pub use error::{Error, Result};
pub use graph::{EdgeId, GraphMorphism, Hypergraph, SimpleGraph, VertexId, VertexSet};
pub use line::OverlapThreshold;
pub use partition::PartitionedSet;
pub use scheme::SchemeSpec;
