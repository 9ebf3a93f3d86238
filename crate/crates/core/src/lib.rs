//! Exact solvers, generators and certificates for odd independent sets and
//! strong odd colorings.
//!
//! A set `S` is odd independent when it is independent and every vertex
//! outside `S` has either no neighbour or an odd number of neighbours in `S`.
//! A strong odd coloring is a partition of the vertex set into such sets.

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod metrics;
pub mod oddind;
pub mod ops;
pub mod par;
pub mod random;
pub mod soc;
pub mod suite;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, MAX_VERTICES};
