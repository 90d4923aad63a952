//! Tools for 4-regular multigraphs built around the subdivided-double
//! construction.
//!
//! The crate provides:
//!
//! * [`multigraph`] — a small multigraph type with stable dense edge ids,
//!   loops, parallel edges, and the usual structural queries (degrees,
//!   connectivity, bipartitions, line graphs, isomorphism testing);
//! * [`generators`] — the fixed graph families used throughout the test
//!   corpus (complete graphs, dipoles, doubled cycles, bouquets, circulants,
//!   the octahedron, the Petersen graph) plus a textual family spec;
//! * [`subdouble`] — the subdivided-double construction, its recognition in
//!   arbitrary graphs, and condensation back to the underlying multigraph;
//! * [`eulerham`] — Euler tours, the lift from tours-with-bijections to
//!   Hamiltonian cycles and its inverse, exhaustive Hamiltonian-cycle
//!   enumeration, pairing verification, decomposition counting, and a
//!   two-linear-forest search.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! including enumeration order, independent of worker counts.

pub mod eulerham;
pub mod generators;
pub mod multigraph;
pub mod subdouble;

mod error;

pub use error::Error;
pub use multigraph::{are_isomorphic, EdgeEnd, EdgeId, Incidence, MultiGraph, VertexId};
