//! Computation engine for bicircular lift matroids.
//!
//! The circuits of the bicircular lift matroid L(G) of a multigraph G are
//! the minimal edge sets containing at least two cycles: theta subgraphs,
//! tight handcuffs, and pairs of vertex-disjoint cycles. This crate builds
//! L(G) from graphs, decides membership in the minor-closed class of
//! matroids that are graphic or bicircular lift, certifies excluded minors
//! of that class, and mechanically checks a suite of small-scale structure
//! lemmas about it.

pub mod bits;
pub mod caps;
pub mod error;
pub mod exminor;
pub mod graph;
pub mod lift;
pub mod matroid;
pub mod paperlab;

pub use bits::{Bits32, EdgeSet, ElemSet};
pub use caps::{NodeBudget, SearchCaps};
pub use error::{Error, Result};
