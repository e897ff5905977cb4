//! Exact algorithms around claw-free perfect graphs.
//!
//! The crate builds the non-ω-colourable families `F^0..F^4` and cycle
//! inflations, decides perfection with re-checkable certificates, recognises
//! inflations of cycles, and exhaustively checks the characterisation
//! theorems for `(K_{1,3}, Y)`-free graphs on small vertex counts.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod patterns;
pub mod structure;
pub mod verify;

pub use canon::{canonical_label, is_isomorphic, CanonicalLabel};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6};
pub use patterns::{find_induced, is_free, PatternId};
