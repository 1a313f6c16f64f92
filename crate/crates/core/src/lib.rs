//! Algebraic connectivity of small graphs and exhaustive checks of the
//! extremal trees for matching number and edge covering number.

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod matching;
pub mod spectral;
pub mod verification;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};

pub use invariants::{invariant_summary, InvariantSummary};
