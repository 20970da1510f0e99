//! Uncrossed edges in drawings of graphs.
//!
//! - [`bounds`]: closed-form lower bounds on `unc(G)` and upper bounds on `h(G)`.
//! - [`construction`]: the dense family `G_{x,n}` attaining the `h` upper bound up to `O(√n)`.
//! - [`oracle`]: exhaustive search for `h(G)` and `unc(G)` on small graphs.
//! - [`embedding`]: rotation systems, face tracing and genus.

pub mod bounds;
pub mod construction;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod oracle;

pub use bounds::{BoundReport, BoundValue, FaceCounts};
pub use construction::{ConstructionRecord, Rational};
pub use embedding::{Face, FaceProfile, FaceSet, RotationSystem};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphStats};
pub use oracle::{SearchLimits, SubdrawingCertificate};
