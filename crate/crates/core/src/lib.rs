//! Exact computation of Lin-Lu-Yau graph curvature and the cut structure
//! of graphs that attain non-negative curvature.
//!
//! Everything is computed in arbitrary-precision rational arithmetic: there
//! are no floats and no tolerances anywhere in the crate. The main entry
//! points are:
//!
//! * [`graph`]: immutable simple graphs, BFS metric, structural predicates,
//!   and small-graph canonical forms.
//! * [`transport`]: exact Wasserstein-1 distance between finitely supported
//!   measures, with a dual optimality certificate.
//! * [`curvature`]: per-edge idleness curvature and Lin-Lu-Yau curvature,
//!   whole-graph curvature profiles.
//! * [`connectivity`]: edge-connectivity, min-cut certificates, the bipartite
//!   graph spanned by a cut, and the cut-edge counting inequalities.
//! * [`bipartite`]: the edge-star inequality for bipartite graphs, the rigid
//!   equality families, and an exhaustive census checker.
//! * [`families`]: generators for strip-like graph families (prism stacks,
//!   hub and clique-chain surgeries), interior certification, and family
//!   verification runs.

#![forbid(unsafe_code)]

pub mod bipartite;
pub mod canon;
pub mod connectivity;
pub mod curvature;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod rational;
pub mod transport;

pub use error::Error;
pub use graph::{Edge, Graph};
pub use rational::Rational;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
