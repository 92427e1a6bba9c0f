//! Connectivity-robustness toolkit for complex networks.
//!
//! The crate simulates how the largest connected component (LCC) of a network
//! shrinks while nodes or edges are removed under four scenarios, turns those
//! attack curves into labelled training records for a surrogate model, and
//! scores surrogate predictions against fresh simulation.
//!
//! Modules are layered bottom-up:
//!
//! - [`graph`]: simple undirected graphs, ER/BA generators, edge-list IO and
//!   the union-find forest used for incremental connectivity.
//! - [`attack`]: removal orders and attack curves.
//! - [`metrics`]: robustness scalars, label vectors and the clamp filter.
//! - [`dataset`]: the binary record format, manifests and dataset building.
//! - [`eval`]: error statistics, plot data and timing benchmarks.

pub mod attack;
pub mod dataset;
mod error;
pub mod eval;
pub mod fmt;
pub mod graph;
pub mod metrics;
pub mod rng;

pub use attack::{AttackCurve, AttackOptions, CurveSpec, RemovalOrder, Scenario, Target};
pub use error::{Error, Result};
pub use graph::{Graph, GraphStats};
pub use metrics::LabelVector;
