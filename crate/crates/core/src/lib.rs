//! Recognition, bounds, and hardening for k-metric antidimensional graphs.
//!
//! A connected graph `G` is *k-metric antidimensional* when the largest `k`
//! admitting a k-antiresolving set is exactly `k`. Graphs with `Adim(G) = 1`
//! are the weakest class against active re-identification attacks: whatever
//! vertex set an attacker controls, some other vertex is pinned down by its
//! distance vector.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, BFS distances, eccentricities,
//!   connectivity, intervals and shortest-path counting.
//! * [`antiresolve`]: metric partitions, the ADIM-1 recognition loop, the
//!   brute-force oracle and the bound cascade behind [`antiresolve::analyze`].
//! * [`structure`]: modules, twins, tree balancing factors, geodetic graphs
//!   and block graphs.
//! * [`products`]: Cartesian, strong and lexicographic products and the
//!   hardening advisor.
//! * [`families`], [`randgen`], [`enumerate`], [`ingest`], [`experiments`]:
//!   fixtures, generators, graph6/edge-list IO and the experiment harness.

pub mod antiresolve;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod families;
pub mod graph;
pub mod ingest;
pub mod products;
pub mod randgen;
pub mod structure;

pub use antiresolve::{
    adim1_check, adim_oracle, analyze, partition_by, AdimReport, AdimTable, EffortPolicy,
    MetricPartition, Verdict,
};
pub use error::{Error, Result};
pub use graph::{DistanceOracle, Graph, Vertex};
