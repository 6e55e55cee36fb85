//! Force-directed graph layout with a cosine force that widens the angles
//! at which edges cross.
//!
//! The classical spring embedder (Hooke springs on edges, inverse-square
//! repulsion between all vertex pairs) is extended by a force on the four
//! endpoints of every crossing edge pair whose magnitude is
//! `k_cos * cos(theta)`, where `theta` is the acute crossing angle. The
//! crate also provides the drawing metrics, random graph generators and the
//! paired Wilcoxon comparison used to evaluate the method.

pub mod bench;
pub mod crossings;
pub mod engine;
pub mod forces;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod params;
pub mod seed;
pub mod stats;

pub use bench::{run_pair, summarize, BenchRecord, BenchSummary, Family, Metric};
pub use crossings::{crossing_angle, find_crossings, proper_intersection, Crossing};
pub use engine::{initial_placement, run, run_from, step, total_force, RunResult};
pub use forces::{CosineVariant, CrossingForces, ForceVector};
pub use graph::{distance, Graph, GraphError, Layout, Point, Vec2};
pub use io::{parse_edge_list, render_svg, write_edge_list, LayoutFile};
pub use metrics::{measure, MetricsReport};
pub use params::{LayoutParams, Variant};
