//! The iterative layout loop.
//!
//! Each iteration computes the combined force on every vertex from the
//! frozen positions of the previous iteration (spring terms over incident
//! edges, repulsion from every other vertex and, for the BIGCROSS variants,
//! cosine terms from every crossing involving an incident edge), then moves
//! each vertex by `step * F(v)` with the displacement length capped at
//! `max_disp`. The run stops when the largest movement along x and along y
//! are both at most `move_threshold`, or at `max_iterations`.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossings::{find_crossings, Crossing};
use crate::forces::{cosine_forces, repulsive_force, spring_force, ForceVector, COINCIDENT_EPS};
use crate::graph::{distance, Graph, GraphError, Layout, Point, Vec2};
use crate::params::{LayoutParams, ParamsError};
use crate::seed::{mix64, rng, unit_interval};

/// Distance a coincident vertex is pushed off its partner.
pub const JITTER: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("layout needs at least one vertex")]
    EmptyGraph,
    #[error("force on vertex {vertex} is not finite ({force})")]
    NonFiniteForce { vertex: usize, force: Vec2 },
}

/// Outcome of a complete run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    #[serde(rename = "final")]
    pub final_layout: Layout,
    pub iterations: u32,
    pub converged: bool,
    /// Seconds of wall-clock time.
    pub wall_time: f64,
}

/// Result of a single iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub layout: Layout,
    /// Largest `|dx|` and largest `|dy|` over all vertices.
    pub max_move: Vec2,
}

/// Uniform random placement in the unit square.
pub fn initial_placement(n: usize, seed: u64) -> Layout {
    let mut r = rng(seed);
    let positions = (0..n).map(|_| Vec2::new(r.gen::<f64>(), r.gen::<f64>())).collect();
    Layout::new(positions).expect("unit-square coordinates are finite")
}

/// Combined force on every vertex.
///
/// `crossings` must have been computed from `layout`; it is ignored by the
/// classical variant. Pairs of coincident vertices contribute nothing here;
/// [`step`] separates them before forces are evaluated.
pub fn total_force(graph: &Graph, layout: &Layout, params: &LayoutParams, crossings: &[Crossing]) -> Vec<ForceVector> {
    let pos = layout.positions();
    let n = pos.len();
    let mut force = vec![Vec2::ZERO; n];

    for &(u, v) in graph.edges() {
        if let Some(f) = spring_force(pos[u], pos[v], params.k_s, params.l) {
            force[v] += f;
            force[u] += -f;
        }
    }

    for u in 0..n {
        for v in u + 1..n {
            if let Some(f) = repulsive_force(pos[u], pos[v], params.k_r) {
                force[v] += f;
                force[u] += -f;
            }
        }
    }

    if let Some(kernel) = params.variant.cosine() {
        let edges = graph.edges();
        for c in crossings {
            let (a, b) = edges[c.edge_a];
            let (cv, d) = edges[c.edge_b];
            let f = cosine_forces(kernel, pos[a], pos[b], pos[cv], pos[d], params.k_cos);
            force[a] += f.on_a;
            force[b] += f.on_b;
            force[cv] += f.on_c;
            force[d] += f.on_d;
        }
    }
    force
}

/// Direction used to separate the coincident pair `(u, v)`, `u < v`.
fn jitter_direction(u: usize, v: usize) -> Vec2 {
    let h = mix64(((u as u64) << 32) ^ v as u64);
    let angle = unit_interval(h) * std::f64::consts::TAU;
    Vec2::new(angle.cos(), angle.sin())
}

/// Moves the higher-indexed vertex of every coincident pair by [`JITTER`].
fn separate_coincident(pos: &mut [Point]) {
    let original = pos.to_vec();
    for u in 0..original.len() {
        for v in u + 1..original.len() {
            if distance(original[u], original[v]) < COINCIDENT_EPS {
                pos[v] += JITTER * jitter_direction(u, v);
            }
        }
    }
}

/// One iteration of the layout loop.
pub fn step(graph: &Graph, layout: &Layout, params: &LayoutParams) -> Result<StepOutcome, EngineError> {
    layout.check_covers(graph)?;
    let mut pos = layout.positions().to_vec();
    separate_coincident(&mut pos);
    let current = Layout::new(pos)?;

    let crossings = if params.variant.cosine().is_some() {
        find_crossings(graph, &current)
    } else {
        Vec::new()
    };
    let forces = total_force(graph, &current, params, &crossings);

    let mut next = Vec::with_capacity(forces.len());
    let mut max_move = Vec2::ZERO;
    for (v, (&p, &f)) in current.positions().iter().zip(&forces).enumerate() {
        if !f.is_finite() {
            return Err(EngineError::NonFiniteForce { vertex: v, force: f });
        }
        let mut disp = params.step * f;
        let len = disp.norm();
        if len > params.max_disp {
            disp = (params.max_disp / len) * disp;
        }
        let q = p + disp;
        let moved = q - layout.position(v);
        max_move.x = max_move.x.max(moved.x.abs());
        max_move.y = max_move.y.max(moved.y.abs());
        next.push(q);
    }
    Ok(StepOutcome {
        layout: Layout::new(next)?,
        max_move,
    })
}

/// Runs the loop from an explicit starting layout.
pub fn run_from(graph: &Graph, start: Layout, params: &LayoutParams) -> Result<RunResult, EngineError> {
    params.validate()?;
    if graph.vertex_count() == 0 {
        return Err(EngineError::EmptyGraph);
    }
    start.check_covers(graph)?;
    let clock = Instant::now();
    let mut layout = start;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < params.max_iterations {
        let out = step(graph, &layout, params)?;
        layout = out.layout;
        iterations += 1;
        if out.max_move.x <= params.move_threshold && out.max_move.y <= params.move_threshold {
            converged = true;
            break;
        }
    }
    Ok(RunResult {
        final_layout: layout,
        iterations,
        converged,
        wall_time: clock.elapsed().as_secs_f64(),
    })
}

/// Runs the loop from the seeded unit-square placement.
pub fn run(graph: &Graph, params: &LayoutParams, seed: u64) -> Result<RunResult, EngineError> {
    run_from(graph, initial_placement(graph.vertex_count(), seed), params)
}
