//! Seeded generators for sparse connected test graphs.
//!
//! Random families: Erdős–Rényi `G(n, m)`, Watts–Strogatz small worlds,
//! the Eppstein–Wang steady-state power-law process, and random planar
//! graphs obtained by thinning a random triangulation. A handful of fixed
//! classics (cycle, path, star, tree, dodecahedron, icosahedron, triangulated
//! triangle) complete the set.
//!
//! Every random graph is simple and connected, and `(spec, seed)` fully
//! determines the output.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::seed::rng;

/// Attempts before a rejection-sampling loop gives up.
const MAX_ATTEMPTS: usize = 10_000;

/// Rejection attempts for `G(n, m)` before switching to edge-swap mixing.
const ER_REJECTION_BUDGET: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("unknown classic graph {0:?}")]
    UnknownClassic(String),
    #[error("no connected sample after {0} attempts")]
    Exhausted(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Hard-coded named graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicGraph {
    Cycle,
    Path,
    Star,
    /// Complete binary tree in heap order.
    Tree,
    Dodecahedron,
    Icosahedron,
    /// Triangle subdivided into a triangular grid of side 4 (15 vertices).
    TriangulatedTriangle,
}

impl ClassicGraph {
    pub const ALL: [ClassicGraph; 7] = [
        ClassicGraph::Cycle,
        ClassicGraph::Path,
        ClassicGraph::Star,
        ClassicGraph::Tree,
        ClassicGraph::Dodecahedron,
        ClassicGraph::Icosahedron,
        ClassicGraph::TriangulatedTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicGraph::Cycle => "cycle",
            ClassicGraph::Path => "path",
            ClassicGraph::Star => "star",
            ClassicGraph::Tree => "tree",
            ClassicGraph::Dodecahedron => "dodecahedron",
            ClassicGraph::Icosahedron => "icosahedron",
            ClassicGraph::TriangulatedTriangle => "triangulated-triangle",
        }
    }

    /// Vertex count for graphs whose size is fixed.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            ClassicGraph::Dodecahedron => Some(20),
            ClassicGraph::Icosahedron => Some(12),
            ClassicGraph::TriangulatedTriangle => Some(15),
            _ => None,
        }
    }
}

impl fmt::Display for ClassicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicGraph {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, GenError> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        ClassicGraph::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| GenError::UnknownClassic(s.to_string()))
    }
}

/// Model and parameters of a generated graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum Model {
    ErdosRenyi {
        m: usize,
    },
    WattsStrogatz {
        k: usize,
        p: f64,
    },
    EppsteinWang {
        m: usize,
        steps: usize,
    },
    /// Substitute for benchmark planar graph collections.
    RandomPlanar {
        m: usize,
    },
    Classic {
        name: ClassicGraph,
    },
}

impl Model {
    pub fn family(&self) -> &'static str {
        match self {
            Model::ErdosRenyi { .. } => "erdos-renyi",
            Model::WattsStrogatz { .. } => "watts-strogatz",
            Model::EppsteinWang { .. } => "eppstein-wang",
            Model::RandomPlanar { .. } => "random-planar",
            Model::Classic { .. } => "classic",
        }
    }

    /// Provenance remark carried into every output built from this model.
    pub fn note(&self) -> Option<&'static str> {
        match self {
            Model::RandomPlanar { .. } => {
                Some("synthetic random planar graphs, substituting for the GDT planar benchmark files")
            }
            _ => None,
        }
    }
}

/// Everything needed to regenerate a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        let n = self.n;
        let seed = self.seed;
        match self.model {
            Model::ErdosRenyi { m } => gen_erdos_renyi(n, m, seed),
            Model::WattsStrogatz { k, p } => gen_watts_strogatz(n, k, p, seed),
            Model::EppsteinWang { m, steps } => gen_eppstein_wang(n, m, steps, seed),
            Model::RandomPlanar { m } => gen_random_planar(n, m, seed),
            Model::Classic { name } => classic(name, n),
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn check_sparse_connected_range(n: usize, m: usize, upper: usize) -> Result<(), GenError> {
    if n == 0 {
        return Err(GenError::Infeasible("n must be at least 1".into()));
    }
    if m + 1 < n {
        return Err(GenError::Infeasible(format!("{m} edges cannot connect {n} vertices")));
    }
    if m > upper {
        return Err(GenError::Infeasible(format!(
            "{m} edges exceeds the limit {upper} for {n} vertices"
        )));
    }
    Ok(())
}

/// Uniform connected graph with exactly `m` edges.
///
/// Samples `G(n, m)` and rejects disconnected results. When `m` is so close
/// to `n - 1` that rejection is hopeless, falls back to a random spanning
/// tree plus random extra edges, mixed by connectivity-preserving edge swaps.
pub fn gen_erdos_renyi(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let pairs = all_pairs(n);
    check_sparse_connected_range(n, m, pairs.len().min(3 * n))?;
    let mut r = rng(seed);
    for _ in 0..ER_REJECTION_BUDGET {
        let picked = index::sample(&mut r, pairs.len(), m);
        let g = Graph::new(n, picked.iter().map(|i| pairs[i]))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Ok(connected_by_swaps(n, m, &pairs, &mut r)?)
}

fn connected_by_swaps(n: usize, m: usize, pairs: &[(usize, usize)], r: &mut ChaCha8Rng) -> Result<Graph, GraphError> {
    // random spanning tree: attach each vertex of a random order to an
    // earlier one
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(r);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for i in 1..n {
        let j = order[r.gen_range(0..i)];
        let (u, v) = (order[i].min(j), order[i].max(j));
        edges.push((u, v));
    }
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    while edges.len() < m {
        let e = pairs[r.gen_range(0..pairs.len())];
        if present.insert(e) {
            edges.push(e);
        }
    }
    if m < pairs.len() {
        for _ in 0..20 * m {
            let i = r.gen_range(0..edges.len());
            let e = pairs[r.gen_range(0..pairs.len())];
            if present.contains(&e) {
                continue;
            }
            let old = edges[i];
            edges[i] = e;
            if connected(n, &edges) {
                present.remove(&old);
                present.insert(e);
            } else {
                edges[i] = old;
            }
        }
    }
    Graph::new(n, edges)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Ring lattice where each vertex links to its `k` nearest neighbours, with
/// each lattice edge `(i, i + j)` rewired to `(i, w)` with probability `p`.
pub fn gen_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if k == 0 || !k.is_multiple_of(2) || k >= n {
        return Err(GenError::Infeasible(format!(
            "ring degree k={k} must be even, positive and below n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Infeasible(format!("rewire probability {p} outside [0, 1]")));
    }
    let mut r = rng(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
        for j in 1..=k / 2 {
            for i in 0..n {
                edges.push((i, (i + j) % n));
            }
        }
        let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        for e in edges.iter_mut() {
            if !r.gen_bool(p) {
                continue;
            }
            let (i, old) = *e;
            let w = r.gen_range(0..n);
            let key = (i.min(w), i.max(w));
            if w == i || present.contains(&key) {
                continue;
            }
            present.remove(&(i.min(old), i.max(old)));
            present.insert(key);
            *e = (i, w);
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::Exhausted(MAX_ATTEMPTS))
}

/// Steady-state power-law process.
///
/// Starts from a connected `G(n, m)`. Each mixing step removes a uniformly
/// random edge and inserts an edge from a uniformly random vertex to a
/// degree-biased vertex (an endpoint of a uniformly random edge). Steps that
/// would create a loop or duplicate, or disconnect the graph, are skipped.
pub fn gen_eppstein_wang(n: usize, m: usize, steps: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::Infeasible("n must be at least 2".into()));
    }
    let start = gen_erdos_renyi(n, m, seed)?;
    // independent stream for the mixing phase
    let mut r = rng(crate::seed::derive_seed(seed, 1));
    let mut edges: Vec<(usize, usize)> = start.edges().to_vec();
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..steps {
        let remove = r.gen_range(0..edges.len());
        let u = r.gen_range(0..n);
        let donor = edges[r.gen_range(0..edges.len())];
        let w = if r.gen_bool(0.5) { donor.0 } else { donor.1 };
        let key = (u.min(w), u.max(w));
        if u == w || present.contains(&key) {
            continue;
        }
        let old = edges[remove];
        edges[remove] = key;
        if connected(n, &edges) {
            present.remove(&old);
            present.insert(key);
        } else {
            edges[remove] = old;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Random connected planar graph with `m` edges.
///
/// Builds a random maximal planar graph by inserting each new vertex into a
/// uniformly chosen face (outer face included) of the current
/// triangulation, relabels the vertices randomly, then deletes edges in
/// random order, skipping bridges, until `m` remain.
pub fn gen_random_planar(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::Infeasible("random planar graphs need n >= 3".into()));
    }
    check_sparse_connected_range(n, m, 3 * n - 6)?;
    let mut r = rng(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let f = r.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
        .collect();
    edges.sort_unstable();
    edges.shuffle(&mut r);

    let mut i = 0;
    while edges.len() > m && i < edges.len() {
        let removed = edges.swap_remove(i);
        if connected(n, &edges) {
            continue;
        }
        // bridge: put it back and move on
        edges.push(removed);
        let last = edges.len() - 1;
        edges.swap(i, last);
        i += 1;
    }
    Ok(Graph::new(n, edges)?)
}

const DODECAHEDRON: [(usize, usize); 30] = [
    (0, 1),
    (0, 10),
    (0, 19),
    (1, 2),
    (1, 8),
    (2, 3),
    (2, 6),
    (3, 4),
    (3, 19),
    (4, 5),
    (4, 17),
    (5, 6),
    (5, 15),
    (6, 7),
    (7, 8),
    (7, 14),
    (8, 9),
    (9, 10),
    (9, 13),
    (10, 11),
    (11, 12),
    (11, 18),
    (12, 13),
    (12, 16),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 18),
    (18, 19),
];

const ICOSAHEDRON: [(usize, usize); 30] = [
    (0, 1),
    (0, 5),
    (0, 7),
    (0, 8),
    (0, 11),
    (1, 2),
    (1, 5),
    (1, 6),
    (1, 8),
    (2, 3),
    (2, 6),
    (2, 8),
    (2, 9),
    (3, 4),
    (3, 6),
    (3, 9),
    (3, 10),
    (4, 5),
    (4, 6),
    (4, 10),
    (4, 11),
    (5, 6),
    (5, 11),
    (7, 8),
    (7, 9),
    (7, 10),
    (7, 11),
    (8, 9),
    (9, 10),
    (10, 11),
];

fn triangulated_triangle(side: usize) -> Vec<(usize, usize)> {
    // row i holds vertices id(i, 0..=i)
    let id = |i: usize, j: usize| i * (i + 1) / 2 + j;
    let mut edges = Vec::new();
    for i in 0..=side {
        for j in 0..=i {
            if j < i {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < side {
                edges.push((id(i, j), id(i + 1, j)));
                edges.push((id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    edges
}

/// A named classic graph. `n` sizes the cycle, path, star and tree and is
/// ignored by the fixed-size graphs.
pub fn classic(name: ClassicGraph, n: usize) -> Result<Graph, GenError> {
    let need = |min: usize| {
        if n < min {
            Err(GenError::Infeasible(format!("{name} needs n >= {min}")))
        } else {
            Ok(())
        }
    };
    let g = match name {
        ClassicGraph::Cycle => {
            need(3)?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        ClassicGraph::Path => {
            need(1)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))?
        }
        ClassicGraph::Star => {
            need(1)?;
            Graph::new(n, (1..n).map(|i| (0, i)))?
        }
        ClassicGraph::Tree => {
            need(1)?;
            Graph::new(n, (1..n).map(|i| ((i - 1) / 2, i)))?
        }
        ClassicGraph::Dodecahedron => Graph::new(20, DODECAHEDRON)?,
        ClassicGraph::Icosahedron => Graph::new(12, ICOSAHEDRON)?,
        ClassicGraph::TriangulatedTriangle => Graph::new(15, triangulated_triangle(4))?,
    };
    Ok(g)
}
