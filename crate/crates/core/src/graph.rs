//! Graph and layout value types shared by every other module.
//!
//! Vertices are dense ids `0..n`. Edges are unordered pairs stored with the
//! smaller id first and kept sorted, so two graphs with the same edge set
//! compare equal regardless of how they were built.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A 2D vector used both for positions and for forces.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

/// Vertex position in spring-length units.
pub type Point = Vec2;

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise perpendicular, `(-y, x)`.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn rotate(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x, self * rhs.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Euclidean distance between two points.
pub fn distance(p: Point, q: Point) -> f64 {
    (q - p).norm()
}

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("layout has {got} positions but the graph has {expected} vertices")]
    LayoutSize { expected: usize, got: usize },
    #[error("position of vertex {0} is not finite")]
    NonFinite(usize),
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

impl Graph {
    /// Builds a canonical graph, rejecting self-loops, duplicates and
    /// out-of-range endpoints. The error names the first offending edge as
    /// given by the caller.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            canon.push((u.min(v), u.max(v)));
        }
        let mut sorted = canon.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges: sorted })
    }

    /// A graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// True when every vertex is reachable from vertex 0. The empty graph and
    /// the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
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
        count == self.n
    }
}

/// One finite 2D position per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Layout {
    positions: Vec<Point>,
}

impl Layout {
    pub fn new(positions: Vec<Point>) -> Result<Self, GraphError> {
        if let Some(i) = positions.iter().position(|p| !p.is_finite()) {
            return Err(GraphError::NonFinite(i));
        }
        Ok(Layout { positions })
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self, GraphError> {
        Layout::new(coords.iter().map(|&(x, y)| Vec2::new(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> Point {
        self.positions[v]
    }

    pub fn into_positions(self) -> Vec<Point> {
        self.positions
    }

    /// Checks that this layout has exactly one position per vertex of `graph`.
    pub fn check_covers(&self, graph: &Graph) -> Result<(), GraphError> {
        if self.positions.len() != graph.vertex_count() {
            return Err(GraphError::LayoutSize {
                expected: graph.vertex_count(),
                got: self.positions.len(),
            });
        }
        Ok(())
    }

    /// Applies `f` to every position.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Layout {
        Layout {
            positions: self.positions.iter().map(|&p| f(p)).collect(),
        }
    }

    /// End points of edge `(u, v)`.
    pub fn segment(&self, edge: (usize, usize)) -> (Point, Point) {
        (self.positions[edge.0], self.positions[edge.1])
    }
}
