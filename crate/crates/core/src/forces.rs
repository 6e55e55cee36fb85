//! Force kernels: Hooke springs, inverse-square repulsion and the three
//! cosine-force directions applied to the endpoints of a crossing edge pair.
//!
//! Every kernel is a pure function of positions. Springs and repulsion
//! return `None` when the two points coincide (distance below
//! [`COINCIDENT_EPS`]) so the caller can resolve the degeneracy.
//!
//! For a crossing of edge `(a, b)` with edge `(c, d)` write `u` and `v` for
//! the unit directions `a -> b` and `c -> d`, and `cos = u . v`. The acute
//! crossing angle satisfies `cos(theta) = |cos|`, and every cosine force has
//! magnitude `k_cos * |cos|`, vanishing at a right angle. Signs are chosen
//! so that moving any endpoint along its force decreases `|cos|` to first
//! order:
//!
//! * parallel: `a` moves along `cos * v`. Shifting `a` by `s * v` changes the
//!   unnormalised dot product `(b - a) . v` by `-s`, which shrinks `|cos|`
//!   when `s` has the sign of `cos`.
//! * rotational: `a` moves along `perp(u)`, signed by `cos * (perp(u) . v)`.
//! * attract/repel: each endpoint is pulled toward the endpoint of the other
//!   edge that subtends an obtuse angle with it at the crossing point, and
//!   pushed away from the remaining one.

use serde::{Deserialize, Serialize};

use crate::graph::{Point, Vec2};

/// Force acting on a single vertex.
pub type ForceVector = Vec2;

/// Below this separation two vertices are treated as coincident.
pub const COINCIDENT_EPS: f64 = 1e-9;

/// Normalisations of shorter vectors produce no force.
pub const NORMALIZE_EPS: f64 = 1e-12;

/// Direction scheme for the cosine force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosineVariant {
    Parallel,
    Rotational,
    AttractRepel,
}

impl CosineVariant {
    pub const ALL: [CosineVariant; 3] = [
        CosineVariant::Parallel,
        CosineVariant::Rotational,
        CosineVariant::AttractRepel,
    ];
}

/// Forces on the four endpoints of a crossing pair `(a, b) x (c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CrossingForces {
    pub on_a: ForceVector,
    pub on_b: ForceVector,
    pub on_c: ForceVector,
    pub on_d: ForceVector,
}

impl CrossingForces {
    pub fn as_array(&self) -> [ForceVector; 4] {
        [self.on_a, self.on_b, self.on_c, self.on_d]
    }

    pub fn net(&self) -> ForceVector {
        self.on_a + self.on_b + self.on_c + self.on_d
    }
}

fn unit(v: Vec2) -> Option<Vec2> {
    let len = v.norm();
    if len < NORMALIZE_EPS {
        None
    } else {
        Some((1.0 / len) * v)
    }
}

/// Hooke spring between `u` and `v`, as felt by `v`.
///
/// Positive `d - l` pulls `v` toward `u`; a compressed spring pushes it away.
pub fn spring_force(p_u: Point, p_v: Point, k_s: f64, l: f64) -> Option<ForceVector> {
    let delta = p_v - p_u;
    let d = delta.norm();
    if d < COINCIDENT_EPS {
        return None;
    }
    Some((-k_s * (d - l) / d) * delta)
}

/// Inverse-square repulsion of `v` away from `u`.
pub fn repulsive_force(p_u: Point, p_v: Point, k_r: f64) -> Option<ForceVector> {
    let delta = p_v - p_u;
    let d = delta.norm();
    if d < COINCIDENT_EPS {
        return None;
    }
    Some((k_r / (d * d * d)) * delta)
}

/// `k_cos * cos(theta)` for a crossing angle in degrees. A right angle gives
/// exactly zero.
pub fn cosine_magnitude(theta: f64, k_cos: f64) -> f64 {
    if theta == 90.0 {
        return 0.0;
    }
    k_cos * theta.to_radians().cos()
}

struct Directions {
    u: Vec2,
    v: Vec2,
    /// Signed cosine `u . v`; exactly zero when the raw directions are
    /// exactly perpendicular.
    cos: f64,
}

fn directions(p_a: Point, p_b: Point, p_c: Point, p_d: Point) -> Option<Directions> {
    let ab = p_b - p_a;
    let cd = p_d - p_c;
    let u = unit(ab)?;
    let v = unit(cd)?;
    let raw = ab.dot(cd);
    let cos = if raw == 0.0 {
        0.0
    } else {
        (raw / (ab.norm() * cd.norm())).clamp(-1.0, 1.0)
    };
    Some(Directions { u, v, cos })
}

/// Cosine force directed along the other edge.
pub fn parallel_cosine(p_a: Point, p_b: Point, p_c: Point, p_d: Point, k_cos: f64) -> CrossingForces {
    let Some(dir) = directions(p_a, p_b, p_c, p_d) else {
        return CrossingForces::default();
    };
    let on_a = (k_cos * dir.cos) * dir.v;
    let on_c = (k_cos * dir.cos) * dir.u;
    CrossingForces {
        on_a,
        on_b: -on_a,
        on_c,
        on_d: -on_c,
    }
}

/// Cosine force perpendicular to the vertex's own edge, turning both edges
/// toward a right angle.
pub fn rotational_cosine(p_a: Point, p_b: Point, p_c: Point, p_d: Point, k_cos: f64) -> CrossingForces {
    let Some(dir) = directions(p_a, p_b, p_c, p_d) else {
        return CrossingForces::default();
    };
    let mag = k_cos * dir.cos.abs();
    let w_ab = dir.u.perp();
    let w_cd = dir.v.perp();
    let s_ab = signum_or_zero(dir.cos * w_ab.dot(dir.v));
    let s_cd = signum_or_zero(dir.cos * w_cd.dot(dir.u));
    let on_a = (s_ab * mag) * w_ab;
    let on_c = (s_cd * mag) * w_cd;
    CrossingForces {
        on_a,
        on_b: -on_a,
        on_c,
        on_d: -on_c,
    }
}

fn signum_or_zero(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Cosine force split into an attraction toward one endpoint of the other
/// edge and a repulsion from the other endpoint, each of full magnitude.
pub fn attract_repel_cosine(p_a: Point, p_b: Point, p_c: Point, p_d: Point, k_cos: f64) -> CrossingForces {
    let Some(dir) = directions(p_a, p_b, p_c, p_d) else {
        return CrossingForces::default();
    };
    let mag = k_cos * dir.cos.abs();
    let component = |from: Point, to: Point| unit(to - from).map_or(Vec2::ZERO, |e| mag * e);
    let pull_push = |p: Point, toward: Point, away: Point| component(p, toward) + component(away, p);

    // At the crossing point a lies along -u, b along +u, c along -v and d
    // along +v. With cos > 0 the obtuse partners are a-d, b-c, c-b, d-a.
    if dir.cos >= 0.0 {
        CrossingForces {
            on_a: pull_push(p_a, p_d, p_c),
            on_b: pull_push(p_b, p_c, p_d),
            on_c: pull_push(p_c, p_b, p_a),
            on_d: pull_push(p_d, p_a, p_b),
        }
    } else {
        CrossingForces {
            on_a: pull_push(p_a, p_c, p_d),
            on_b: pull_push(p_b, p_d, p_c),
            on_c: pull_push(p_c, p_a, p_b),
            on_d: pull_push(p_d, p_b, p_a),
        }
    }
}

/// Dispatches to the kernel for `variant`.
pub fn cosine_forces(
    variant: CosineVariant,
    p_a: Point,
    p_b: Point,
    p_c: Point,
    p_d: Point,
    k_cos: f64,
) -> CrossingForces {
    match variant {
        CosineVariant::Parallel => parallel_cosine(p_a, p_b, p_c, p_d, k_cos),
        CosineVariant::Rotational => rotational_cosine(p_a, p_b, p_c, p_d, k_cos),
        CosineVariant::AttractRepel => attract_repel_cosine(p_a, p_b, p_c, p_d, k_cos),
    }
}
