//! Proper crossings between straight-line edges.
//!
//! Two segments cross properly when they meet at a single point interior to
//! both. Shared endpoints, an endpoint lying on the other segment, parallel
//! and collinear-overlapping segments are all "no crossing". Existence is
//! decided from the signs of orientation determinants only; the
//! intersection point is solved afterwards and never feeds back into the
//! decision.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Layout, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CrossingError {
    #[error("segment has zero length")]
    ZeroLength,
}

/// A properly crossing pair of edges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    /// Smaller edge id of the pair.
    pub edge_a: EdgeId,
    pub edge_b: EdgeId,
    pub point: Point,
    /// Acute crossing angle in degrees, in `(0, 90]`.
    pub theta: f64,
}

/// Twice the signed area of triangle `(a, b, c)`; positive when `c` lies to
/// the left of the directed line `a -> b`.
pub fn orientation(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Intersection point of two segments if they cross properly.
pub fn proper_intersection(seg1: (Point, Point), seg2: (Point, Point)) -> Option<Point> {
    let (p1, p2) = seg1;
    let (q1, q2) = seg2;
    let o1 = orientation(p1, p2, q1);
    let o2 = orientation(p1, p2, q2);
    let o3 = orientation(q1, q2, p1);
    let o4 = orientation(q1, q2, p2);
    if o1 == 0.0 || o2 == 0.0 || o3 == 0.0 || o4 == 0.0 {
        return None;
    }
    if (o1 > 0.0) == (o2 > 0.0) || (o3 > 0.0) == (o4 > 0.0) {
        return None;
    }
    // o3, o4 are the signed distances (scaled) of p1, p2 from line q1q2 and
    // have opposite signs, so t is strictly inside (0, 1).
    let t = o3 / (o3 - o4);
    Some(p1 + t * (p2 - p1))
}

/// Acute angle in degrees between the directions of two segments.
///
/// Returns a value in `[0, 90]`; for segments that properly cross the
/// angle is strictly positive. Perpendicular directions give exactly 90.
pub fn crossing_angle(seg1: (Point, Point), seg2: (Point, Point)) -> Result<f64, CrossingError> {
    let u = seg1.1 - seg1.0;
    let v = seg2.1 - seg2.0;
    if u.norm() == 0.0 || v.norm() == 0.0 {
        return Err(CrossingError::ZeroLength);
    }
    Ok(u.cross(v).abs().atan2(u.dot(v).abs()).to_degrees())
}

/// All properly crossing pairs of non-adjacent edges, ordered by
/// `(edge_a, edge_b)`.
///
/// Pairwise scan over edges sorted by their left x-extent, stopping once
/// the x-extents no longer overlap. Every surviving pair is tested exactly
/// as a plain double loop would test it.
pub fn find_crossings(graph: &Graph, layout: &Layout) -> Vec<Crossing> {
    let edges = graph.edges();
    let segs: Vec<(Point, Point)> = edges.iter().map(|&e| layout.segment(e)).collect();
    let boxes: Vec<[f64; 4]> = segs
        .iter()
        .map(|(a, b)| [a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y)])
        .collect();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&i, &j| boxes[i][0].total_cmp(&boxes[j][0]).then(i.cmp(&j)));

    let mut out = Vec::new();
    for (k, &first) in order.iter().enumerate() {
        let right = boxes[first][1];
        for &second in &order[k + 1..] {
            if boxes[second][0] > right {
                break;
            }
            let (i, j) = (first.min(second), first.max(second));
            let (bi, bj) = (boxes[i], boxes[j]);
            if bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            let ((a, b), (c, d)) = (edges[i], edges[j]);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if let Some(point) = proper_intersection(segs[i], segs[j]) {
                let theta = crossing_angle(segs[i], segs[j]).expect("crossing segments have length");
                out.push(Crossing {
                    edge_a: i,
                    edge_b: j,
                    point,
                    theta,
                });
            }
        }
    }
    out.sort_unstable_by_key(|c| (c.edge_a, c.edge_b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vec2;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Vec2::new(x, y)
    }

    // Angle between direction vectors via atan2 of each direction, folded
    // into [0, 90].
    fn angle_oracle(s1: (Point, Point), s2: (Point, Point)) -> f64 {
        let a1 = (s1.1.y - s1.0.y).atan2(s1.1.x - s1.0.x);
        let a2 = (s2.1.y - s2.0.y).atan2(s2.1.x - s2.0.x);
        let mut d = (a1 - a2).to_degrees().rem_euclid(180.0);
        if d > 90.0 {
            d = 180.0 - d;
        }
        d
    }

    #[test]
    fn symmetric_x_crosses_at_center() {
        let x = proper_intersection((p(0.0, 0.0), p(1.0, 1.0)), (p(0.0, 1.0), p(1.0, 0.0))).unwrap();
        assert_abs_diff_eq!(x.x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(x.y, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn shared_endpoint_is_not_a_crossing() {
        assert_eq!(
            proper_intersection((p(0.0, 0.0), p(1.0, 1.0)), (p(1.0, 1.0), p(2.0, 0.0))),
            None
        );
    }

    #[test]
    fn parallel_disjoint_is_not_a_crossing() {
        assert_eq!(
            proper_intersection((p(0.0, 0.0), p(1.0, 0.0)), (p(0.0, 1.0), p(1.0, 1.0))),
            None
        );
    }

    #[test]
    fn touching_and_collinear_cases_are_not_crossings() {
        // T-junction: endpoint of one on the interior of the other
        assert_eq!(
            proper_intersection((p(0.0, 0.0), p(2.0, 0.0)), (p(1.0, 0.0), p(1.0, 1.0))),
            None
        );
        // collinear overlap
        assert_eq!(
            proper_intersection((p(0.0, 0.0), p(2.0, 0.0)), (p(1.0, 0.0), p(3.0, 0.0))),
            None
        );
        // disjoint, non-parallel
        assert_eq!(
            proper_intersection((p(0.0, 0.0), p(1.0, 0.0)), (p(2.0, -1.0), p(2.0, 1.0))),
            None
        );
    }

    #[test]
    fn perpendicular_diagonals_are_ninety_degrees() {
        let a = crossing_angle((p(0.0, 0.0), p(1.0, 1.0)), (p(0.0, 1.0), p(1.0, 0.0))).unwrap();
        assert_eq!(a, 90.0);
    }

    #[test]
    fn crossing_angle_matches_atan2_oracle() {
        let s1 = (p(0.0, 0.0), p(1.0, 0.0));
        let s2 = (p(0.5, -1.0), p(1.5, 1.0));
        let expected = angle_oracle(s1, s2);
        assert_abs_diff_eq!(expected, 2f64.atan().to_degrees(), epsilon = 1e-12);
        assert_abs_diff_eq!(expected, 63.4349488, epsilon = 1e-6);
        assert_abs_diff_eq!(crossing_angle(s1, s2).unwrap(), expected, epsilon = 1e-10);

        let s3 = (p(0.5, -0.5), p(0.6, 0.5));
        let expected = angle_oracle(s1, s3);
        assert_abs_diff_eq!(expected, 84.2894069, epsilon = 1e-6);
        assert_abs_diff_eq!(crossing_angle(s1, s3).unwrap(), expected, epsilon = 1e-10);
    }

    #[test]
    fn zero_length_segment_is_an_error() {
        assert_eq!(
            crossing_angle((p(1.0, 1.0), p(1.0, 1.0)), (p(0.0, 0.0), p(1.0, 0.0))),
            Err(CrossingError::ZeroLength)
        );
    }

    #[test]
    fn square_with_diagonals_has_one_right_angle_crossing() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let cs = find_crossings(&g, &l);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].theta, 90.0);
        assert_abs_diff_eq!(cs[0].point.x, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn collinear_path_has_no_crossings() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (2.5, 0.0), (3.0, 0.0), (7.0, 0.0)]).unwrap();
        assert!(find_crossings(&g, &l).is_empty());
    }

    fn seg() -> impl Strategy<Value = (Point, Point)> {
        (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64).prop_map(|(a, b, c, d)| (p(a, b), p(c, d)))
    }

    proptest! {
        #[test]
        fn crossing_is_symmetric(s1 in seg(), s2 in seg()) {
            let base = proper_intersection(s1, s2);
            let variants = [
                proper_intersection(s2, s1),
                proper_intersection((s1.1, s1.0), s2),
                proper_intersection(s1, (s2.1, s2.0)),
                proper_intersection((s2.1, s2.0), (s1.1, s1.0)),
            ];
            for v in variants {
                prop_assert_eq!(base.is_some(), v.is_some());
                if let (Some(a), Some(b)) = (base, v) {
                    prop_assert!((a - b).norm() < 1e-9);
                }
            }
            if base.is_some() {
                let t = crossing_angle(s1, s2).unwrap();
                prop_assert!(t > 0.0 && t <= 90.0);
                prop_assert!((t - crossing_angle(s2, (s1.1, s1.0)).unwrap()).abs() < 1e-9);
                prop_assert!((t - angle_oracle(s1, s2)).abs() < 1e-9);
            }
        }

        #[test]
        fn angle_is_rigid_motion_invariant(
            s1 in seg(), s2 in seg(),
            rot in 0.0..std::f64::consts::TAU,
            tx in -50.0..50.0f64, ty in -50.0..50.0f64,
        ) {
            prop_assume!(proper_intersection(s1, s2).is_some());
            let m = |q: Point| q.rotate(rot) + p(tx, ty);
            let before = crossing_angle(s1, s2).unwrap();
            let after = crossing_angle((m(s1.0), m(s1.1)), (m(s2.0), m(s2.1))).unwrap();
            prop_assert!((before - after).abs() < 1e-9);
        }
    }
}
