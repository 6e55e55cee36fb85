//! Aesthetic measures of a drawing: crossing count, crossing-angle mean and
//! deviation, edge-length mean and deviation, and angular resolution.
//!
//! Deviations are population standard deviations. A drawing without
//! crossings reports 0 for both crossing-angle statistics.

use serde::{Deserialize, Serialize};

use crate::crossings::{find_crossings, Crossing};
use crate::graph::{distance, Graph, Layout};

/// Reported when no vertex has two incident edges.
pub const UNDEFINED_RESOLUTION: f64 = 360.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub crossings: usize,
    pub angle_mean: f64,
    pub angle_stddev: f64,
    pub edge_len_mean: f64,
    pub edge_len_stddev: f64,
    /// Degrees; [`UNDEFINED_RESOLUTION`] when `angular_resolution_defined`
    /// is false.
    pub angular_resolution: f64,
    pub angular_resolution_defined: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularResolution {
    pub degrees: f64,
    pub defined: bool,
}

/// Population mean and standard deviation; `(0, 0)` for an empty slice.
pub fn mean_stddev(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Smallest angle between two edges sharing an endpoint, over all vertices.
///
/// Incident edge directions around each vertex are sorted and the minimum
/// gap between cyclically consecutive directions is taken.
pub fn angular_resolution(graph: &Graph, layout: &Layout) -> AngularResolution {
    let mut best = f64::INFINITY;
    let mut dirs = Vec::new();
    for (v, nbrs) in graph.adjacency().iter().enumerate() {
        if nbrs.len() < 2 {
            continue;
        }
        let pv = layout.position(v);
        dirs.clear();
        dirs.extend(nbrs.iter().map(|&w| {
            let d = layout.position(w) - pv;
            d.y.atan2(d.x).to_degrees().rem_euclid(360.0)
        }));
        dirs.sort_by(f64::total_cmp);
        let wrap = 360.0 - dirs[dirs.len() - 1] + dirs[0];
        let gap = dirs.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min);
        best = best.min(gap);
    }
    if best.is_finite() {
        AngularResolution {
            degrees: best,
            defined: true,
        }
    } else {
        AngularResolution {
            degrees: UNDEFINED_RESOLUTION,
            defined: false,
        }
    }
}

/// Measures a drawing and also returns the crossings found.
pub fn measure_with_crossings(graph: &Graph, layout: &Layout) -> (MetricsReport, Vec<Crossing>) {
    let crossings = find_crossings(graph, layout);
    let thetas: Vec<f64> = crossings.iter().map(|c| c.theta).collect();
    let (angle_mean, angle_stddev) = mean_stddev(&thetas);
    let lengths: Vec<f64> = graph
        .edges()
        .iter()
        .map(|&e| {
            let (a, b) = layout.segment(e);
            distance(a, b)
        })
        .collect();
    let (edge_len_mean, edge_len_stddev) = mean_stddev(&lengths);
    let res = angular_resolution(graph, layout);
    let report = MetricsReport {
        crossings: crossings.len(),
        angle_mean,
        angle_stddev,
        edge_len_mean,
        edge_len_stddev,
        angular_resolution: res.degrees,
        angular_resolution_defined: res.defined,
    };
    (report, crossings)
}

pub fn measure(graph: &Graph, layout: &Layout) -> MetricsReport {
    measure_with_crossings(graph, layout).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Point, Vec2};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn unit_square_k4() -> (Graph, Layout) {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        (g, l)
    }

    #[test]
    fn square_with_diagonals() {
        let (g, l) = unit_square_k4();
        let m = measure(&g, &l);
        assert_eq!(m.crossings, 1);
        assert_eq!(m.angle_mean, 90.0);
        assert_eq!(m.angle_stddev, 0.0);
        assert_abs_diff_eq!(m.edge_len_mean, (4.0 + 2.0 * 2f64.sqrt()) / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.edge_len_mean, 1.1380712, epsilon = 1e-6);
        assert_abs_diff_eq!(m.angular_resolution, 45.0, epsilon = 1e-12);
        assert!(m.angular_resolution_defined);
    }

    #[test]
    fn crossing_free_drawing_reports_zero_angles() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let m = measure(&g, &l);
        assert_eq!((m.crossings, m.angle_mean, m.angle_stddev), (0, 0.0, 0.0));
        assert_eq!(m.edge_len_stddev, 0.0);
    }

    #[test]
    fn star_resolution() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)]).unwrap();
        assert_abs_diff_eq!(angular_resolution(&g, &l).degrees, 90.0, epsilon = 1e-12);
    }

    #[test]
    fn bent_path_resolution() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let a = 60f64.to_radians();
        let l = Layout::from_xy(&[(1.0, 0.0), (0.0, 0.0), (a.cos(), a.sin())]).unwrap();
        assert_abs_diff_eq!(angular_resolution(&g, &l).degrees, 60.0, epsilon = 1e-9);
    }

    #[test]
    fn uniform_fan_resolution() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]).unwrap();
        assert_abs_diff_eq!(angular_resolution(&g, &l).degrees, 90.0, epsilon = 1e-12);
    }

    #[test]
    fn matching_has_undefined_resolution() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]).unwrap();
        let r = angular_resolution(&g, &l);
        assert_eq!(r.degrees, UNDEFINED_RESOLUTION);
        assert!(!r.defined);
    }

    #[test]
    fn singleton_stddev_is_zero() {
        assert_eq!(mean_stddev(&[3.5]), (3.5, 0.0));
        assert_eq!(mean_stddev(&[1.0, 3.0]), (2.0, 1.0));
    }

    fn pairwise_min_angle(center: Point, nbrs: &[Point]) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (a, b) = (nbrs[i] - center, nbrs[j] - center);
                let cos = (a.dot(b) / (a.norm() * b.norm())).clamp(-1.0, 1.0);
                best = best.min(cos.acos().to_degrees());
            }
        }
        best
    }

    fn k4_variant_layout() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 6)
    }

    proptest! {
        #[test]
        fn degree_five_resolution_matches_pairwise_oracle(
            angles in prop::collection::vec(0.0..360.0f64, 5),
            radii in prop::collection::vec(0.5..2.0f64, 5),
        ) {
            let mut coords = vec![(0.0, 0.0)];
            for (a, r) in angles.iter().zip(&radii) {
                let t = a.to_radians();
                coords.push((r * t.cos(), r * t.sin()));
            }
            let g = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
            let l = Layout::from_xy(&coords).unwrap();
            let nbrs: Vec<Point> = l.positions()[1..].to_vec();
            let oracle = pairwise_min_angle(Vec2::ZERO, &nbrs);
            prop_assert!((angular_resolution(&g, &l).degrees - oracle).abs() < 1e-7);
        }

        #[test]
        fn metrics_are_rigid_motion_and_scale_consistent(
            coords in k4_variant_layout(),
            rot in 0.0..std::f64::consts::TAU,
            shift in (-10.0..10.0f64, -10.0..10.0f64),
            scale in 0.1..10.0f64,
        ) {
            let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
            let l = Layout::from_xy(&coords).unwrap();
            let m = measure(&g, &l);
            let moved = l.map(|p| p.rotate(rot) + Vec2::new(shift.0, shift.1));
            let mm = measure(&g, &moved);
            prop_assert_eq!(m.crossings, mm.crossings);
            prop_assert!((m.angle_mean - mm.angle_mean).abs() < 1e-9);
            prop_assert!((m.angle_stddev - mm.angle_stddev).abs() < 1e-7);
            prop_assert!((m.edge_len_mean - mm.edge_len_mean).abs() < 1e-9);
            prop_assert!((m.edge_len_stddev - mm.edge_len_stddev).abs() < 1e-9);
            prop_assert!((m.angular_resolution - mm.angular_resolution).abs() < 1e-9);

            let scaled = measure(&g, &l.map(|p| scale * p));
            prop_assert_eq!(m.crossings, scaled.crossings);
            prop_assert!((scale * m.edge_len_mean - scaled.edge_len_mean).abs() < 1e-9 * scale.max(1.0));
            prop_assert!((m.angle_mean - scaled.angle_mean).abs() < 1e-9);
        }

        #[test]
        fn metrics_ignore_vertex_numbering(coords in k4_variant_layout(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
            let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)];
            let g = Graph::new(6, edges).unwrap();
            let l = Layout::from_xy(&coords).unwrap();
            let pg = Graph::new(6, edges.iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
            let mut pc = vec![(0.0, 0.0); 6];
            for (v, &c) in coords.iter().enumerate() {
                pc[perm[v]] = c;
            }
            let pl = Layout::from_xy(&pc).unwrap();
            let (a, b) = (measure(&g, &l), measure(&pg, &pl));
            prop_assert_eq!(a.crossings, b.crossings);
            prop_assert!((a.angle_mean - b.angle_mean).abs() < 1e-9);
            prop_assert!((a.edge_len_mean - b.edge_len_mean).abs() < 1e-12);
            prop_assert_eq!(a.angular_resolution, b.angular_resolution);
        }
    }
}
