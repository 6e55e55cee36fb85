//! File formats: plain-text edge lists, layout JSON and SVG rendering.
//!
//! An edge list starts with a header line `n m`, followed by `m` lines
//! `u v` with zero-based vertex ids. Blank lines and lines starting with `#`
//! are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossings::find_crossings;
use crate::engine::RunResult;
use crate::graph::{Graph, GraphError, Layout, Point, Vec2};
use crate::params::LayoutParams;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("layout has {got} positions, graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), IoError> {
    let err = |msg: &str| IoError::Parse {
        line,
        msg: format!("{msg}: {text:?}"),
    };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(|| err("expected two integers"))?;
    let b = it.next().ok_or_else(|| err("expected two integers"))?;
    if it.next().is_some() {
        return Err(err("trailing data"));
    }
    let a = a.parse().map_err(|_| err("not a vertex id"))?;
    let b = b.parse().map_err(|_| err("not a vertex id"))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(IoError::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let edges = lines.map(|(i, l)| parse_pair(i, l)).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(IoError::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Run metadata stored alongside a computed layout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub iterations: u32,
    pub converged: bool,
}

/// On-disk layout: positions plus the seed and parameters that produced
/// them, when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutFile {
    pub n: usize,
    pub positions: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<LayoutParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run: Option<RunInfo>,
}

impl LayoutFile {
    pub fn from_layout(layout: &Layout) -> Self {
        LayoutFile {
            n: layout.len(),
            positions: layout.positions().iter().map(|p| [p.x, p.y]).collect(),
            seed: None,
            params: None,
            run: None,
        }
    }

    pub fn from_run(result: &RunResult, seed: u64, params: &LayoutParams) -> Self {
        LayoutFile {
            seed: Some(seed),
            params: Some(*params),
            run: Some(RunInfo {
                iterations: result.iterations,
                converged: result.converged,
            }),
            ..Self::from_layout(&result.final_layout)
        }
    }

    pub fn to_layout(&self) -> Result<Layout, IoError> {
        if self.positions.len() != self.n {
            return Err(IoError::SizeMismatch {
                expected: self.n,
                got: self.positions.len(),
            });
        }
        Ok(Layout::new(
            self.positions.iter().map(|&[x, y]| Vec2::new(x, y)).collect(),
        )?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("layout files serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Loads a layout and checks it has one position per vertex of `graph`.
pub fn layout_for(graph: &Graph, text: &str) -> Result<Layout, IoError> {
    let layout = LayoutFile::from_json(text)?.to_layout()?;
    if layout.len() != graph.vertex_count() {
        return Err(IoError::SizeMismatch {
            expected: graph.vertex_count(),
            got: layout.len(),
        });
    }
    Ok(layout)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Mark each crossing with a small red circle titled with its angle.
    pub mark_crossings: bool,
    /// Output width in pixels; the height follows the drawing's aspect.
    pub width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            mark_crossings: false,
            width: 600.0,
        }
    }
}

/// Renders the drawing as a standalone SVG document. The view box is the
/// bounding box of the vertices plus a 5% margin, with y pointing up.
pub fn render_svg(graph: &Graph, layout: &Layout, opts: &SvgOptions) -> Result<String, IoError> {
    layout.check_covers(graph)?;
    let pts = layout.positions();
    let (mut lo, mut hi) = (Vec2::new(0.0, 0.0), Vec2::new(0.0, 0.0));
    if let Some(&first) = pts.first() {
        (lo, hi) = (first, first);
        for p in pts {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let margin = 0.05 * span;
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let (x0, y0) = (lo.x - margin, -(hi.y + margin));
    let r = 0.012 * span;
    let stroke = 0.004 * span;
    // flip y so the drawing is not mirrored
    let at = |p: Point| (p.x, -p.y);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{x0} {y0} {w} {h}">"#,
        opts.width,
        (opts.width * h / w).round()
    );
    let _ = writeln!(out, r##"<g stroke="#555" stroke-width="{stroke}">"##);
    for &e in graph.edges() {
        let (a, b) = layout.segment(e);
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, r##"<g fill="#1f4e9c">"##);
    for &p in pts {
        let (cx, cy) = at(p);
        let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{r}"/>"#);
    }
    out.push_str("</g>\n");
    if opts.mark_crossings {
        let _ = writeln!(out, r##"<g fill="none" stroke="#d22" stroke-width="{stroke}">"##);
        for c in find_crossings(graph, layout) {
            let (cx, cy) = at(c.point);
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="{}"><title>{:.1} deg</title></circle>"#,
                r * 0.7,
                c.theta
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, [(3, 1), (0, 4), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "5 3\n0 4\n1 3\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n  2 0  \n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(IoError::Parse { .. })));
        assert!(matches!(
            parse_edge_list("2 1\n0 0\n"),
            Err(IoError::Graph(GraphError::SelfLoop(0, 0)))
        ));
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(IoError::Graph(_))));
        assert!(matches!(
            parse_edge_list("2 1\n0 1 7\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn layout_json_round_trip() {
        let l = Layout::from_xy(&[(0.1, -2.5), (1.0 / 3.0, 7e-12)]).unwrap();
        let mut f = LayoutFile::from_layout(&l);
        f.seed = Some(u64::MAX);
        f.params = Some(LayoutParams::high_quality());
        let back = LayoutFile::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_layout().unwrap(), l);
    }

    #[test]
    fn layout_json_is_validated() {
        assert!(matches!(
            LayoutFile::from_json(r#"{"n":2,"positions":[[0,0]]}"#)
                .unwrap()
                .to_layout(),
            Err(IoError::SizeMismatch { expected: 2, got: 1 })
        ));
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            layout_for(&g, r#"{"n":2,"positions":[[0,0],[1,1]]}"#),
            Err(IoError::SizeMismatch { expected: 3, got: 2 })
        ));
        assert!(matches!(LayoutFile::from_json("{"), Err(IoError::Json(_))));
    }

    #[test]
    fn svg_contains_every_element() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let l = Layout::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let opts = SvgOptions {
            mark_crossings: true,
            ..SvgOptions::default()
        };
        let svg = render_svg(&g, &l, &opts).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(svg.contains("90.0 deg"));
        assert!(svg.contains(r#"viewBox="-0.05 -1.05 1.1 1.1""#));
        let plain = render_svg(&g, &l, &SvgOptions::default()).unwrap();
        assert_eq!(plain.matches("<circle").count(), 4);
    }
}
