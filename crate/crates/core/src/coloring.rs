//! Edge colorings and the two explicit colorings of the extremal families.
//!
//! The ring family gets `k + 2` colors: ring and "vertical" edges use
//! `1..=k`, the two diagonal classes get `k + 1` and `k + 2`. The strip
//! family gets six colors.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::constructions::LabeledTriangulation;
use crate::graph::{Edge, Label, PlanarTriangulation};

/// Color id, starting at 1.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("graph does not carry {0} labels")]
    MissingLabels(&'static str),
    #[error("edge {0} does not fit the family's edge classes")]
    NotInFamily(Edge),
    #[error("edge {0} has no color")]
    PartialColoring(Edge),
    #[error("colored pair {0} is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("color {color} on edge {edge} is outside 1..={palette}")]
    ColorOutOfRange {
        edge: Edge,
        color: Color,
        palette: Color,
    },
}

/// Mapping from edges to colors with a declared palette `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeColoring {
    palette: Color,
    colors: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn new(palette: Color) -> Self {
        EdgeColoring {
            palette,
            colors: BTreeMap::new(),
        }
    }

    /// Colors `graph`'s edges from a dense per-edge-id vector.
    pub fn from_dense(graph: &PlanarTriangulation, palette: Color, dense: &[Color]) -> Self {
        assert_eq!(dense.len(), graph.edge_count());
        let colors = graph
            .edges()
            .iter()
            .copied()
            .zip(dense.iter().copied())
            .collect();
        EdgeColoring { palette, colors }
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn set(&mut self, edge: Edge, color: Color) {
        self.colors.insert(edge, color);
    }

    pub fn get(&self, edge: &Edge) -> Option<Color> {
        self.colors.get(edge).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// `(edge, color)` pairs in canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used: Vec<Color> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Checks the coloring is total on `graph`, mentions no foreign pairs,
    /// and stays inside the palette; returns colors indexed by edge id.
    pub fn dense(&self, graph: &PlanarTriangulation) -> Result<Vec<Color>, ColoringError> {
        let mut dense = vec![0; graph.edge_count()];
        for (&edge, &color) in &self.colors {
            let id = graph
                .edge_id(edge.low(), edge.high())
                .ok_or(ColoringError::UnknownEdge(edge))?;
            if color == 0 || color > self.palette {
                return Err(ColoringError::ColorOutOfRange {
                    edge,
                    color,
                    palette: self.palette,
                });
            }
            dense[id] = color;
        }
        if let Some(id) = dense.iter().position(|&c| c == 0) {
            return Err(ColoringError::PartialColoring(graph.edge(id)));
        }
        Ok(dense)
    }
}

/// The `(k + 2)`-coloring of the ring family.
///
/// Ring edge `v[i,t] v[i,t+1]` gets `t`; the edge `v[i-1,j] v[i,j]` between
/// consecutive rows (hubs count as rows `0` and `k - 2`) gets `j + i`
/// reduced into `1..=k`; diagonal `v[i,j] v[i+1,j-1]` gets `k + 1` for odd
/// `i` and `k + 2` for even `i`.
pub fn sigma_hk(graph: &LabeledTriangulation) -> Result<EdgeColoring, ColoringError> {
    const FAMILY: &str = "ring-family";
    let g = graph.graph();
    let n = g.vertex_count();
    let mut k = 0;
    for v in g.vertices() {
        match graph.label(v) {
            Some(Label::Ring { col, .. }) => k = k.max(col),
            Some(Label::Hub0) | Some(Label::HubTop) => {}
            _ => return Err(ColoringError::MissingLabels(FAMILY)),
        }
    }
    if k < 5
        || n != (k - 3) * k + 2
        || graph.vertex(Label::Hub0).is_none()
        || graph.vertex(Label::HubTop).is_none()
    {
        return Err(ColoringError::MissingLabels(FAMILY));
    }
    let rows = k - 3;
    let wrap = |x: usize| (x + k - 1) % k + 1;
    // (row, column) with hubs at rows 0 and k - 2
    let place = |l: Label| match l {
        Label::Hub0 => Ok((0, 0)),
        Label::HubTop => Ok((k - 2, 0)),
        Label::Ring { row, col } if row <= rows && col <= k => Ok((row, col)),
        _ => Err(ColoringError::MissingLabels(FAMILY)),
    };

    let mut coloring = EdgeColoring::new((k + 2) as Color);
    for &edge in g.edges() {
        let (a, b) = edge.endpoints();
        let (mut lo, mut hi) = (
            place(graph.label(a).unwrap())?,
            place(graph.label(b).unwrap())?,
        );
        if lo.0 > hi.0 {
            std::mem::swap(&mut lo, &mut hi);
        }
        let not_in_family = ColoringError::NotInFamily(edge);
        let color = if lo.0 == hi.0 && lo.0 >= 1 && lo.0 <= rows {
            if hi.1 == wrap(lo.1 + 1) {
                lo.1
            } else if lo.1 == wrap(hi.1 + 1) {
                hi.1
            } else {
                return Err(not_in_family);
            }
        } else if hi.0 == lo.0 + 1 {
            let upper_row = hi.0;
            if lo.0 == 0 {
                wrap(hi.1 + upper_row)
            } else if hi.0 == k - 2 || hi.1 == lo.1 {
                wrap(lo.1 + upper_row)
            } else if hi.1 == wrap(lo.1 + k - 1) {
                if lo.0 % 2 == 1 {
                    k + 1
                } else {
                    k + 2
                }
            } else {
                return Err(not_in_family);
            }
        } else {
            return Err(not_in_family);
        };
        coloring.set(edge, color as Color);
    }
    Ok(coloring)
}

/// The six-coloring of the strip family.
///
/// Path edges `u_i u_{i+1}` and `v_i v_{i+1}` get 1 (odd `i`) or 2 (even
/// `i`); `u_i v_{i+1}` and `v_i u_{i+1}` get 3 (odd) or 4 (even); `u_i v_i`
/// gets 5 and `u_i v_{i+2}` gets 6. The apex `u_0` counts as index 0.
pub fn c_fn(graph: &LabeledTriangulation) -> Result<EdgeColoring, ColoringError> {
    const FAMILY: &str = "strip-family";
    let g = graph.graph();
    if g.vertices()
        .any(|v| !matches!(graph.label(v), Some(Label::U(_)) | Some(Label::V(_))))
    {
        return Err(ColoringError::MissingLabels(FAMILY));
    }
    let parity = |i: usize, odd: Color, even: Color| if i % 2 == 1 { odd } else { even };
    let mut coloring = EdgeColoring::new(6);
    for &edge in g.edges() {
        let (a, b) = edge.endpoints();
        let color = match (graph.label(a).unwrap(), graph.label(b).unwrap()) {
            (Label::U(i), Label::U(j)) | (Label::V(i), Label::V(j)) if i.abs_diff(j) == 1 => {
                parity(i.min(j), 1, 2)
            }
            (Label::U(i), Label::V(j)) | (Label::V(j), Label::U(i)) => match j as i64 - i as i64 {
                0 => 5,
                1 => parity(i, 3, 4),
                -1 => parity(j, 3, 4),
                2 => 6,
                _ => return Err(ColoringError::NotInFamily(edge)),
            },
            _ => return Err(ColoringError::NotInFamily(edge)),
        };
        coloring.set(edge, color);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_fixture, build_fn, build_hk, Fixture, FnParams, HkParams};

    fn color_of(g: &LabeledTriangulation, col: &EdgeColoring, a: Label, b: Label) -> Color {
        let e = Edge::new(g.vertex(a).unwrap(), g.vertex(b).unwrap()).unwrap();
        col.get(&e).unwrap()
    }

    fn ring(row: usize, col: usize) -> Label {
        Label::Ring { row, col }
    }

    #[test]
    fn sigma_k5_values() {
        let h = build_hk(HkParams::new(5).unwrap()).unwrap();
        let s = sigma_hk(&h).unwrap();
        assert_eq!(s.palette(), 7);
        assert_eq!(color_of(&h, &s, Label::Hub0, ring(1, 1)), 2);
        assert_eq!(color_of(&h, &s, ring(1, 3), ring(2, 2)), 6);
        assert_eq!(color_of(&h, &s, ring(2, 5), ring(2, 1)), 5);
        // the only diagonal row is odd, so b never appears
        assert_eq!(s.colors_used(), 6);
    }

    #[test]
    fn sigma_k7_values() {
        let h = build_hk(HkParams::new(7).unwrap()).unwrap();
        let s = sigma_hk(&h).unwrap();
        assert_eq!(color_of(&h, &s, ring(2, 4), ring(3, 4)), 7);
        // an even-row diagonal gets b
        assert_eq!(color_of(&h, &s, ring(2, 1), ring(3, 7)), 9);
        // top hub edges: v[k-3,j] v[k-2] gets j + k - 2
        assert_eq!(color_of(&h, &s, ring(4, 1), Label::HubTop), 6);
        // around v[i,j] for 2 <= i <= k-4 the colors are j-1, j, i+j, i+j+1, a, b
        let v = h.vertex(ring(3, 2)).unwrap();
        let mut around: Vec<Color> = h
            .graph()
            .neighbors(v)
            .map(|w| s.get(&Edge::new(v, w).unwrap()).unwrap())
            .collect();
        around.sort_unstable();
        assert_eq!(around, vec![1, 2, 5, 6, 8, 9]);
    }

    #[test]
    fn ring_edges_rainbow_on_k_colors() {
        let h = build_hk(HkParams::new(8).unwrap()).unwrap();
        let s = sigma_hk(&h).unwrap();
        for row in 1..=5 {
            for t in 1..=8 {
                let next = t % 8 + 1;
                assert_eq!(color_of(&h, &s, ring(row, t), ring(row, next)), t as Color);
            }
        }
    }

    #[test]
    fn strip_values() {
        let f = build_fn(FnParams::new(10).unwrap()).unwrap();
        let c = c_fn(&f).unwrap();
        assert_eq!(color_of(&f, &c, Label::U(3), Label::U(4)), 1);
        assert_eq!(color_of(&f, &c, Label::V(2), Label::V(3)), 2);
        assert_eq!(color_of(&f, &c, Label::U(4), Label::V(4)), 5);
        assert_eq!(color_of(&f, &c, Label::U(2), Label::V(4)), 6);
        assert_eq!(color_of(&f, &c, Label::U(1), Label::V(2)), 3);
        assert_eq!(color_of(&f, &c, Label::V(2), Label::U(3)), 4);
    }

    #[test]
    fn strip_apex_colors() {
        let f = build_fn(FnParams::new(11).unwrap()).unwrap();
        let c = c_fn(&f).unwrap();
        assert_eq!(color_of(&f, &c, Label::U(0), Label::U(1)), 2);
        assert_eq!(color_of(&f, &c, Label::U(0), Label::V(1)), 4);
        assert_eq!(color_of(&f, &c, Label::U(0), Label::V(2)), 6);
        let v2 = f.vertex(Label::V(2)).unwrap();
        let mut around: Vec<Color> = f
            .graph()
            .neighbors(v2)
            .map(|w| c.get(&Edge::new(v2, w).unwrap()).unwrap())
            .collect();
        around.sort_unstable();
        assert_eq!(around, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn wrong_family_is_rejected() {
        let oct = build_fixture(Fixture::Octahedron);
        assert_eq!(
            sigma_hk(&oct),
            Err(ColoringError::MissingLabels("ring-family"))
        );
        assert_eq!(
            c_fn(&oct),
            Err(ColoringError::MissingLabels("strip-family"))
        );
        let f = build_fn(FnParams::new(8).unwrap()).unwrap();
        assert!(sigma_hk(&f).is_err());
        let h = build_hk(HkParams::new(5).unwrap()).unwrap();
        assert!(c_fn(&h).is_err());
    }

    #[test]
    fn dense_validation() {
        let g = build_fixture(Fixture::K4).into_graph();
        let mut col = EdgeColoring::new(3);
        for (i, &e) in g.edges().iter().enumerate().skip(1) {
            col.set(e, (i % 3 + 1) as Color);
        }
        assert_eq!(
            col.dense(&g),
            Err(ColoringError::PartialColoring(g.edge(0)))
        );
        col.set(g.edge(0), 4);
        assert!(matches!(
            col.dense(&g),
            Err(ColoringError::ColorOutOfRange { color: 4, .. })
        ));
        col.set(g.edge(0), 1);
        assert_eq!(col.dense(&g).unwrap().len(), 6);
        let stacked = build_fixture(Fixture::StackedK4).into_graph();
        let mut extra = col.clone();
        extra.set(Edge::new(1, 4).unwrap(), 1);
        assert!(matches!(
            extra.dense(&stacked),
            Err(ColoringError::PartialColoring(_))
        ));
        assert!(matches!(
            extra.dense(&g),
            Err(ColoringError::UnknownEdge(_))
        ));
    }
}
