//! The ring family: `k - 3` concentric `k`-cycles between two hubs.
//!
//! Vertex layout: hub `v0` is index 0, ring vertex `v[i,j]` is
//! `1 + (i-1)k + (j-1)`, and the top hub is index `n - 1`.

use super::{ConstructionError, LabeledTriangulation};
use crate::graph::{Label, PlanarTriangulation, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HkParams {
    k: usize,
}

impl HkParams {
    pub fn new(k: usize) -> Result<Self, ConstructionError> {
        if k < 5 {
            return Err(ConstructionError::InvalidK(k));
        }
        Ok(HkParams { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of rings, `k - 3`.
    pub fn rows(&self) -> usize {
        self.k - 3
    }

    /// `k^2 - 3k + 2`.
    pub fn vertex_count(&self) -> usize {
        (self.k - 3) * self.k + 2
    }

    /// Maps any integer column into `1..=k`.
    pub fn wrap(&self, col: i64) -> usize {
        (col - 1).rem_euclid(self.k as i64) as usize + 1
    }

    pub fn ring(&self, row: usize, col: i64) -> VertexId {
        debug_assert!((1..=self.rows()).contains(&row));
        1 + (row - 1) * self.k + (self.wrap(col) - 1)
    }

    pub fn hub0(&self) -> VertexId {
        0
    }

    pub fn hub_top(&self) -> VertexId {
        self.vertex_count() - 1
    }

    pub fn label_of(&self, v: VertexId) -> Label {
        if v == 0 {
            Label::Hub0
        } else if v == self.hub_top() {
            Label::HubTop
        } else {
            Label::Ring {
                row: (v - 1) / self.k + 1,
                col: (v - 1) % self.k + 1,
            }
        }
    }
}

pub fn build_hk(params: HkParams) -> Result<LabeledTriangulation, ConstructionError> {
    let k = params.k() as i64;
    let rows = params.rows();
    let mut faces: Vec<[VertexId; 3]> = Vec::with_capacity(2 * (params.vertex_count() - 2));
    for j in 1..=k {
        faces.push([params.hub0(), params.ring(1, j), params.ring(1, j + 1)]);
        faces.push([
            params.hub_top(),
            params.ring(rows, j + 1),
            params.ring(rows, j),
        ]);
    }
    for i in 1..rows {
        for j in 1..=k {
            // v[i,j] v[i+1,j] v[i,j+1] uses the diagonal v[i,j+1] v[i+1,j]
            faces.push([
                params.ring(i, j),
                params.ring(i + 1, j),
                params.ring(i, j + 1),
            ]);
            faces.push([
                params.ring(i, j),
                params.ring(i + 1, j - 1),
                params.ring(i + 1, j),
            ]);
        }
    }
    let graph = PlanarTriangulation::from_triangles(params.vertex_count(), &faces)?;
    let labels = (0..params.vertex_count())
        .map(|v| Some(params.label_of(v)))
        .collect();
    LabeledTriangulation::new(graph, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use std::collections::BTreeSet;

    /// Edge set written out directly from the adjacency rules.
    fn rule_edges(p: HkParams) -> BTreeSet<Edge> {
        let k = p.k() as i64;
        let mut out = BTreeSet::new();
        let mut add = |a, b| {
            out.insert(Edge::new(a, b).unwrap());
        };
        for i in 1..=p.rows() {
            for j in 1..=k {
                add(p.ring(i, j), p.ring(i, j + 1));
            }
        }
        for i in 1..p.rows() {
            for j in 1..=k {
                add(p.ring(i, j), p.ring(i + 1, j));
                add(p.ring(i, j), p.ring(i + 1, j - 1));
            }
        }
        for j in 1..=k {
            add(p.hub0(), p.ring(1, j));
            add(p.hub_top(), p.ring(p.rows(), j));
        }
        out
    }

    #[test]
    fn edges_match_adjacency_rules() {
        for k in 5..=9 {
            let p = HkParams::new(k).unwrap();
            let h = build_hk(p).unwrap();
            let built: BTreeSet<Edge> = h.graph().edges().iter().copied().collect();
            assert_eq!(built, rule_edges(p), "k={k}");
        }
    }

    #[test]
    fn small_orders() {
        let h5 = build_hk(HkParams::new(5).unwrap()).unwrap();
        assert_eq!(
            (h5.graph().vertex_count(), h5.graph().edge_count()),
            (12, 30)
        );
        assert_eq!(h5.graph().degree_sequence(), vec![5; 12]);
        assert_eq!(h5.graph().trace_faces().unwrap().len(), 20);

        let h6 = build_hk(HkParams::new(6).unwrap()).unwrap();
        assert_eq!(
            (h6.graph().vertex_count(), h6.graph().edge_count()),
            (20, 54)
        );
        let degs = h6.graph().degree_sequence();
        assert_eq!(degs.iter().filter(|&&d| d == 5).count(), 12);
        assert_eq!(degs.iter().filter(|&&d| d == 6).count(), 8);
        assert_eq!(degs.iter().sum::<usize>(), 108);

        let h7 = build_hk(HkParams::new(7).unwrap()).unwrap();
        let degs = h7.graph().degree_sequence();
        assert_eq!(h7.graph().vertex_count(), 30);
        assert_eq!(degs.iter().filter(|&&d| d == 7).count(), 2);
        assert_eq!(degs.iter().filter(|&&d| d == 5).count(), 14);
        assert_eq!(degs.iter().filter(|&&d| d == 6).count(), 14);
        assert_eq!(degs.iter().sum::<usize>(), 2 * 84);
    }

    #[test]
    fn labels_and_wraparound() {
        let p = HkParams::new(6).unwrap();
        assert_eq!(p.wrap(0), 6);
        assert_eq!(p.wrap(7), 1);
        assert_eq!(p.wrap(-5), 1);
        let h = build_hk(p).unwrap();
        assert_eq!(h.vertex(Label::Hub0), Some(0));
        assert_eq!(h.vertex(Label::HubTop), Some(19));
        assert_eq!(h.vertex(Label::Ring { row: 2, col: 3 }), Some(9));
        assert_eq!(h.name(9), "v[2,3]");
    }

    #[test]
    fn invalid_k() {
        assert_eq!(HkParams::new(4), Err(ConstructionError::InvalidK(4)));
    }
}
