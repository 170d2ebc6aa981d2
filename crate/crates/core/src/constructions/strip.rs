//! The strip family: two paths `u1..up` and `v1..vp` joined by two zigzags,
//! plus an apex `u0` in the face `u1 v1 v2` when the order is odd.
//!
//! Vertex layout for even `n`: `u_i` is `i - 1`, `v_i` is `p + i - 1`.
//! For odd `n`: `u_0` is 0, `u_i` is `i`, `v_i` is `p + i`.

use super::{ConstructionError, LabeledTriangulation};
use crate::graph::{Label, PlanarTriangulation, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FnParams {
    n: usize,
}

impl FnParams {
    pub fn new(n: usize) -> Result<Self, ConstructionError> {
        if n < 3 {
            return Err(ConstructionError::InvalidN(n));
        }
        Ok(FnParams { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `floor(n / 2)`.
    pub fn p(&self) -> usize {
        self.n / 2
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn u(&self, i: usize) -> VertexId {
        if self.is_odd() {
            i
        } else {
            assert!(i >= 1, "u0 exists only for odd orders");
            i - 1
        }
    }

    pub fn v(&self, i: usize) -> VertexId {
        self.p() + self.u(i)
    }

    pub fn label_of(&self, vertex: VertexId) -> Label {
        let first_v = self.v(1);
        if vertex >= first_v {
            Label::V(vertex - first_v + 1)
        } else {
            Label::U(vertex + usize::from(!self.is_odd()))
        }
    }
}

pub fn build_fn(params: FnParams) -> Result<LabeledTriangulation, ConstructionError> {
    let p = params.p();
    let (u, v) = (|i| params.u(i), |i| params.v(i));
    let mut faces: Vec<[VertexId; 3]> = Vec::new();
    if params.n() == 3 {
        faces.push([u(0), u(1), v(1)]);
        faces.push([u(0), v(1), u(1)]);
    } else {
        // strip between the two paths along the first zigzag
        for i in 1..p {
            faces.push([u(i), v(i), u(i + 1)]);
            faces.push([v(i), v(i + 1), u(i + 1)]);
        }
        // the other side, triangulated by the second zigzag
        if params.is_odd() {
            faces.push([u(0), u(1), v(1)]);
            faces.push([u(0), v(1), v(2)]);
            faces.push([u(0), v(2), u(1)]);
        } else {
            faces.push([u(1), v(1), v(2)]);
        }
        for i in 1..p - 1 {
            faces.push([u(i), v(i + 1), v(i + 2)]);
            faces.push([u(i), u(i + 1), v(i + 2)]);
        }
        faces.push([u(p - 1), u(p), v(p)]);
    }
    let graph = PlanarTriangulation::from_triangles(params.n(), &faces)?;
    let labels = (0..params.n()).map(|x| Some(params.label_of(x))).collect();
    LabeledTriangulation::new(graph, labels)
}
