//! Embedded planar triangulations.
//!
//! A [`PlanarTriangulation`] is a simple graph together with a rotation
//! system: for every vertex, the cyclic order of its neighbors. Faces are
//! recovered from the rotation system by a fixed tracing rule (see
//! [`PlanarTriangulation::trace_faces`]); a graph is accepted only if the
//! traced faces certify a triangulation of the sphere.

mod connectivity;
mod cycle;
mod label;

pub use connectivity::{
    brute_force_connectivity, connectivity_class, ConnectivityOptions, ConnectivityReport,
    DEFAULT_ORACLE_BOUND, MAX_CONNECTIVITY_CLASS,
};
pub use cycle::{enumerate_cycles, is_separating_cycle, Cycle};
pub use label::{Label, LabelParseError};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Undirected edge stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Builds the canonical edge `{a, b}`. Returns `None` for a loop.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn low(&self) -> VertexId {
        self.0
    }

    pub fn high(&self) -> VertexId {
        self.1
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// True if the two edges share exactly one endpoint.
    pub fn is_adjacent_to(&self, other: &Edge) -> bool {
        self != other
            && (self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Which structural requirement a rejected graph violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invariant {
    TooFewVertices(usize),
    RotationCount {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        vertex: VertexId,
        neighbor: usize,
    },
    SelfLoop(VertexId),
    RepeatedNeighbor {
        vertex: VertexId,
        neighbor: VertexId,
    },
    AsymmetricAdjacency {
        from: VertexId,
        to: VertexId,
    },
    Disconnected,
    EdgeCount {
        expected: usize,
        found: usize,
    },
    FaceCount {
        expected: usize,
        found: usize,
    },
    NonTriangularFace {
        face: Vec<VertexId>,
    },
    NonManifold(String),
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::TooFewVertices(n) => write!(f, "need at least 3 vertices, got {n}"),
            Invariant::RotationCount { expected, found } => {
                write!(f, "expected {expected} rotation lists, found {found}")
            }
            Invariant::VertexOutOfRange { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists out-of-range neighbor {neighbor}")
            }
            Invariant::SelfLoop(v) => write!(f, "vertex {v} is its own neighbor"),
            Invariant::RepeatedNeighbor { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists neighbor {neighbor} twice")
            }
            Invariant::AsymmetricAdjacency { from, to } => {
                write!(
                    f,
                    "{to} appears in the rotation of {from} but not vice versa"
                )
            }
            Invariant::Disconnected => write!(f, "graph is not connected"),
            Invariant::EdgeCount { expected, found } => {
                write!(f, "edge count {found} differs from 3n-6 = {expected}")
            }
            Invariant::FaceCount { expected, found } => {
                write!(f, "traced {found} faces, expected 2n-4 = {expected}")
            }
            Invariant::NonTriangularFace { face } => write!(f, "face {face:?} is not a triangle"),
            Invariant::NonManifold(msg) => write!(f, "face set is not a sphere: {msg}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("not a triangulation: {0}")]
    NotATriangulation(Invariant),
    #[error(
        "inconsistent rotation system: dart {from}->{to} reached twice before its walk closed"
    )]
    InconsistentRotation { from: VertexId, to: VertexId },
    #[error("cycle covers every vertex of the graph")]
    CycleCoversGraph,
    #[error("sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<VertexId>),
    #[error("operation needs at least {needed} vertices, graph has {found}")]
    TooSmall { needed: usize, found: usize },
    #[error("brute-force connectivity limited to n <= {bound}, graph has {n} vertices")]
    TooLargeForOracle { n: usize, bound: usize },
    #[error("connectivity routes disagree: structural {structural}, brute force {oracle}")]
    ConnectivityMismatch { structural: usize, oracle: usize },
}

/// A simple planar triangulation with a combinatorial embedding.
///
/// Immutable once built; every constructor validates the full set of
/// triangulation invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarTriangulation {
    rotations: Vec<Vec<VertexId>>,
    /// Sorted `(neighbor, edge id)` pairs per vertex.
    adjacency: Vec<Vec<(VertexId, usize)>>,
    edges: Vec<Edge>,
}

impl PlanarTriangulation {
    /// Builds a triangulation from explicit rotation lists.
    ///
    /// `rotations[v]` lists the neighbors of `v` in cyclic order. All rotation
    /// lists must share one orientation for the face trace to certify genus 0.
    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        let bad = |inv| Err(GraphError::NotATriangulation(inv));
        if n < 3 {
            return bad(Invariant::TooFewVertices(n));
        }
        let mut adjacency: Vec<Vec<(VertexId, usize)>> = vec![Vec::new(); n];
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return bad(Invariant::VertexOutOfRange {
                        vertex: v,
                        neighbor: w,
                    });
                }
                if w == v {
                    return bad(Invariant::SelfLoop(v));
                }
                adjacency[v].push((w, usize::MAX));
            }
            adjacency[v].sort_unstable();
            if let Some(pair) = adjacency[v].windows(2).find(|p| p[0].0 == p[1].0) {
                return bad(Invariant::RepeatedNeighbor {
                    vertex: v,
                    neighbor: pair[0].0,
                });
            }
        }
        for v in 0..n {
            for &(w, _) in &adjacency[v] {
                if adjacency[w].binary_search_by_key(&v, |&(x, _)| x).is_err() {
                    return bad(Invariant::AsymmetricAdjacency { from: v, to: w });
                }
            }
        }

        let mut edges = Vec::new();
        for (v, nbrs) in adjacency.iter().enumerate() {
            for &(w, _) in nbrs {
                if v < w {
                    edges.push(Edge(v, w));
                }
            }
        }
        edges.sort_unstable();
        for (id, e) in edges.iter().enumerate() {
            let (a, b) = e.endpoints();
            let ia = adjacency[a].binary_search_by_key(&b, |&(x, _)| x).unwrap();
            adjacency[a][ia].1 = id;
            let ib = adjacency[b].binary_search_by_key(&a, |&(x, _)| x).unwrap();
            adjacency[b][ib].1 = id;
        }

        let graph = PlanarTriangulation {
            rotations,
            adjacency,
            edges,
        };
        if !graph.is_connected_without(&[]) {
            return bad(Invariant::Disconnected);
        }
        let expected = 3 * n - 6;
        if graph.edge_count() != expected {
            return bad(Invariant::EdgeCount {
                expected,
                found: graph.edge_count(),
            });
        }
        let faces = graph.trace_faces()?;
        if let Some(face) = faces.iter().find(|f| !is_triangle(f)) {
            return bad(Invariant::NonTriangularFace { face: face.clone() });
        }
        if faces.len() != 2 * n - 4 {
            return bad(Invariant::FaceCount {
                expected: 2 * n - 4,
                found: faces.len(),
            });
        }
        Ok(graph)
    }

    /// Builds a triangulation from its list of triangular faces.
    ///
    /// Face orientations are irrelevant on input; they are made coherent by a
    /// breadth-first sweep across shared edges, and the rotation at each
    /// vertex is read off by chaining the faces around it.
    pub fn from_triangles(n: usize, triangles: &[[VertexId; 3]]) -> Result<Self, GraphError> {
        let fail = |msg: String| Err(GraphError::NotATriangulation(Invariant::NonManifold(msg)));
        if n < 3 {
            return Err(GraphError::NotATriangulation(Invariant::TooFewVertices(n)));
        }
        let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
        for (fi, t) in triangles.iter().enumerate() {
            if t.iter().any(|&v| v >= n) || !is_triangle(t) {
                return fail(format!("bad triangle {t:?}"));
            }
            for k in 0..3 {
                by_edge
                    .entry(Edge::new(t[k], t[(k + 1) % 3]).unwrap())
                    .or_default()
                    .push(fi);
            }
        }
        if let Some((e, fs)) = by_edge.iter().find(|(_, fs)| fs.len() != 2) {
            return fail(format!("edge {e} lies on {} faces", fs.len()));
        }

        let mut oriented: Vec<Option<[VertexId; 3]>> = vec![None; triangles.len()];
        for root in 0..triangles.len() {
            if oriented[root].is_some() {
                continue;
            }
            oriented[root] = Some(triangles[root]);
            let mut queue = VecDeque::from([root]);
            while let Some(fi) = queue.pop_front() {
                let t = oriented[fi].unwrap();
                for k in 0..3 {
                    let (a, b) = (t[k], t[(k + 1) % 3]);
                    for &gi in &by_edge[&Edge::new(a, b).unwrap()] {
                        if gi == fi {
                            continue;
                        }
                        let g = triangles[gi];
                        // the neighbor must traverse the shared edge as b -> a
                        let want = if has_dart(&g, b, a) {
                            g
                        } else {
                            [g[0], g[2], g[1]]
                        };
                        match oriented[gi] {
                            None => {
                                oriented[gi] = Some(want);
                                queue.push_back(gi);
                            }
                            Some(h) if !has_dart(&h, b, a) => {
                                return fail("face set is not orientable".into())
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
        }

        let mut succ: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); n];
        for t in oriented.iter().flatten() {
            for k in 0..3 {
                let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
                if succ[a].insert(b, c).is_some() {
                    return fail(format!("dart {a}->{b} used by two faces"));
                }
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, map) in succ.iter().enumerate() {
            let Some(&start) = map.keys().min() else {
                return fail(format!("vertex {v} lies on no face"));
            };
            let mut rot = vec![start];
            let mut cur = map[&start];
            while cur != start {
                if rot.len() > map.len() {
                    return fail(format!("faces around {v} do not close"));
                }
                rot.push(cur);
                cur = match map.get(&cur) {
                    Some(&next) => next,
                    None => return fail(format!("faces around {v} do not close")),
                };
            }
            if rot.len() != map.len() {
                return fail(format!("vertex {v} is pinched"));
            }
            rotations.push(rot);
        }
        Self::from_rotations(rotations)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Edges in canonical (lexicographic) order; positions are edge ids.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let nbrs = self.adjacency.get(a)?;
        nbrs.binary_search_by_key(&b, |&(x, _)| x)
            .ok()
            .map(|i| nbrs[i].1)
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// Neighbors of `v` in cyclic embedding order.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Sorted vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Traces the faces of the embedding.
    ///
    /// Rule: after arriving at `w` from `v`, leave along the neighbor that
    /// *precedes* `v` in the rotation of `w`. Every directed edge lies on
    /// exactly one returned walk. Walks start at their smallest unvisited
    /// dart in canonical order.
    pub fn trace_faces(&self) -> Result<Vec<Vec<VertexId>>, GraphError> {
        let pos: Vec<HashMap<VertexId, usize>> = self
            .rotations
            .iter()
            .map(|rot| rot.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut visited: HashMap<(VertexId, VertexId), bool> = HashMap::new();
        let mut faces = Vec::new();
        for v in self.vertices() {
            for &w in &self.rotations[v] {
                if visited.contains_key(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    if visited.insert((a, b), true).is_some() {
                        return Err(GraphError::InconsistentRotation { from: a, to: b });
                    }
                    face.push(a);
                    let rot = &self.rotations[b];
                    let Some(&i) = pos[b].get(&a) else {
                        return Err(GraphError::InconsistentRotation { from: a, to: b });
                    };
                    let next = rot[(i + rot.len() - 1) % rot.len()];
                    (a, b) = (b, next);
                    if (a, b) == (v, w) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// True if removing `removed` leaves a nonempty connected graph.
    pub(crate) fn is_connected_without(&self, removed: &[VertexId]) -> bool {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let Some(start) = (0..n).find(|&v| !gone[v]) else {
            return false;
        };
        let remaining = n - gone.iter().filter(|&&g| g).count();
        let mut seen = gone;
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }
}

fn is_triangle(face: &[VertexId]) -> bool {
    face.len() == 3 && face[0] != face[1] && face[1] != face[2] && face[0] != face[2]
}

fn has_dart(t: &[VertexId; 3], a: VertexId, b: VertexId) -> bool {
    (0..3).any(|k| t[k] == a && t[(k + 1) % 3] == b)
}
