use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{GraphError, PlanarTriangulation, VertexId};

/// A simple cycle in canonical form.
///
/// The minimum vertex comes first, and of the two traversal directions the
/// one with the smaller second vertex is kept. Two `Cycle`s compare equal
/// iff they denote the same cyclic sequence up to rotation and reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<VertexId>);

impl Cycle {
    /// Canonicalizes a closed walk given as its vertex sequence (without
    /// repeating the first vertex). Returns `None` for fewer than three
    /// vertices or repeated vertices. Adjacency is not checked here.
    pub fn new(mut vertices: Vec<VertexId>) -> Option<Self> {
        let len = vertices.len();
        if len < 3 {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let min_pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .unwrap()
            .0;
        vertices.rotate_left(min_pos);
        if vertices[len - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Some(Cycle(vertices))
    }

    /// Like [`Cycle::new`], but also requires consecutive vertices to be
    /// adjacent in `graph`.
    pub fn in_graph(
        graph: &PlanarTriangulation,
        vertices: Vec<VertexId>,
    ) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let closed = vertices.len() >= 3
            && vertices.iter().all(|&v| v < n)
            && (0..vertices.len())
                .all(|i| graph.are_adjacent(vertices[i], vertices[(i + 1) % vertices.len()]));
        match Cycle::new(vertices.clone()) {
            Some(c) if closed => Ok(c),
            _ => Err(GraphError::NotACycle(vertices)),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn vertex_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let len = self.0.len();
        (0..len).map(move |i| (self.0[i], self.0[(i + 1) % len]))
    }

    /// Edge ids of the cycle in traversal order. Panics if a pair is not an
    /// edge of `graph`.
    pub fn edge_ids(&self, graph: &PlanarTriangulation) -> Vec<usize> {
        self.vertex_pairs()
            .map(|(a, b)| graph.edge_id(a, b).expect("cycle pair is not an edge"))
            .collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Every simple cycle of exactly `length` vertices, each once, sorted.
///
/// Rooted depth-first search from each start vertex `s`, restricted to
/// vertices above `s`; a closed path is kept only when its second vertex is
/// below its last, which selects the canonical orientation. Start vertices
/// are processed in parallel and concatenated in order.
pub fn enumerate_cycles(graph: &PlanarTriangulation, length: usize) -> Vec<Cycle> {
    let n = graph.vertex_count();
    if length < 3 || length > n {
        return Vec::new();
    }
    let per_start: Vec<Vec<Cycle>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            let mut path = vec![s];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            extend(graph, length, &mut path, &mut on_path, &mut out);
            out
        })
        .collect();
    per_start.into_iter().flatten().collect()
}

fn extend(
    graph: &PlanarTriangulation,
    length: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == length {
        if path[1] < last && graph.are_adjacent(last, s) {
            out.push(Cycle(path.clone()));
        }
        return;
    }
    for w in graph.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        extend(graph, length, path, on_path, out);
        path.pop();
        on_path[w] = false;
    }
}

/// True iff deleting the vertices of `cycle` disconnects the graph.
pub fn is_separating_cycle(graph: &PlanarTriangulation, cycle: &Cycle) -> Result<bool, GraphError> {
    let n = graph.vertex_count();
    if cycle.vertices().iter().any(|&v| v >= n)
        || !cycle.vertex_pairs().all(|(a, b)| graph.are_adjacent(a, b))
    {
        return Err(GraphError::NotACycle(cycle.vertices().to_vec()));
    }
    if cycle.len() >= n {
        return Err(GraphError::CycleCoversGraph);
    }
    Ok(!graph.is_connected_without(cycle.vertices()))
}
