use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    enumerate_cycles, is_separating_cycle, Cycle, GraphError, PlanarTriangulation, VertexId,
};

/// Connectivity values are reported up to this cap.
pub const MAX_CONNECTIVITY_CLASS: usize = 5;

/// Default largest order on which the brute-force cut search runs.
pub const DEFAULT_ORACLE_BOUND: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityOptions {
    pub run_oracle: bool,
    pub oracle_bound: usize,
}

impl Default for ConnectivityOptions {
    fn default() -> Self {
        ConnectivityOptions {
            run_oracle: true,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

/// Vertex connectivity (capped at 5) with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub class: usize,
    pub min_degree: usize,
    pub structural: usize,
    pub oracle: Option<usize>,
    pub separating_triangle: Option<Cycle>,
    pub separating_quadrilateral: Option<Cycle>,
    pub minimum_cut: Option<Vec<VertexId>>,
}

/// Vertex connectivity of a triangulation on at least five vertices.
///
/// The structural route uses that a triangulation is 4-connected iff it has
/// no separating triangle and 5-connected iff it additionally has no
/// separating 4-cycle, capped at the minimum degree. When enabled and the
/// graph is small enough, the brute-force cut search runs as well and the
/// two answers must agree.
pub fn connectivity_class(
    graph: &PlanarTriangulation,
    options: &ConnectivityOptions,
) -> Result<ConnectivityReport, GraphError> {
    let n = graph.vertex_count();
    if n < 5 {
        return Err(GraphError::TooSmall {
            needed: 5,
            found: n,
        });
    }
    let min_degree = graph.min_degree();
    let first_separating = |len| -> Result<Option<Cycle>, GraphError> {
        for c in enumerate_cycles(graph, len) {
            if is_separating_cycle(graph, &c)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    };
    let separating_triangle = first_separating(3)?;
    let separating_quadrilateral = if separating_triangle.is_none() {
        first_separating(4)?
    } else {
        None
    };
    let by_cycles = match (&separating_triangle, &separating_quadrilateral) {
        (Some(_), _) => 3,
        (None, Some(_)) => 4,
        (None, None) => MAX_CONNECTIVITY_CLASS,
    };
    let structural = by_cycles.min(min_degree);

    let mut report = ConnectivityReport {
        class: structural,
        min_degree,
        structural,
        oracle: None,
        separating_triangle,
        separating_quadrilateral,
        minimum_cut: None,
    };
    if options.run_oracle && n <= options.oracle_bound {
        let (oracle, cut) = brute_force_connectivity(graph, options.oracle_bound)?;
        if oracle != structural {
            return Err(GraphError::ConnectivityMismatch { structural, oracle });
        }
        report.oracle = Some(oracle);
        report.minimum_cut = cut;
    }
    Ok(report)
}

/// Smallest disconnecting vertex set, searched by size up to 5.
///
/// Returns the connectivity (capped at 5) and, when one of size at most 5
/// exists, a minimum cut. Sizes below the minimum degree are scanned
/// exhaustively in lexicographic order; at the minimum degree the
/// neighborhood of a minimum-degree vertex is tried first, since it is a cut
/// of that size whenever it does not cover the rest of the graph.
pub fn brute_force_connectivity(
    graph: &PlanarTriangulation,
    bound: usize,
) -> Result<(usize, Option<Vec<VertexId>>), GraphError> {
    let n = graph.vertex_count();
    if n > bound {
        return Err(GraphError::TooLargeForOracle { n, bound });
    }
    let min_degree = graph.min_degree();
    for size in 1..=MAX_CONNECTIVITY_CLASS.min(n.saturating_sub(2)) {
        if size == min_degree {
            let v = graph
                .vertices()
                .find(|&v| graph.degree(v) == min_degree)
                .unwrap();
            let mut cut: Vec<VertexId> = graph.neighbors(v).collect();
            cut.sort_unstable();
            if !graph.is_connected_without(&cut) {
                return Ok((size, Some(cut)));
            }
        }
        if let Some(cut) = find_cut_of_size(graph, size) {
            return Ok((size, Some(cut)));
        }
    }
    Ok((MAX_CONNECTIVITY_CLASS, None))
}

fn find_cut_of_size(graph: &PlanarTriangulation, size: usize) -> Option<Vec<VertexId>> {
    let n = graph.vertex_count();
    let per_first: Vec<Option<Vec<VertexId>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            (first + 1..n).combinations(size - 1).find_map(|rest| {
                let mut cut = Vec::with_capacity(size);
                cut.push(first);
                cut.extend(rest);
                (!graph.is_connected_without(&cut)).then_some(cut)
            })
        })
        .collect();
    per_first.into_iter().flatten().next()
}
