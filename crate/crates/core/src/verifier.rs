//! Certificates for colored triangulations.
//!
//! Rainbow checks enumerate cycles, not colorings: a depth-first search
//! from each start vertex extends a path only along edges whose color is
//! still unused on it, so non-rainbow branches are cut immediately.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, ColoringError, EdgeColoring};
use crate::graph::{
    connectivity_class, enumerate_cycles, is_separating_cycle, ConnectivityOptions,
    ConnectivityReport, Cycle, Edge, GraphError, PlanarTriangulation, VertexId,
};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("coloring is not proper ({0} conflicting pairs)")]
    ImproperColoring(usize),
    #[error("cycle length must be at least 3, got {0}")]
    InvalidLength(usize),
    #[error("neighbors of vertex {0} do not form a cycle in rotation order")]
    NeighborCycleMissing(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Two adjacent edges sharing a color, smaller edge first.
pub type Violation = [Edge; 2];

/// All pairs of adjacent edges with equal colors, in canonical order.
pub fn check_proper(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
) -> Result<Vec<Violation>, VerifyError> {
    let dense = coloring.dense(graph)?;
    Ok(violations(graph, &dense))
}

fn violations(graph: &PlanarTriangulation, dense: &[Color]) -> Vec<Violation> {
    let mut out = BTreeSet::new();
    for v in graph.vertices() {
        let inc = graph.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if dense[e] == dense[f] {
                    let (a, b) = (graph.edge(e), graph.edge(f));
                    out.insert(if a < b { [a, b] } else { [b, a] });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Validated coloring plus the number of distinct colors in use.
fn proper_dense(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
    length: usize,
) -> Result<Vec<Color>, VerifyError> {
    if length < 3 {
        return Err(VerifyError::InvalidLength(length));
    }
    let dense = coloring.dense(graph)?;
    let bad = violations(graph, &dense);
    if !bad.is_empty() {
        return Err(VerifyError::ImproperColoring(bad.len()));
    }
    Ok(dense)
}

/// The first rainbow cycle of the given length in canonical order.
pub fn find_rainbow_cycle(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
    length: usize,
) -> Result<Option<Cycle>, VerifyError> {
    let dense = proper_dense(graph, coloring, length)?;
    Ok(first_rainbow(graph, &dense, length))
}

pub fn count_rainbow_cycles(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
    length: usize,
) -> Result<usize, VerifyError> {
    let dense = proper_dense(graph, coloring, length)?;
    Ok(count_rainbow(graph, &dense, length))
}

/// A cycle of length `length` cannot be rainbow if fewer distinct colors
/// than `length` occur at all.
pub fn pigeonhole_excludes(coloring: &EdgeColoring, length: usize) -> bool {
    length > coloring.colors_used()
}

struct RainbowScan<'a> {
    graph: &'a PlanarTriangulation,
    colors: &'a [Color],
    length: usize,
}

impl RainbowScan<'_> {
    fn palette_size(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0) as usize + 1
    }

    /// Rainbow cycles whose minimum vertex is `start`, in lexicographic
    /// order; stops after `limit` hits.
    fn starting_at(&self, start: VertexId, limit: usize) -> Vec<Cycle> {
        let n = self.graph.vertex_count();
        let mut state = ScanState {
            path: vec![start],
            on_path: vec![false; n],
            used: vec![false; self.palette_size()],
            found: Vec::new(),
            limit,
        };
        state.on_path[start] = true;
        self.extend(&mut state);
        state.found
    }

    fn extend(&self, st: &mut ScanState) {
        let start = st.path[0];
        let last = *st.path.last().unwrap();
        if st.path.len() == self.length {
            if st.path[1] < last {
                if let Some(e) = self.graph.edge_id(last, start) {
                    if !st.used[self.colors[e] as usize] {
                        st.found.push(Cycle::new(st.path.clone()).unwrap());
                    }
                }
            }
            return;
        }
        for &(w, e) in self.graph.incident(last) {
            if st.found.len() >= st.limit {
                return;
            }
            let c = self.colors[e] as usize;
            if w <= start || st.on_path[w] || st.used[c] {
                continue;
            }
            st.on_path[w] = true;
            st.used[c] = true;
            st.path.push(w);
            self.extend(st);
            st.path.pop();
            st.used[c] = false;
            st.on_path[w] = false;
        }
    }
}

struct ScanState {
    path: Vec<VertexId>,
    on_path: Vec<bool>,
    used: Vec<bool>,
    found: Vec<Cycle>,
    limit: usize,
}

fn first_rainbow(graph: &PlanarTriangulation, colors: &[Color], length: usize) -> Option<Cycle> {
    if length > graph.vertex_count() {
        return None;
    }
    let scan = RainbowScan {
        graph,
        colors,
        length,
    };
    graph.vertices().find_map(|s| scan.starting_at(s, 1).pop())
}

fn count_rainbow(graph: &PlanarTriangulation, colors: &[Color], length: usize) -> usize {
    if length > graph.vertex_count() {
        return 0;
    }
    let scan = RainbowScan {
        graph,
        colors,
        length,
    };
    graph
        .vertices()
        .into_par_iter()
        .map(|s| scan.starting_at(s, usize::MAX).len())
        .sum()
}

/// True if the coloring is proper and has no rainbow cycle of any of the
/// given lengths.
pub(crate) fn satisfies(graph: &PlanarTriangulation, colors: &[Color], lengths: &[usize]) -> bool {
    violations(graph, colors).is_empty()
        && lengths
            .iter()
            .all(|&l| first_rainbow(graph, colors, l).is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodResult {
    pub vertex: VertexId,
    pub rainbow: bool,
    /// Neighbors in rotation order; consecutive entries are adjacent.
    pub cycle: Vec<VertexId>,
}

/// For each vertex, whether the cycle through its neighbors (taken in
/// rotation order) is rainbow.
pub fn neighborhood_rainbow_check(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
) -> Result<Vec<NeighborhoodResult>, VerifyError> {
    let dense = proper_dense(graph, coloring, 3)?;
    graph
        .vertices()
        .map(|v| {
            let rot = graph.rotation(v);
            if rot.len() < 3 {
                return Err(VerifyError::NeighborCycleMissing(v));
            }
            let mut seen = BTreeSet::new();
            let mut rainbow = true;
            for i in 0..rot.len() {
                let e = graph
                    .edge_id(rot[i], rot[(i + 1) % rot.len()])
                    .ok_or(VerifyError::NeighborCycleMissing(v))?;
                rainbow &= seen.insert(dense[e]);
            }
            Ok(NeighborhoodResult {
                vertex: v,
                rainbow,
                cycle: rot.to_vec(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    LowDegree { vertex: VertexId, degree: usize },
    SeparatingTriangle { cycle: Cycle },
}

/// Vertices of degree 3 or 4 and separating triangles. Any of these rules
/// out a proper coloring without rainbow 4-cycles once `n >= 5`.
pub fn check_c4_obstructions(graph: &PlanarTriangulation) -> Vec<Obstruction> {
    let mut out: Vec<Obstruction> = graph
        .vertices()
        .filter(|&v| matches!(graph.degree(v), 3 | 4))
        .map(|v| Obstruction::LowDegree {
            vertex: v,
            degree: graph.degree(v),
        })
        .collect();
    if graph.vertex_count() > 3 {
        for c in enumerate_cycles(graph, 3) {
            if is_separating_cycle(graph, &c).unwrap_or(false) {
                out.push(Obstruction::SeparatingTriangle { cycle: c });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Answer lengths above the number of colors in use without enumerating.
    pub pigeonhole_shortcut: bool,
    pub connectivity: ConnectivityOptions,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            pigeonhole_shortcut: true,
            connectivity: ConnectivityOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub faces: usize,
    pub all_faces_triangles: bool,
    pub degree_sequence: Vec<usize>,
    pub connectivity: Option<ConnectivityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringStats {
    pub palette: Color,
    pub colors_used: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowResult {
    pub count: usize,
    pub witness: Option<Cycle>,
    /// Count decided by the pigeonhole bound, without enumeration.
    pub shortcut: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claims: BTreeMap<String, bool>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub schema_version: u32,
    pub graph: GraphStats,
    pub coloring: ColoringStats,
    pub rainbow: BTreeMap<usize, RainbowResult>,
    pub neighborhood: Option<Vec<NeighborhoodResult>>,
    pub obstructions: Option<Vec<Obstruction>>,
    pub verdict: Verdict,
}

impl CertificateReport {
    pub fn passes(&self) -> bool {
        self.verdict.all_pass
    }

    pub fn claim(&self, name: &str) -> Option<bool> {
        self.verdict.claims.get(name).copied()
    }
}

pub fn rainbow_claim(length: usize) -> String {
    format!("no_rainbow_c{length}")
}

/// Runs every check on `(graph, coloring)` for the given forbidden lengths.
///
/// Claims always present: `edge_count`, `triangular_faces`, `proper`, and
/// `no_rainbow_c{l}` per length. When 4 is among the lengths,
/// `neighborhood_rainbow` (n >= 4) and `c4_obstruction_free` (n >= 5) are
/// added as well.
pub fn certify(
    graph: &PlanarTriangulation,
    coloring: &EdgeColoring,
    lengths: &BTreeSet<usize>,
    options: &CertifyOptions,
) -> Result<CertificateReport, VerifyError> {
    if let Some(&bad) = lengths.iter().find(|&&l| l < 3) {
        return Err(VerifyError::InvalidLength(bad));
    }
    let n = graph.vertex_count();
    let dense = coloring.dense(graph)?;
    let faces = graph.trace_faces()?;
    let all_faces_triangles = faces.iter().all(|f| f.len() == 3);
    let connectivity = if n >= 5 {
        Some(connectivity_class(graph, &options.connectivity)?)
    } else {
        None
    };
    let graph_stats = GraphStats {
        n,
        edges: graph.edge_count(),
        faces: faces.len(),
        all_faces_triangles,
        degree_sequence: graph.degree_sequence(),
        connectivity,
    };
    let bad = violations(graph, &dense);
    let proper = bad.is_empty();
    let coloring_stats = ColoringStats {
        palette: coloring.palette(),
        colors_used: coloring.colors_used(),
        violations: bad,
    };

    let mut claims = BTreeMap::new();
    claims.insert(
        "edge_count".to_string(),
        n >= 3 && graph.edge_count() == 3 * n - 6,
    );
    claims.insert(
        "triangular_faces".to_string(),
        all_faces_triangles && faces.len() == 2 * n - 4,
    );
    claims.insert("proper".to_string(), proper);

    let mut rainbow = BTreeMap::new();
    for &len in lengths {
        let result = if options.pigeonhole_shortcut && pigeonhole_excludes(coloring, len) {
            RainbowResult {
                count: 0,
                witness: None,
                shortcut: true,
            }
        } else {
            let count = count_rainbow(graph, &dense, len);
            let witness = if count > 0 {
                first_rainbow(graph, &dense, len)
            } else {
                None
            };
            RainbowResult {
                count,
                witness,
                shortcut: false,
            }
        };
        claims.insert(rainbow_claim(len), result.count == 0);
        rainbow.insert(len, result);
    }

    let mut neighborhood = None;
    let mut obstructions = None;
    if lengths.contains(&4) && n >= 4 {
        let results = if proper {
            Some(neighborhood_rainbow_check(graph, coloring)?)
        } else {
            None
        };
        let pass = results
            .as_ref()
            .is_some_and(|r| r.iter().all(|x| x.rainbow));
        claims.insert("neighborhood_rainbow".to_string(), pass);
        neighborhood = results;
    }
    if lengths.contains(&4) && n >= 5 {
        let found = check_c4_obstructions(graph);
        claims.insert("c4_obstruction_free".to_string(), found.is_empty());
        obstructions = Some(found);
    }

    let all_pass = claims.values().all(|&ok| ok);
    Ok(CertificateReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph: graph_stats,
        coloring: coloring_stats,
        rainbow,
        neighborhood,
        obstructions,
        verdict: Verdict { claims, all_pass },
    })
}
