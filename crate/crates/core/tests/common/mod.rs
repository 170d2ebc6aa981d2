//! Independent reference implementations used to cross-check the library.
//!
//! Nothing here calls the library's cycle enumeration, rainbow checks or
//! search; the oracles only read the edge list.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use planar_rainbow::{
    bipyramid, build_fixture, build_fn, build_hk, Fixture, FnParams, HkParams,
    LabeledTriangulation, PlanarTriangulation,
};

/// Plain adjacency matrix and edge index built from the edge list.
pub struct Plain {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub edge_index: HashMap<(usize, usize), usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Plain {
    pub fn new(g: &PlanarTriangulation) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        let mut edge_index = HashMap::new();
        let mut edges = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            let (a, b) = e.endpoints();
            adj[a][b] = true;
            adj[b][a] = true;
            edge_index.insert((a.min(b), a.max(b)), i);
            edges.push((a.min(b), a.max(b)));
        }
        Plain {
            n,
            adj,
            edge_index,
            edges,
        }
    }

    pub fn edge(&self, a: usize, b: usize) -> usize {
        self.edge_index[&(a.min(b), a.max(b))]
    }
}

/// All `len`-cycles found by trying every vertex subset and every ordering
/// of it, normalized to start at the smallest vertex with the second entry
/// below the last.
pub fn naive_cycles(g: &PlanarTriangulation, len: usize) -> Vec<Vec<usize>> {
    let p = Plain::new(g);
    let mut out = BTreeSet::new();
    for subset in (0..p.n).combinations(len) {
        let first = subset[0];
        for rest in subset[1..].iter().copied().permutations(len - 1) {
            if rest[0] > rest[len - 2] {
                continue;
            }
            let mut cyc = vec![first];
            cyc.extend(rest);
            if (0..len).all(|i| p.adj[cyc[i]][cyc[(i + 1) % len]]) {
                out.insert(cyc);
            }
        }
    }
    out.into_iter().collect()
}

/// Edge ids of every cycle of each length in `lengths`.
pub fn cycle_edge_sets(g: &PlanarTriangulation, lengths: &[usize]) -> Vec<(usize, Vec<usize>)> {
    let p = Plain::new(g);
    let mut out = Vec::new();
    for &len in lengths {
        for c in naive_cycles(g, len) {
            let ids = (0..len).map(|i| p.edge(c[i], c[(i + 1) % len])).collect();
            out.push((len, ids));
        }
    }
    out
}

/// For every proper coloring with colors `1..=palette`, the set of lengths
/// (as a bitmask over `lengths`) that have a rainbow cycle. Returns the
/// distinct masks and the number of proper colorings visited.
pub fn rainbow_masks(
    g: &PlanarTriangulation,
    palette: u32,
    lengths: &[usize],
) -> (BTreeSet<u32>, u64) {
    let p = Plain::new(g);
    let cycles = cycle_edge_sets(g, lengths);
    let slot: HashMap<usize, u32> = lengths
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, 1 << i))
        .collect();
    let mut colors = vec![0u32; p.edges.len()];
    let mut masks = BTreeSet::new();
    let mut visited = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        p: &Plain,
        palette: u32,
        colors: &mut Vec<u32>,
        cycles: &[(usize, Vec<usize>)],
        slot: &HashMap<usize, u32>,
        masks: &mut BTreeSet<u32>,
        visited: &mut u64,
    ) {
        if i == p.edges.len() {
            *visited += 1;
            let mut mask = 0;
            for (len, ids) in cycles {
                let distinct: BTreeSet<u32> = ids.iter().map(|&e| colors[e]).collect();
                if distinct.len() == *len {
                    mask |= slot[len];
                }
            }
            masks.insert(mask);
            return;
        }
        let (a, b) = p.edges[i];
        for c in 1..=palette {
            let clash = (0..i).any(|j| {
                let (x, y) = p.edges[j];
                colors[j] == c && (x == a || x == b || y == a || y == b)
            });
            if !clash {
                colors[i] = c;
                rec(i + 1, p, palette, colors, cycles, slot, masks, visited);
            }
        }
        colors[i] = 0;
    }

    rec(
        0,
        &p,
        palette,
        &mut colors,
        &cycles,
        &slot,
        &mut masks,
        &mut visited,
    );
    (masks, visited)
}

/// Whether some proper coloring avoids rainbow cycles at every length in
/// `forbidden`, given the masks from [`rainbow_masks`] over `lengths`.
pub fn brute_force_sat(masks: &BTreeSet<u32>, lengths: &[usize], forbidden: &[usize]) -> bool {
    let want: u32 = forbidden
        .iter()
        .map(|l| {
            1 << lengths
                .iter()
                .position(|x| x == l)
                .expect("length in scope")
        })
        .sum();
    masks.iter().any(|m| m & want == 0)
}

/// Triangulations with at most seven vertices used by the search oracle check.
pub fn small_corpus() -> Vec<(String, PlanarTriangulation)> {
    let mut out: Vec<(String, PlanarTriangulation)> = [
        Fixture::K4,
        Fixture::StackedK4,
        Fixture::Octahedron,
        Fixture::PentagonalBipyramid,
    ]
    .into_iter()
    .map(|f| (f.name().to_string(), build_fixture(f).into_graph()))
    .collect();
    for n in 5..=7 {
        out.push((
            format!("F_{n}"),
            build_fn(FnParams::new(n).unwrap()).unwrap().into_graph(),
        ));
    }
    out
}

/// Every triangulation fixture with at most twelve vertices.
pub fn cycle_corpus() -> Vec<(String, PlanarTriangulation)> {
    let mut out: Vec<(String, PlanarTriangulation)> = Fixture::ALL
        .into_iter()
        .map(|f| (f.name().to_string(), build_fixture(f).into_graph()))
        .collect();
    for m in [3, 6, 8, 10] {
        out.push((format!("bipyramid_{m}"), bipyramid(m)));
    }
    for n in 4..=12 {
        out.push((
            format!("F_{n}"),
            build_fn(FnParams::new(n).unwrap()).unwrap().into_graph(),
        ));
    }
    out.push((
        "H_5".to_string(),
        build_hk(HkParams::new(5).unwrap()).unwrap().into_graph(),
    ));
    out
}

/// Edge set as vertex pairs, for comparisons across relabelings.
pub fn edge_pairs(g: &LabeledTriangulation) -> BTreeSet<(usize, usize)> {
    Plain::new(g.graph()).edges.into_iter().collect()
}

/// A triangulation grown from `K_4` by a sequence of operations: even
/// values stack a new vertex into a face, odd values flip an edge where the
/// flip keeps the graph simple. Each value also selects the face.
pub fn random_triangulation(ops: &[u32], max_n: usize) -> PlanarTriangulation {
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    let mut n = 4;
    for &op in ops {
        let f = (op as usize / 2) % faces.len();
        if op % 2 == 0 && n < max_n {
            let [a, b, c] = faces.swap_remove(f);
            faces.extend([[a, b, n], [b, c, n], [c, a, n]]);
            n += 1;
        } else {
            let [a, b, c] = faces[f];
            let dart = |t: &[usize; 3]| {
                rotations_of(*t)
                    .into_iter()
                    .find(|r| r[0] == b && r[1] == a)
            };
            let Some(g) = faces.iter().position(|t| dart(t).is_some()) else {
                continue;
            };
            let d = dart(&faces[g]).unwrap()[2];
            let adjacent = faces.iter().any(|t| t.contains(&c) && t.contains(&d));
            if adjacent {
                continue;
            }
            let (hi, lo) = (f.max(g), f.min(g));
            faces.swap_remove(hi);
            faces.swap_remove(lo);
            faces.extend([[a, d, c], [b, c, d]]);
        }
    }
    PlanarTriangulation::from_triangles(n, &faces).expect("grown face list is a triangulation")
}

fn rotations_of([a, b, c]: [usize; 3]) -> [[usize; 3]; 3] {
    [[a, b, c], [b, c, a], [c, a, b]]
}
