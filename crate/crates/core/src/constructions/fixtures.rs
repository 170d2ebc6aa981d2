use std::fmt;
use std::str::FromStr;

use super::{ConstructionError, LabeledTriangulation};
use crate::graph::{PlanarTriangulation, VertexId};

/// Small named triangulations used as a test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    K4,
    /// `K_4` with one extra vertex inside a face.
    StackedK4,
    Octahedron,
    Icosahedron,
    /// Pentagonal bipyramid, 7 vertices.
    PentagonalBipyramid,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::K4,
        Fixture::StackedK4,
        Fixture::Octahedron,
        Fixture::Icosahedron,
        Fixture::PentagonalBipyramid,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::K4 => "k4",
            Fixture::StackedK4 => "stacked_k4",
            Fixture::Octahedron => "octahedron",
            Fixture::Icosahedron => "icosahedron",
            Fixture::PentagonalBipyramid => "pentagonal_bipyramid",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConstructionError::UnknownFixture(s.to_string()))
    }
}

pub fn build_fixture(fixture: Fixture) -> LabeledTriangulation {
    let graph = match fixture {
        Fixture::K4 => tri(4, &[[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]),
        Fixture::StackedK4 => tri(
            5,
            &[
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 1],
                [1, 3, 4],
                [3, 2, 4],
                [2, 1, 4],
            ],
        ),
        Fixture::Octahedron => bipyramid(4),
        Fixture::PentagonalBipyramid => bipyramid(5),
        Fixture::Icosahedron => icosahedron(),
    };
    LabeledTriangulation::unlabeled(graph)
}

/// Cycle `1..=m` with apexes 0 and `m + 1`.
pub fn bipyramid(m: usize) -> PlanarTriangulation {
    assert!(m >= 3);
    let mut faces = Vec::new();
    for i in 0..m {
        let (a, b) = (1 + i, 1 + (i + 1) % m);
        faces.push([0, a, b]);
        faces.push([m + 1, b, a]);
    }
    tri(m + 2, &faces)
}

fn icosahedron() -> PlanarTriangulation {
    // 0 on top, upper pentagon 1..=5, lower pentagon 6..=10, 11 at the bottom
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push([0, up(i), up(i + 1)]);
        faces.push([11, low(i + 1), low(i)]);
        faces.push([up(i), low(i), up(i + 1)]);
        faces.push([up(i + 1), low(i), low(i + 1)]);
    }
    tri(12, &faces)
}

fn tri(n: usize, faces: &[[VertexId; 3]]) -> PlanarTriangulation {
    PlanarTriangulation::from_triangles(n, faces).expect("fixture face list is a triangulation")
}
