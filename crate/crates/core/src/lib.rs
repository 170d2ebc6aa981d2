//! Planar triangulations, edge colorings without rainbow cycles, and tools to
//! build, certify and search for them.
//!
//! The two constructed families are the ring family `H_k` (k >= 5) with its
//! coloring [`sigma_hk`], which has no rainbow 4-, 5- or 6-cycle, and the strip
//! family `F_n` (n >= 3) with [`c_fn`], which has no rainbow 5-, 6-, 7- or 8-cycle.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod search;
pub mod verifier;

pub use coloring::{c_fn, sigma_hk, Color, ColoringError, EdgeColoring};
pub use constructions::{
    bipyramid, build_fixture, build_fn, build_hk, ConstructionError, Fixture, FnParams, HkParams,
    LabeledTriangulation,
};
pub use graph::{Cycle, Edge, GraphError, Invariant, Label, PlanarTriangulation, VertexId};
pub use search::{decide, precheck, solve, Budget, SearchOutcome, SearchProblem, SearchStatus};
pub use verifier::{certify, CertificateReport, CertifyOptions};
