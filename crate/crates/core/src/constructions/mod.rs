//! The two extremal families and a handful of small fixture triangulations.

mod fixtures;
mod ring;
mod strip;

pub use fixtures::{bipyramid, build_fixture, Fixture};
pub use ring::{build_hk, HkParams};
pub use strip::{build_fn, FnParams};

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{GraphError, Label, PlanarTriangulation, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("ring family needs k >= 5, got {0}")]
    InvalidK(usize),
    #[error("strip family needs n >= 3, got {0}")]
    InvalidN(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("label {0} assigned to more than one vertex")]
    DuplicateLabel(Label),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A triangulation whose vertices may carry family labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTriangulation {
    graph: PlanarTriangulation,
    labels: Vec<Option<Label>>,
    index: HashMap<Label, VertexId>,
}

impl LabeledTriangulation {
    pub fn new(
        graph: PlanarTriangulation,
        labels: Vec<Option<Label>>,
    ) -> Result<Self, ConstructionError> {
        if labels.len() != graph.vertex_count() {
            return Err(ConstructionError::LabelCount {
                expected: graph.vertex_count(),
                found: labels.len(),
            });
        }
        let mut index = HashMap::new();
        for (v, label) in labels.iter().enumerate() {
            if let Some(l) = label {
                if index.insert(*l, v).is_some() {
                    return Err(ConstructionError::DuplicateLabel(*l));
                }
            }
        }
        Ok(LabeledTriangulation {
            graph,
            labels,
            index,
        })
    }

    pub fn unlabeled(graph: PlanarTriangulation) -> Self {
        let labels = vec![None; graph.vertex_count()];
        LabeledTriangulation {
            graph,
            labels,
            index: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &PlanarTriangulation {
        &self.graph
    }

    pub fn into_graph(self) -> PlanarTriangulation {
        self.graph
    }

    pub fn label(&self, v: VertexId) -> Option<Label> {
        self.labels.get(v).copied().flatten()
    }

    pub fn labels(&self) -> &[Option<Label>] {
        &self.labels
    }

    pub fn vertex(&self, label: Label) -> Option<VertexId> {
        self.index.get(&label).copied()
    }

    pub fn has_labels(&self) -> bool {
        !self.index.is_empty()
    }

    /// Printable vertex name: the label if present, else the index.
    pub fn name(&self, v: VertexId) -> String {
        self.label(v)
            .map_or_else(|| v.to_string(), |l| l.to_string())
    }
}
