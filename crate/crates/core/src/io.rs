//! JSON documents: graphs, colorings, graph+coloring bundles, search
//! problems and outcomes, and DOT export.
//!
//! Graph: `{ "n": int, "rotations": [[int, ...], ...], "labels": [str|null, ...] }`
//! with `labels` optional. Coloring: `{ "palette": int, "edges": [[u, v, color], ...] }`
//! sorted by canonical edge. Bundle: `{ "graph": <graph>, "coloring": <coloring> }`.
//! All output goes through `serde_json::Value`, so object keys come out sorted.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::LabeledTriangulation;
use crate::graph::{Edge, GraphError, Invariant, Label, PlanarTriangulation};
use crate::search::{Budget, SearchOutcome};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    NotATriangulation(#[from] GraphError),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Schema(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Option<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub palette: Color,
    pub edges: Vec<(usize, usize, Color)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDocument {
    pub graph: GraphDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub graph: GraphDocument,
    pub palette: Color,
    pub forbid: Vec<usize>,
    #[serde(default)]
    pub budget_nodes: Option<u64>,
    #[serde(default)]
    pub budget_seconds: Option<u64>,
}

impl ProblemDocument {
    pub fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            nodes: self.budget_nodes.unwrap_or(d.nodes),
            seconds: self.budget_seconds.unwrap_or(d.seconds),
        }
    }
}

impl GraphDocument {
    pub fn from_graph(graph: &LabeledTriangulation) -> Self {
        let g = graph.graph();
        let labels = graph.has_labels().then(|| {
            graph
                .labels()
                .iter()
                .map(|l| l.map(|l| l.to_string()))
                .collect()
        });
        GraphDocument {
            n: g.vertex_count(),
            rotations: g.rotations().to_vec(),
            labels,
        }
    }

    /// Validates the document into a labeled triangulation.
    pub fn into_graph(self) -> Result<LabeledTriangulation, DocumentError> {
        if self.n != self.rotations.len() {
            return Err(GraphError::NotATriangulation(Invariant::RotationCount {
                expected: self.n,
                found: self.rotations.len(),
            })
            .into());
        }
        let graph = PlanarTriangulation::from_rotations(self.rotations)?;
        let labels: Vec<Option<Label>> = match self.labels {
            None => vec![None; self.n],
            Some(raw) => {
                if raw.len() != self.n {
                    return Err(DocumentError::Schema(format!(
                        "labels has {} entries, expected {}",
                        raw.len(),
                        self.n
                    )));
                }
                let parsed = raw
                    .iter()
                    .map(|l| l.as_deref().map(str::parse::<Label>).transpose())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| DocumentError::Schema(e.to_string()))?;
                let mut seen = HashSet::new();
                if let Some(dup) = parsed.iter().flatten().find(|l| !seen.insert(**l)) {
                    return Err(DocumentError::Schema(format!("label {dup} used twice")));
                }
                parsed
            }
        };
        LabeledTriangulation::new(graph, labels).map_err(|e| DocumentError::Schema(e.to_string()))
    }
}

impl ColoringDocument {
    pub fn from_coloring(coloring: &EdgeColoring) -> Self {
        ColoringDocument {
            palette: coloring.palette(),
            edges: coloring
                .iter()
                .map(|(e, c)| (e.low(), e.high(), c))
                .collect(),
        }
    }

    pub fn into_coloring(self) -> Result<EdgeColoring, DocumentError> {
        let mut col = EdgeColoring::new(self.palette);
        for (a, b, c) in self.edges {
            let e = Edge::new(a, b)
                .ok_or_else(|| DocumentError::Schema(format!("loop [{a}, {b}] in coloring")))?;
            if col.get(&e).is_some() {
                return Err(DocumentError::Schema(format!("edge {e} colored twice")));
            }
            col.set(e, c);
        }
        Ok(col)
    }
}

/// A graph document or a bundle, as read from input.
#[derive(Debug, Clone)]
pub enum InputDocument {
    Graph(GraphDocument),
    Bundle(BundleDocument),
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let value: Value = serde_json::from_str(text)?;
        if value.get("graph").is_some() {
            Ok(InputDocument::Bundle(serde_json::from_value(value)?))
        } else {
            Ok(InputDocument::Graph(serde_json::from_value(value)?))
        }
    }

    pub fn into_parts(self) -> (GraphDocument, Option<ColoringDocument>) {
        match self {
            InputDocument::Graph(g) => (g, None),
            InputDocument::Bundle(b) => (b.graph, b.coloring),
        }
    }
}

/// Parses and validates a graph document.
pub fn parse_graph(text: &str) -> Result<LabeledTriangulation, DocumentError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    doc.into_graph()
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring, DocumentError> {
    let doc: ColoringDocument = serde_json::from_str(text)?;
    doc.into_coloring()
}

pub fn graph_value(graph: &LabeledTriangulation) -> Value {
    serde_json::to_value(GraphDocument::from_graph(graph)).expect("graph document serializes")
}

pub fn coloring_value(coloring: &EdgeColoring) -> Value {
    serde_json::to_value(ColoringDocument::from_coloring(coloring)).expect("coloring serializes")
}

pub fn bundle_value(graph: &LabeledTriangulation, coloring: Option<&EdgeColoring>) -> Value {
    let doc = BundleDocument {
        graph: GraphDocument::from_graph(graph),
        coloring: coloring.map(ColoringDocument::from_coloring),
    };
    serde_json::to_value(doc).expect("bundle serializes")
}

pub fn outcome_value(outcome: &SearchOutcome) -> Value {
    serde_json::json!({
        "status": outcome.status,
        "witness": outcome.witness.as_ref().map(coloring_value),
        "stats": outcome.stats,
        "reason": outcome.reason,
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json_text<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("value serializes");
    let mut text = serde_json::to_string_pretty(&value).expect("json renders");
    text.push('\n');
    text
}

/// DOT edge colors, cycled by color id.
pub const DOT_PALETTE: [&str; 12] = [
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
    "gold",
    "gray",
    "navy",
    "darkgreen",
];

pub fn to_dot(graph: &LabeledTriangulation, coloring: Option<&EdgeColoring>) -> String {
    let g = graph.graph();
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v} [label=\"{}\"];\n", graph.name(v)));
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        match coloring.and_then(|c| c.get(e)) {
            Some(c) => {
                let name = DOT_PALETTE[(c as usize + DOT_PALETTE.len() - 1) % DOT_PALETTE.len()];
                out.push_str(&format!(
                    "  {a} -- {b} [color=\"{name}\", label=\"{c}\"];\n"
                ));
            }
            None => out.push_str(&format!("  {a} -- {b};\n")),
        }
    }
    out.push_str("}\n");
    out
}
