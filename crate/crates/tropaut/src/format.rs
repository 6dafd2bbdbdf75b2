//! The JSON wire format for graphs and metric graphs.
//!
//! A graph file is an object with `"vertices"` (count) and `"edges"` (array
//! of `{"u", "v"}`, loops as `u == v`; array order defines the edge ids).
//! An optional `"lengths"` array of exact rational strings (`"3"` or
//! `"1/2"`), parallel to `"edges"`, turns it into a metric graph, and an
//! optional `"name"` tags it. Parsing is strict: out-of-range indices,
//! malformed or nonpositive lengths, and length-count mismatches are
//! rejected with the offending index in the message.

use serde::{Deserialize, Serialize};
use tropaut_core::metric::MetricGraph;
use tropaut_core::{Multigraph, Rational};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: usize,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// A parsed graph file: the combinatorial graph, plus lengths when the file
/// declared any.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Multigraph,
    pub lengths: Option<Vec<Rational>>,
    pub name: Option<String>,
}

impl ParsedGraph {
    /// The metric graph this file describes; unit lengths when none were
    /// given.
    pub fn into_metric(self) -> Result<MetricGraph, FormatError> {
        let graph = self.graph;
        match self.lengths {
            Some(lengths) => Ok(MetricGraph::new(graph, lengths)?),
            None => Ok(MetricGraph::unit(graph)),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("not valid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge {index}: vertex index {vertex} out of range ({vertices} vertices)")]
    EdgeOutOfRange { index: usize, vertex: usize, vertices: usize },
    #[error("lengths: expected {expected} entries (one per edge), got {actual}")]
    LengthCount { expected: usize, actual: usize },
    #[error("length {index}: {message}")]
    BadLength { index: usize, message: String },
    #[error(transparent)]
    Core(#[from] tropaut_core::Error),
}

/// Parses rational length strings, naming the first bad index.
pub fn parse_lengths(entries: &[String]) -> Result<Vec<Rational>, FormatError> {
    entries
        .iter()
        .enumerate()
        .map(|(index, s)| {
            let value: Rational = s
                .parse()
                .map_err(|e| FormatError::BadLength { index, message: format!("{e}") })?;
            if !value.is_positive() {
                return Err(FormatError::BadLength {
                    index,
                    message: "must be strictly positive".into(),
                });
            }
            Ok(value)
        })
        .collect()
}

/// Parses a graph document from JSON text.
pub fn parse_graph_json(text: &str) -> Result<ParsedGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    parse_graph_doc(doc)
}

pub fn parse_graph_doc(doc: GraphDoc) -> Result<ParsedGraph, FormatError> {
    for (index, e) in doc.edges.iter().enumerate() {
        for endpoint in [e.u, e.v] {
            if endpoint >= doc.vertices {
                return Err(FormatError::EdgeOutOfRange {
                    index,
                    vertex: endpoint,
                    vertices: doc.vertices,
                });
            }
        }
    }
    let graph = Multigraph::new(doc.vertices, doc.edges.iter().map(|e| (e.u, e.v)))?;
    let lengths = match doc.lengths {
        Some(entries) => {
            if entries.len() != graph.num_edges() {
                return Err(FormatError::LengthCount {
                    expected: graph.num_edges(),
                    actual: entries.len(),
                });
            }
            Some(parse_lengths(&entries)?)
        }
        None => None,
    };
    Ok(ParsedGraph { graph, lengths, name: doc.name })
}

/// Serializes a graph (optionally with lengths and a name) to the document
/// form. Edge order is preserved, so the document round-trips exactly.
pub fn graph_to_doc(
    graph: &Multigraph,
    lengths: Option<&[Rational]>,
    name: Option<&str>,
) -> GraphDoc {
    GraphDoc {
        vertices: graph.num_vertices(),
        edges: graph
            .edges()
            .map(|e| {
                let (u, v) = graph.endpoints(e);
                EdgeDoc { u: u.0, v: v.0 }
            })
            .collect(),
        lengths: lengths.map(|ls| ls.iter().map(|l| l.to_string()).collect()),
        name: name.map(str::to_owned),
    }
}

pub fn metric_to_doc(metric: &MetricGraph, name: Option<&str>) -> GraphDoc {
    graph_to_doc(metric.graph(), Some(metric.lengths()), name)
}

/// Lowercase hex of a canonical code, the stable graph identifier used in
/// reports.
pub fn code_hex(code: &[u8]) -> String {
    use std::fmt::Write;
    let mut out = String::with_capacity(code.len() * 2);
    for byte in code {
        write!(out, "{byte:02x}").expect("writing to a String cannot fail");
    }
    out
}
