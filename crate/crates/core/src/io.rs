//! Text formats for graphs and weights.
//!
//! Edge list: first line `n m`, then m lines `u v` with 0-based ids,
//! whitespace-separated, LF line ends. Weights: n lines, one non-negative
//! integer per line, line i holding the weight of vertex i.

use std::fmt;

use crate::graph::{Graph, GraphError, VertexWeights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    MissingHeader,
    BadToken { line: usize, token: String },
    WrongEdgeCount { expected: usize, got: usize },
    WrongWeightCount { expected: usize, got: usize },
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing `n m` header line"),
            ParseError::BadToken { line, token } => {
                write!(f, "line {line}: cannot parse `{token}`")
            }
            ParseError::WrongEdgeCount { expected, got } => {
                write!(f, "expected {expected} edge lines, got {got}")
            }
            ParseError::WrongWeightCount { expected, got } => {
                write!(f, "expected {expected} weight lines, got {got}")
            }
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> ParseError {
        ParseError::Graph(e)
    }
}

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError::BadToken {
        line,
        token: tok.to_string(),
    })
}

/// Parses the edge-list format into a canonical `Graph`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hno, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let n: usize = parse_token(it.next().unwrap_or(""), hno + 1)?;
    let m: usize = parse_token(it.next().unwrap_or(""), hno + 1)?;
    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_token(it.next().unwrap_or(""), no + 1)?;
        let v = parse_token(it.next().unwrap_or(""), no + 1)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::build(n, &edges)?)
}

/// Serializes a graph back to the edge-list format, edges ascending with
/// `u < v`. Parsing followed by writing is idempotent.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a weights file for a graph on `n` vertices.
pub fn parse_weights(text: &str, n: usize) -> Result<VertexWeights, ParseError> {
    let mut weights = Vec::with_capacity(n);
    for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        weights.push(parse_token(line.trim(), no + 1)?);
    }
    if weights.len() != n {
        return Err(ParseError::WrongWeightCount {
            expected: n,
            got: weights.len(),
        });
    }
    Ok(VertexWeights::new(weights))
}
