//! The line-oriented semigraph text format.
//!
//! ```text
//! # comment
//! n 5
//! e 1 2 3
//! e 1 4 5
//! ```
//!
//! The header `n <count>` must precede every edge line. Each `e` line lists
//! the vertices of one edge in order, 1-indexed. Blank lines and lines whose
//! first non-blank character is `#` are ignored; CRLF line endings are
//! accepted.

use std::fmt::{self, Write as _};

use semigraph::{GraphError, Semigraph};
use thiserror::Error;

/// A syntax error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

/// Either a syntax error or a structurally invalid semigraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{}{kind}: {error}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid {
        kind: &'static str,
        error: GraphError,
        /// Line of the offending edge, when the error names one.
        line: Option<usize>,
    },
}

/// Variant name of a core validation error, for diagnostics.
pub fn graph_error_kind(error: &GraphError) -> &'static str {
    match error {
        GraphError::NoVertices => "NoVertices",
        GraphError::EdgeTooShort { .. } => "EdgeTooShort",
        GraphError::DuplicateVertexInEdge { .. } => "DuplicateVertexInEdge",
        GraphError::EdgesShareTwoVertices { .. } => "EdgesShareTwoVertices",
        GraphError::DuplicateEdge { .. } => "DuplicateEdge",
        GraphError::VertexOutOfRange { .. } => "VertexOutOfRange",
        GraphError::EdgeNotInSemigraph => "EdgeNotInSemigraph",
        GraphError::VertexNotOnEdge(_) => "VertexNotOnEdge",
    }
}

/// Parsed but not yet validated contents of a semigraph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigraphFile {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    /// Source line of each edge, parallel to `edges`.
    pub edge_lines: Vec<usize>,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

fn parse_count(token: &Token<'_>, line: usize, what: &str) -> Result<usize, ParseError> {
    token.text.parse::<usize>().map_err(|_| ParseError {
        line,
        column: token.column,
        reason: format!("expected a non-negative integer {what}, found `{}`", token.text),
    })
}

impl SemigraphFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if !line.trim().is_empty() {
                last_line = line_no;
            }
            let toks = tokens(line);
            let Some(head) = toks.first() else { continue };
            if head.text.starts_with('#') {
                continue;
            }
            match head.text {
                "n" => {
                    if n.is_some() {
                        return Err(ParseError {
                            line: line_no,
                            column: head.column,
                            reason: "duplicate `n` header".into(),
                        });
                    }
                    let Some(count) = toks.get(1) else {
                        return Err(ParseError {
                            line: line_no,
                            column: line.chars().count() + 1,
                            reason: "`n` header needs a vertex count".into(),
                        });
                    };
                    if let Some(extra) = toks.get(2) {
                        return Err(ParseError {
                            line: line_no,
                            column: extra.column,
                            reason: format!("unexpected `{}` after vertex count", extra.text),
                        });
                    }
                    let value = parse_count(count, line_no, "vertex count")?;
                    if value == 0 {
                        return Err(ParseError {
                            line: line_no,
                            column: count.column,
                            reason: "vertex count must be at least 1".into(),
                        });
                    }
                    n = Some(value);
                }
                "e" => {
                    let Some(count) = n else {
                        return Err(ParseError {
                            line: line_no,
                            column: head.column,
                            reason: "edge line before the `n` header".into(),
                        });
                    };
                    let mut edge = Vec::with_capacity(toks.len() - 1);
                    for tok in &toks[1..] {
                        let v = parse_count(tok, line_no, "vertex id")?;
                        if v == 0 || v > count {
                            return Err(ParseError {
                                line: line_no,
                                column: tok.column,
                                reason: format!("vertex {v} is outside 1..={count}"),
                            });
                        }
                        edge.push(v);
                    }
                    edges.push(edge);
                    edge_lines.push(line_no);
                }
                other => {
                    return Err(ParseError {
                        line: line_no,
                        column: head.column,
                        reason: format!("unknown directive `{other}`, expected `n`, `e` or `#`"),
                    });
                }
            }
        }
        let Some(n) = n else {
            return Err(ParseError {
                line: last_line.max(1),
                column: 1,
                reason: "missing `n <count>` header".into(),
            });
        };
        Ok(SemigraphFile { n, edges, edge_lines })
    }

    /// Validates the parsed edges as a semigraph.
    pub fn to_semigraph(&self) -> Result<Semigraph, FileError> {
        Semigraph::new(self.n, &self.edges).map_err(|error| {
            let edge = match &error {
                GraphError::EdgeTooShort { edge, .. } | GraphError::DuplicateVertexInEdge { edge, .. } => {
                    Some(*edge)
                }
                GraphError::EdgesShareTwoVertices { second, .. } | GraphError::DuplicateEdge { second, .. } => {
                    Some(*second)
                }
                _ => None,
            };
            FileError::Invalid {
                kind: graph_error_kind(&error),
                line: edge.map(|k| self.edge_lines[k]),
                error,
            }
        })
    }

    pub fn from_semigraph(g: &Semigraph) -> Self {
        let edges: Vec<Vec<usize>> = g
            .edges()
            .iter()
            .map(|e| e.vertices().iter().map(|v| v.0).collect())
            .collect();
        SemigraphFile {
            n: g.vertex_count(),
            edge_lines: (0..edges.len()).map(|k| k + 2).collect(),
            edges,
        }
    }
}

impl fmt::Display for SemigraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for edge in &self.edges {
            let mut line = String::from("e");
            for v in edge {
                write!(line, " {v}")?;
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Parses and validates in one step.
pub fn parse_semigraph(text: &str) -> Result<Semigraph, FileError> {
    SemigraphFile::parse(text)?.to_semigraph()
}
