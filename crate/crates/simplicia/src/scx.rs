//! The SCX text format.
//!
//! An SCX document is line oriented:
//!
//! ```text
//! scx 1
//! # a tetrahedron boundary
//! 0 1 2
//! 0 1 3
//! 0 2 3
//! 1 2 3
//! ```
//!
//! The first meaningful line is the header `scx 1`. Every following line
//! lists one maximal simplex as whitespace-separated non-negative vertex
//! ids. Everything from `#` to the end of a line is a comment; blank lines
//! are skipped. Loading takes the face closure of the listed simplices, so a
//! file only ever needs the maximal ones; the serializer writes exactly
//! those, sorted, which makes parse and serialize mutually inverse on
//! canonical documents.

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

pub const SCX_HEADER: &str = "scx 1";

/// Parses an SCX document into the face closure of its listed simplices.
///
/// A repeated vertex within a line and a repeated maximal face across lines
/// are both rejected, the latter because canonical set semantics would
/// otherwise silently merge two faces the author meant as distinct.
pub fn parse_scx(text: &str) -> Result<SimplicialComplex> {
    let mut lines = meaningful_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header, expected `scx 1`".into(),
    })?;
    if header.trim() != SCX_HEADER {
        return Err(Error::Parse {
            line: header_no,
            message: format!("bad header {:?}, expected `scx 1`", header.trim()),
        });
    }

    let mut seen: Vec<Vec<VertexId>> = Vec::new();
    let mut maximal: Vec<Vec<VertexId>> = Vec::new();
    for (line_no, line) in lines {
        let mut vertices = Vec::new();
        for token in line.split_whitespace() {
            let id: u32 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex id {token:?}"),
            })?;
            vertices.push(VertexId(id));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSimplex {
                vertices,
                line: Some(line_no),
            });
        }
        if seen.contains(&sorted) {
            return Err(Error::DuplicateMaximalFace {
                vertices,
                line: Some(line_no),
            });
        }
        seen.push(sorted);
        maximal.push(vertices);
    }
    SimplicialComplex::from_maximal(maximal.into_iter().map(|vs| vs.into_iter().map(|v| v.0)))
}

/// Serializes a complex as a canonical SCX document: header plus the maximal
/// simplices in sorted order.
pub fn serialize_scx(c: &SimplicialComplex) -> String {
    let mut out = String::from(SCX_HEADER);
    out.push('\n');
    for s in c.maximal_simplices() {
        let line: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Lines with comments stripped and blanks dropped, each with its 1-based
/// line number.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}
