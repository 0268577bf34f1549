//! Plain-text vertex files.
//!
//! ```text
//! # comment lines start with '#'
//! 2 5
//! 1 0
//! 0 1
//! 0 -1
//! 1 -1
//! -1 1
//! ```
//!
//! The header gives the dimension `d` and the vertex count `n`, followed by
//! one vertex per line. Vertices are rows, so a facet's vertex matrix is
//! read off directly. Output uses single spaces, LF line ends and no
//! comments.

use std::fmt::Write as _;

use fanotope_core::{IntVector, Polytope};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line 'd n'")]
    MissingHeader,
    #[error("header promises {expected} vertices, found {found}")]
    Count { expected: usize, found: usize },
    #[error("{n} vertices cannot span dimension {d}; need at least {}", d + 1)]
    TooFew { d: usize, n: usize },
}

/// Dimension and vertex rows of a vertex file, not yet validated as a
/// polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeFile {
    pub dim: usize,
    pub rows: Vec<IntVector>,
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(ParseError::Syntax { line: hl, msg: "header must be 'd n'".into() });
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::Syntax { line: hl, msg: format!("'{s}' is not a non-negative integer") })
        };
        let (d, n) = (num(head[0])?, num(head[1])?);
        if d == 0 {
            return Err(ParseError::Syntax { line: hl, msg: "dimension must be positive".into() });
        }
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| ParseError::Syntax { line: ln, msg: format!("'{t}' is not an integer") })
                })
                .collect::<Result<IntVector, _>>()?;
            if row.len() != d {
                return Err(ParseError::Syntax {
                    line: ln,
                    msg: format!("expected {d} coordinates, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(ParseError::Count { expected: n, found: rows.len() });
        }
        if n < d + 1 {
            return Err(ParseError::TooFew { d, n });
        }
        Ok(Self { dim: d, rows })
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        Self { dim: p.dim(), rows: p.vertices().to_vec() }
    }

    pub fn to_polytope(&self) -> fanotope_core::Result<Polytope> {
        Polytope::new(self.dim, self.rows.clone())
    }

    pub fn serialize(&self) -> String {
        let mut s = format!("{} {}\n", self.dim, self.rows.len());
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let f = PolytopeFile::parse("# pentagon\n2 5\n1 0\n0 1\n# mid\n0 -1\n1 -1\n-1 1\n").unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.rows.len(), 5);
        assert_eq!(f.serialize(), "2 5\n1 0\n0 1\n0 -1\n1 -1\n-1 1\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(PolytopeFile::parse("2 3\n1 0\n0 1 1\n-1 -1\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert_eq!(PolytopeFile::parse("2 2\n1 0\n0 1\n"), Err(ParseError::TooFew { d: 2, n: 2 }));
        assert_eq!(PolytopeFile::parse("2 4\n1 0\n0 1\n-1 0\n"), Err(ParseError::Count { expected: 4, found: 3 }));
        assert_eq!(PolytopeFile::parse("# only\n"), Err(ParseError::MissingHeader));
        assert!(PolytopeFile::parse("2\n").is_err());
        assert!(PolytopeFile::parse("2 3\n1 x\n0 1\n-1 -1\n").is_err());
    }
}
