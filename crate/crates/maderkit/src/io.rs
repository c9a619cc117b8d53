//! Text digraph format: first line `n m`, then `m` lines `u v` (an arc
//! u->v), 0-indexed ASCII with LF line endings. Lines starting with `#`
//! are ignored on input; output is canonical (arcs sorted, no comments).

use crate::digraph::Digraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: crate::error::GraphError,
    },
    #[error("expected {expected} arc lines, found {found}")]
    ArcCountMismatch { expected: usize, found: usize },
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut nums = line.split_whitespace().map(|t| {
            t.parse::<usize>().map_err(|_| ParseError::Malformed {
                line: idx + 1,
                msg: format!("expected a nonnegative integer, found {t:?}"),
            })
        });
        let a = nums.next().ok_or_else(|| ParseError::Malformed {
            line: idx + 1,
            msg: "expected two integers".into(),
        })??;
        let b = nums.next().ok_or_else(|| ParseError::Malformed {
            line: idx + 1,
            msg: "expected two integers".into(),
        })??;
        if nums.next().transpose()?.is_some() {
            return Err(ParseError::Malformed { line: idx + 1, msg: "expected exactly two integers".into() });
        }
        if header.is_none() {
            header = Some((a, b));
        } else {
            arcs.push((a, b));
        }
    }
    let (n, m) = header.ok_or(ParseError::Malformed { line: 0, msg: "missing `n m` header".into() })?;
    if arcs.len() != m {
        return Err(ParseError::ArcCountMismatch { expected: m, found: arcs.len() });
    }
    Digraph::new(n, &arcs).map_err(|source| ParseError::Graph { line: 0, source })
}

pub fn write_digraph(d: &Digraph) -> String {
    let arcs = d.arcs();
    let mut out = format!("{} {}\n", d.order(), arcs.len());
    for (u, v) in arcs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
