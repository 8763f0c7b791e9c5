//! Plain-text Cayley table format.
//!
//! ```text
//! # left-zero semigroup of order 2
//! 2
//! 0 0
//! 1 1
//! ```
//!
//! The first content line is the order `k`, followed by `k` rows of `k`
//! whitespace-separated 0-based ids. Lines whose first non-blank character
//! is `#` are comments; blank lines are skipped.

use thiserror::Error;

use super::{validate_table, AlgebraError, CayleyTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: expected {expected} more row(s)")]
    Truncated { expected: usize },
    #[error("line {line}: trailing content after the table")]
    Trailing { line: usize },
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } | ParseError::Truncated { .. } | ParseError::Trailing { .. } => {
                "PARSE_ERROR"
            }
            ParseError::Invalid(e) => e.code(),
        }
    }
}

fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

pub fn parse_table(input: &str) -> Result<CayleyTable, ParseError> {
    let mut lines = content_lines(input);
    let (line_no, header) = lines.next().ok_or(ParseError::Syntax {
        line: 0,
        message: "missing order line".into(),
    })?;
    let order: usize = header.parse().map_err(|_| ParseError::Syntax {
        line: line_no,
        message: format!("expected order, found {header:?}"),
    })?;
    let mut raw = Vec::with_capacity(order);
    for remaining in (1..=order).rev() {
        let (line_no, line) = lines.next().ok_or(ParseError::Truncated { expected: remaining })?;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| ParseError::Syntax {
                    line: line_no,
                    message: format!("expected an integer, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        raw.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Trailing { line });
    }
    Ok(validate_table(order, &raw)?)
}

pub fn format_table(s: &CayleyTable) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
