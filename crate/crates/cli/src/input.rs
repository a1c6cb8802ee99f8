//! The permutation file format: one permutation per line, whitespace
//! separated signed integers, `#` to end of line is a comment.

use std::fmt::Write as _;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}, column {column}: `{token}` is not a signed integer")]
    Parse { line: usize, column: usize, token: String },
    #[error("line {line} has {found} elements, the first permutation has {expected}")]
    LengthMismatch { line: usize, expected: usize, found: usize },
}

/// Reads a permutation file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<Vec<Vec<i64>>, InputError> {
    let io_err = |source| InputError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<Vec<Vec<i64>>, InputError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let body = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut rest = body;
        while let Some(start) = rest.find(|c: char| !c.is_ascii_whitespace()) {
            let token_rest = &rest[start..];
            let len = token_rest.find(|c: char| c.is_ascii_whitespace()).unwrap_or(token_rest.len());
            let token = &token_rest[..len];
            let value = token.parse::<i64>().map_err(|_| InputError::Parse {
                line: i + 1,
                column: body.len() - token_rest.len() + 1,
                token: token.to_string(),
            })?;
            row.push(value);
            rest = &token_rest[len..];
        }
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(InputError::LengthMismatch {
                    line: i + 1,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Writes rows in the input format, LF line endings.
pub fn format_rows(rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}
