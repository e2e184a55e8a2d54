//! Text formats for generator matrices and permutations.
//!
//! A code file is a header `n k` followed by `k` rows of `n` characters from
//! `{0, 1}`; the leftmost character is coordinate 1. Blank lines and lines
//! starting with `#` are ignored anywhere. A permutation file holds one line
//! of `n` space-separated 1-based images.

use std::fmt::Write as _;
use std::path::Path;

use semidual::{BitVector, Involution, LinearCode};

use crate::CliError;

/// A parsed generator matrix, before reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub n: usize,
    pub rows: Vec<BitVector>,
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        file: None,
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = content_lines(text);
        let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header \"n k\""))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, k] = fields[..] else {
            return Err(parse_error(header_line, format!("header must be \"n k\", found {header:?}")));
        };
        let parse_field = |s: &str, name: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(header_line, format!("{name} must be a non-negative integer, found {s:?}")))
        };
        let (n, k) = (parse_field(n, "n")?, parse_field(k, "k")?);
        if n == 0 {
            return Err(parse_error(header_line, "n must be positive"));
        }
        let mut rows = Vec::with_capacity(k);
        let mut last_line = header_line;
        for (line, row) in lines {
            if rows.len() == k {
                return Err(parse_error(line, format!("more than the {k} rows announced in the header")));
            }
            if row.chars().count() != n {
                return Err(parse_error(line, format!("row has {} characters, expected {n}", row.chars().count())));
            }
            if let Some((col, ch)) = row.chars().enumerate().find(|(_, c)| !matches!(c, '0' | '1')) {
                return Err(parse_error(line, format!("invalid character {ch:?} in column {}", col + 1)));
            }
            rows.push(BitVector::from_indices(n, row.char_indices().filter(|(_, c)| *c == '1').map(|(i, _)| i)));
            last_line = line;
        }
        if rows.len() < k {
            return Err(parse_error(last_line, format!("expected {k} rows, found {}", rows.len())));
        }
        Ok(Self { n, rows })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| e.in_file(path))
    }

    /// The spanned code, with a warning when the rows are dependent.
    pub fn to_code(&self) -> Result<(LinearCode, Option<String>), CliError> {
        let code = LinearCode::new(self.n, self.rows.clone())?;
        let warning = (code.dim() < self.rows.len())
            .then(|| format!("{} rows have rank {}; reduced on load", self.rows.len(), code.dim()));
        Ok((code, warning))
    }
}

/// Header and reduced row echelon basis; reading it back gives the same code.
pub fn write_code(code: &LinearCode) -> String {
    let mut out = format!("{} {}\n", code.n(), code.dim());
    for row in code.basis() {
        writeln!(out, "{row}").expect("writing to a String cannot fail");
    }
    out
}

pub fn parse_perm(text: &str) -> Result<Involution, CliError> {
    let mut lines = content_lines(text);
    let (line, body) = lines.next().ok_or_else(|| parse_error(1, "empty permutation file"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(extra, "permutation must be a single line"));
    }
    let images = body
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_error(line, format!("{t:?} is not a positive integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    Involution::from_one_based(&images).map_err(|e| parse_error(line, e.to_string()))
}

pub fn read_perm(path: &Path) -> Result<Involution, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_perm(&text).map_err(|e| e.in_file(path))
}

pub fn write_perm(sigma: &Involution) -> String {
    let images: Vec<String> = sigma.one_based_images().iter().map(ToString::to_string).collect();
    format!("{}\n", images.join(" "))
}
