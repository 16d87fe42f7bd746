//! Plain-text formats for incidence structures and orthogonal arrays.
//!
//! Design files start with a `v b` header followed by one block per line,
//! each a space-separated list of 0-based points. Array files start with
//! `k n lambda` followed by `lambda·n²` rows of `k` symbols. In both, lines
//! whose first non-blank character is `#` and blank lines are skipped.
//!
//! Serialisation is canonical: points sorted within each block, blocks in
//! their stored order, a single trailing newline.

use std::fmt::Write as _;

use thiserror::Error;

use crate::designs::{DesignError, IncidenceStructure, OrthogonalArray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {expected} {what}, found {actual}")]
    Count { what: &'static str, expected: usize, actual: usize },
    #[error(transparent)]
    Design(#[from] DesignError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| FormatError::Syntax {
                line,
                message: format!("expected a nonnegative integer, found {t:?}"),
            })
        })
        .collect()
}

pub fn parse_design(text: &str) -> Result<IncidenceStructure, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(FormatError::MissingHeader)?;
    let head = numbers(line, first)?;
    let [v, b]: [usize; 2] = head.try_into().map_err(|h: Vec<usize>| FormatError::Syntax {
        line,
        message: format!("header needs 2 numbers (v b), found {}", h.len()),
    })?;
    let blocks = lines.map(|(l, t)| numbers(l, t)).collect::<Result<Vec<_>, _>>()?;
    if blocks.len() != b {
        return Err(FormatError::Count { what: "blocks", expected: b, actual: blocks.len() });
    }
    Ok(IncidenceStructure::new(v, blocks)?)
}

pub fn serialize_design(inc: &IncidenceStructure) -> String {
    let mut out = format!("{} {}\n", inc.num_points(), inc.num_blocks());
    for block in inc.blocks() {
        let pts: Vec<String> = block.points().iter().map(|p| p.to_string()).collect();
        writeln!(out, "{}", pts.join(" ")).unwrap();
    }
    out
}

pub fn parse_oa(text: &str) -> Result<OrthogonalArray, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(FormatError::MissingHeader)?;
    let head = numbers(line, first)?;
    let [k, n, lambda]: [usize; 3] = head.try_into().map_err(|h: Vec<usize>| FormatError::Syntax {
        line,
        message: format!("header needs 3 numbers (k n lambda), found {}", h.len()),
    })?;
    let rows = lines.map(|(l, t)| numbers(l, t)).collect::<Result<Vec<_>, _>>()?;
    let expected = lambda.saturating_mul(n).saturating_mul(n);
    if rows.len() != expected {
        return Err(FormatError::Count { what: "rows", expected, actual: rows.len() });
    }
    Ok(OrthogonalArray::new(k, n, lambda, rows)?)
}

pub fn serialize_oa(oa: &OrthogonalArray) -> String {
    let mut out = format!("{} {} {}\n", oa.k(), oa.n(), oa.lambda());
    for row in oa.rows() {
        let syms: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        writeln!(out, "{}", syms.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{fano_plane, oa_linear};

    #[test]
    fn design_round_trip() {
        let f = fano_plane();
        let text = serialize_design(&f);
        assert!(text.starts_with("7 7\n0 1 3\n"));
        assert_eq!(parse_design(&text).unwrap(), f);
        assert_eq!(serialize_design(&parse_design(&text).unwrap()), text);
    }

    #[test]
    fn comments_blank_lines_and_order() {
        let text = "# a triangle\n3 3\n\n1 0\n  # inner comment\n2 1\n0 2\n";
        let d = parse_design(text).unwrap();
        assert_eq!(serialize_design(&d), "3 3\n0 1\n1 2\n0 2\n");
    }

    #[test]
    fn design_errors() {
        assert_eq!(parse_design(""), Err(FormatError::MissingHeader));
        assert_eq!(parse_design("# only\n"), Err(FormatError::MissingHeader));
        assert!(matches!(parse_design("3\n0 1\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_design("3 1\n0 x\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_design("3 2\n0 1\n"), Err(FormatError::Count { expected: 2, actual: 1, .. })));
        assert!(matches!(parse_design("3 1\n0 3\n"), Err(FormatError::Design(_))));
        assert!(matches!(parse_design("3 1\n0 -1\n"), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn oa_round_trip() {
        let oa = oa_linear(5, 3).unwrap();
        let text = serialize_oa(&oa);
        assert!(text.starts_with("3 5 1\n0 0 0\n1 1 1\n"));
        assert_eq!(parse_oa(&text).unwrap(), oa);
    }

    #[test]
    fn oa_errors() {
        assert!(matches!(parse_oa("2 2 1\n0 0\n"), Err(FormatError::Count { expected: 4, actual: 1, .. })));
        assert!(matches!(parse_oa("2 2 1\n0 0\n0 1\n1 0\n1 2\n"), Err(FormatError::Design(_))));
        assert!(matches!(parse_oa("2 2\n"), Err(FormatError::Syntax { line: 1, .. })));
    }
}
