//! Plain-text design files.
//!
//! ```text
//! # comment
//! n k b
//! i_1 i_2 ... i_k      (b rows, ascending 1-based points)
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are ignored. In
//! rows-as-vectors mode the rows may have any size, `k` in the header is not
//! enforced, and a row consisting of `-` is the zero vector.

use std::fmt::Write as _;

use crate::design::IncidenceStructure;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Parsed contents of a design or array file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSetFile {
    pub n: u32,
    pub k: u32,
    pub rows: Vec<PointSet>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_uint(tok: &str, line: usize, what: &str) -> Result<u32> {
    tok.parse::<u32>()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses a file; with `constant_k` every row must have exactly `k` points.
pub fn parse_point_sets(text: &str, constant_k: bool) -> Result<PointSetFile> {
    let mut header: Option<(u32, u32, usize)> = None;
    let mut rows = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((n, k, b)) = header else {
            if toks.len() != 3 {
                return Err(parse_err(line_no, "header must be `n k b`"));
            }
            let n = parse_uint(toks[0], line_no, "n")?;
            let k = parse_uint(toks[1], line_no, "k")?;
            let b = parse_uint(toks[2], line_no, "b")? as usize;
            if n == 0 || n > crate::pointset::MAX_AMBIENT {
                return Err(parse_err(line_no, format!("n = {n} outside [1, 64]")));
            }
            if k > n {
                return Err(parse_err(line_no, format!("k = {k} exceeds n = {n}")));
            }
            header = Some((n, k, b));
            continue;
        };
        if rows.len() == b {
            return Err(parse_err(line_no, format!("more than the declared {b} rows")));
        }
        let points: Vec<u32> = if !constant_k && toks == ["-"] {
            Vec::new()
        } else {
            toks.iter()
                .map(|t| parse_uint(t, line_no, "a point index"))
                .collect::<Result<_>>()?
        };
        if points.windows(2).any(|p| p[0] >= p[1]) {
            return Err(parse_err(line_no, "point indices must be strictly ascending"));
        }
        if constant_k && points.len() != k as usize {
            return Err(parse_err(
                line_no,
                format!("row has {} points, expected {k}", points.len()),
            ));
        }
        let set = PointSet::from_points(n, &points).map_err(|e| parse_err(line_no, e.to_string()))?;
        if !seen.insert(set.mask()) {
            return Err(parse_err(line_no, format!("duplicate row {set}")));
        }
        rows.push(set);
    }
    let Some((n, k, b)) = header else {
        return Err(parse_err(last_line.max(1), "missing `n k b` header"));
    };
    if rows.len() != b {
        return Err(parse_err(
            last_line.max(1),
            format!("declared {b} rows, found {}", rows.len()),
        ));
    }
    Ok(PointSetFile { n, k, rows })
}

pub fn parse_design(text: &str) -> Result<IncidenceStructure> {
    let file = parse_point_sets(text, true)?;
    let header_line = text
        .lines()
        .position(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
        .map_or(1, |i| i + 1);
    IncidenceStructure::new(file.n, file.k, file.rows).map_err(|e| parse_err(header_line, e.to_string()))
}

fn render_rows(n: u32, k: u32, rows: &[PointSet]) -> String {
    let mut out = format!("{n} {k} {}\n", rows.len());
    for r in rows {
        let pts = r.points();
        if pts.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let line: Vec<String> = pts.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn render_design(d: &IncidenceStructure) -> String {
    render_rows(d.n(), d.k(), d.blocks())
}

pub fn render_point_sets(file: &PointSetFile) -> String {
    render_rows(file.n, file.k, &file.rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fano_round_trip() {
        let text = render_design(&fixtures::fano());
        assert!(text.starts_with("7 3 7\n1 2 3\n"));
        assert_eq!(parse_design(&text).unwrap(), fixtures::fano());
        assert_eq!(render_design(&parse_design(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# fano\n\n7 3 2  # header\n1 2 3\n# mid\n1 4 5 # trailing\n";
        let d = parse_design(text).unwrap();
        assert_eq!(d.b(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("garbage\n", 1),
            ("3 2 1\n1 x\n", 2),
            ("3 2 1\n2 1\n", 2),
            ("3 2 1\n1 2 3\n", 2),
            ("3 2 1\n1 4\n", 2),
            ("3 2 2\n1 2\n", 2),
            ("3 2 1\n1 2\n1 3\n", 3),
        ];
        for (text, line) in cases {
            match parse_design(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
        assert!(parse_design("").is_err());
        assert!(matches!(parse_design("3 2 2\n1 2\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_design("3 2 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn rows_as_vectors() {
        let text = "3 0 4\n-\n1 2\n1 3\n2 3\n";
        let f = parse_point_sets(text, false).unwrap();
        assert_eq!(f.rows.len(), 4);
        assert_eq!(f.rows[0].weight(), 0);
        assert_eq!(render_point_sets(&f), text);
        assert!(parse_point_sets(text, true).is_err());
    }
}
