//! JSON matrix documents.
//!
//! An interval matrix is `{"rows": m, "cols": n, "lower": [[..]], "upper": [[..]]}`;
//! a real matrix may instead be written `{"rows": m, "cols": n, "entries": [[..]]}`.
//! Entries are JSON numbers or strings holding a decimal or `p/q`. Numbers are
//! read from their literal text, so no precision is lost. Output always uses
//! strings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{IntervalMatrix, Position, RealMatrix};
use crate::rational::{self, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDocument {
    rows: usize,
    cols: usize,
    lower: Option<Vec<Vec<Value>>>,
    upper: Option<Vec<Vec<Value>>>,
    entries: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub lower: Vec<Vec<String>>,
    pub upper: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn format_err(message: impl Into<String>) -> MongeError {
    MongeError::Format(message.into())
}

fn parse_value(value: &Value, name: &str, p: Position) -> Result<Rational> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(format_err(format!("{name} entry at {p} is not a number: {other}"))),
    };
    rational::parse(&text).map_err(|_| format_err(format!("{name} entry at {p} is not a number: {text:?}")))
}

fn parse_grid(grid: &[Vec<Value>], rows: usize, cols: usize, name: &str) -> Result<RealMatrix> {
    if grid.len() != rows {
        return Err(MongeError::DimensionMismatch {
            left: format!("rows = {rows}"),
            right: format!("{} rows in \"{name}\"", grid.len()),
        });
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return Err(MongeError::DimensionMismatch {
                left: format!("cols = {cols}"),
                right: format!("{} entries in row {} of \"{name}\"", row.len(), i + 1),
            });
        }
        for (j, value) in row.iter().enumerate() {
            data.push(parse_value(value, name, Position::new(i, j))?);
        }
    }
    RealMatrix::from_vec(rows, cols, data)
}

/// Parses either document form into an interval matrix.
pub fn parse_interval_matrix(text: &str) -> Result<IntervalMatrix> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| {
        format_err(format!("{e}"))
    })?;
    if doc.rows == 0 || doc.cols == 0 {
        return Err(MongeError::EmptyMatrix {
            rows: doc.rows,
            cols: doc.cols,
        });
    }
    match (doc.lower, doc.upper, doc.entries) {
        (Some(lower), Some(upper), None) => {
            let lower = parse_grid(&lower, doc.rows, doc.cols, "lower")?;
            let upper = parse_grid(&upper, doc.rows, doc.cols, "upper")?;
            IntervalMatrix::from_bounds(&lower, &upper)
        }
        (None, None, Some(entries)) => Ok(parse_grid(&entries, doc.rows, doc.cols, "entries")?.to_interval()),
        _ => Err(format_err("expected either \"lower\" and \"upper\" or \"entries\"")),
    }
}

/// Parses a document describing a real matrix; interval documents are
/// accepted when every entry is degenerate.
pub fn parse_real_matrix(text: &str) -> Result<RealMatrix> {
    let m = parse_interval_matrix(text)?;
    if let Some((p, _)) = m.indexed().find(|(_, a)| !a.is_degenerate()) {
        return Err(format_err(format!("expected a real matrix, entry {p} is a proper interval")));
    }
    Ok(m.lower())
}

/// Parses a scalar given as a number, a `p/q` string, or `[lo, hi]`.
pub fn parse_interval(text: &str) -> Result<Interval> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| format_err(format!("expected `[lo, hi]`, got {trimmed:?}")))?;
        let (lo, hi) = (rational::parse(lo.trim())?, rational::parse(hi.trim())?);
        return Interval::new(lo, hi);
    }
    Ok(Interval::point(rational::parse(trimmed)?))
}

fn strings(m: &RealMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(rational::format).collect())
        .collect()
}

pub fn interval_matrix_json(m: &IntervalMatrix) -> IntervalMatrixJson {
    IntervalMatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        lower: strings(&m.lower()),
        upper: strings(&m.upper()),
    }
}

pub fn real_matrix_json(m: &RealMatrix) -> RealMatrixJson {
    RealMatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: strings(m),
    }
}

pub fn write_interval_matrix(m: &IntervalMatrix) -> String {
    serde_json::to_string_pretty(&interval_matrix_json(m)).expect("matrix serializes")
}

pub fn write_real_matrix(m: &RealMatrix) -> String {
    serde_json::to_string_pretty(&real_matrix_json(m)).expect("matrix serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn reads_both_forms() {
        let text = r#"{"rows": 2, "cols": 2, "lower": [[0, 5], [0, 0]], "upper": [[5, 5], ["8", "0"]]}"#;
        let m = parse_interval_matrix(text).unwrap();
        assert_eq!(
            m,
            IntervalMatrix::from_integer_bounds(&[&[(0, 5), (5, 5)], &[(0, 8), (0, 0)]]).unwrap()
        );
        let text = r#"{"rows": 1, "cols": 3, "entries": [[0.1, "1/3", -2e1]]}"#;
        let r = parse_real_matrix(text).unwrap();
        assert_eq!(r.row(0), &[ratio(1, 10), ratio(1, 3), int(-20)]);
    }

    #[test]
    fn numbers_keep_their_digits() {
        let text = r#"{"rows": 1, "cols": 1, "entries": [[0.30000000000000000001]]}"#;
        let r = parse_real_matrix(text).unwrap();
        assert_eq!(*r.get(0, 0), rational::parse("0.30000000000000000001").unwrap());
    }

    #[test]
    fn round_trip() {
        let m = IntervalMatrix::from_bounds(
            &RealMatrix::from_rows(vec![vec![ratio(-7, 3), int(2)]]).unwrap(),
            &RealMatrix::from_rows(vec![vec![ratio(1, 8), int(2)]]).unwrap(),
        )
        .unwrap();
        assert_eq!(parse_interval_matrix(&write_interval_matrix(&m)).unwrap(), m);
        let r = m.lower();
        assert_eq!(parse_real_matrix(&write_real_matrix(&r)).unwrap(), r);
    }

    #[test]
    fn rejects_bad_documents() {
        let inverted = r#"{"rows": 1, "cols": 2, "lower": [[0, 3]], "upper": [[1, 2]]}"#;
        let err = parse_interval_matrix(inverted).unwrap_err();
        assert_eq!(err, MongeError::InvertedBounds(Position::new(0, 1)));
        assert!(err.to_string().contains("(1, 2)"));

        let err = parse_interval_matrix(r#"{"rows": 1, "cols": 2, "entries": [[0, 1]"#).unwrap_err();
        assert!(matches!(err, MongeError::Format(ref msg) if msg.contains("line 1")), "{err}");

        let short = r#"{"rows": 2, "cols": 2, "entries": [[0, 1]]}"#;
        assert!(matches!(parse_interval_matrix(short), Err(MongeError::DimensionMismatch { .. })));

        let mixed = r#"{"rows": 1, "cols": 1, "entries": [[1]], "lower": [[1]]}"#;
        assert!(matches!(parse_interval_matrix(mixed), Err(MongeError::Format(_))));

        let word = r#"{"rows": 1, "cols": 1, "entries": [["abc"]]}"#;
        assert!(matches!(parse_interval_matrix(word), Err(MongeError::Format(_))));

        let proper = r#"{"rows": 1, "cols": 1, "lower": [[0]], "upper": [[1]]}"#;
        assert!(matches!(parse_real_matrix(proper), Err(MongeError::Format(_))));
    }

    #[test]
    fn interval_scalars() {
        assert_eq!(parse_interval("[6, 8]").unwrap(), Interval::new(int(6), int(8)).unwrap());
        assert_eq!(parse_interval("1/2").unwrap(), Interval::point(ratio(1, 2)));
        assert!(parse_interval("[3, 1]").is_err());
    }
}
