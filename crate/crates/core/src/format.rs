//! Text and JSON encodings for matrices.
//!
//! Text: one row per line, whitespace-separated scalar tokens, `#` starts a
//! comment line. Inline: the same with `;` as the row break. JSON: an object
//! `{"rows": [["0", "1"], ["2", "0"]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return parse_matrix_json(trimmed);
    }
    parse_rows(
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#')),
    )
}

pub fn parse_inline(text: &str) -> Result<Matrix> {
    parse_rows(text.split(';').map(str::trim).filter(|l| !l.is_empty()))
}

fn parse_rows<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Matrix> {
    let rows = lines
        .enumerate()
        .map(|(n, line)| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<Scalar>().map_err(|e| match e {
                        Error::Parse(msg) => Error::Parse(format!("row {}: {msg}", n + 1)),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<Scalar>>,
}

pub fn parse_matrix_json(text: &str) -> Result<Matrix> {
    let parsed: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    Matrix::from_rows(parsed.rows).map_err(|e| Error::Parse(e.to_string()))
}

/// Single-line form accepted by [`parse_inline`]: rows joined by `; `.
pub fn to_inline(a: &Matrix) -> String {
    a.row_vectors()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn matrix_to_json(a: &Matrix) -> serde_json::Value {
    serde_json::json!({ "rows": a.row_vectors().iter().map(|r| r.entries().to_vec()).collect::<Vec<_>>() })
}

pub fn vector_to_json(v: &Vector) -> serde_json::Value {
    serde_json::to_value(v.entries()).expect("scalars serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_with_comments() {
        let a = parse_matrix("# a 2x2\n0 1\n\n  2   0g\n").unwrap();
        assert_eq!(a.to_string(), "0 1\n2 0g");
        assert!(parse_matrix("0 1\n2").is_err());
        assert!(parse_matrix("0 x").unwrap_err().is_parse());
        assert!(parse_matrix("").is_err());
    }

    #[test]
    fn json_form() {
        let a = parse_matrix(r#"{"rows": [["0", "-inf"], ["1/2g", "3"]]}"#).unwrap();
        assert_eq!(a, parse_inline("0 -inf; 1/2g 3").unwrap());
        assert_eq!(parse_matrix_json(&matrix_to_json(&a).to_string()).unwrap(), a);
        assert!(parse_matrix(r#"{"rows": [["0", 1]]}"#).is_err());
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        prop_oneof![
            Just(Scalar::Zero),
            (-50i128..50, 1i128..7).prop_map(|(n, d)| Scalar::Tangible(
                crate::scalar::GroupValue::new(n, d).unwrap()
            )),
            (-50i128..50, 1i128..7).prop_map(|(n, d)| Scalar::Ghost(
                crate::scalar::GroupValue::new(n, d).unwrap()
            )),
        ]
    }

    proptest! {
        #[test]
        fn printed_matrices_reparse(rows in 1usize..5, cols in 1usize..5, cells in prop::collection::vec(scalar(), 25)) {
            let a = Matrix::from_fn(rows, cols, |i, j| cells[i * 5 + j]);
            prop_assert_eq!(parse_matrix(&a.to_string()).unwrap(), a.clone());
            prop_assert_eq!(parse_matrix(&matrix_to_json(&a).to_string()).unwrap(), a);
        }
    }
}
