use std::io::Read;

use serde_json::{json, Value};
use supertrop::error::Error;
use supertrop::format::{matrix_to_json, parse_inline, parse_matrix};
use supertrop::{Matrix, Scalar, Vector};

pub const SCHEMA: &str = "supertrop/1";

/// Exit statuses.
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Failure of a command together with the status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: if e.is_parse() { EXIT_PARSE } else { EXIT_DOMAIN },
            message: e.to_string(),
        }
    }
}

pub fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        status: EXIT_PARSE,
        message: message.into(),
    }
}

/// Result of a command, rendered as text or JSON.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: u8,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            status: 0,
        }
    }

    pub fn render(&self, command: &str, as_json: bool) -> String {
        if as_json {
            let doc = json!({ "schema": SCHEMA, "command": command, "result": self.json });
            serde_json::to_string_pretty(&doc).expect("JSON output")
        } else {
            self.text.clone()
        }
    }
}

/// Matrices named by positional paths (`-` reads stdin) followed by the
/// `--inline` literals.
pub fn load_matrices(paths: &[String], inline: &[String]) -> Result<Vec<Matrix>, Failure> {
    let mut out = Vec::new();
    for path in paths {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| input_error(format!("reading stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| input_error(format!("reading {path}: {e}")))?
        };
        out.push(parse_matrix(&text).map_err(|e| input_error(format!("{path}: {e}")))?);
    }
    for literal in inline {
        out.push(parse_inline(literal)?);
    }
    Ok(out)
}

pub fn expect_count(ms: Vec<Matrix>, n: usize, what: &str) -> Result<Vec<Matrix>, Failure> {
    if ms.len() != n {
        return Err(input_error(format!(
            "expected {n} input(s) ({what}), got {}",
            ms.len()
        )));
    }
    Ok(ms)
}

pub fn matrix_text(a: &Matrix) -> String {
    a.to_string()
}

pub fn matrix_json(a: &Matrix) -> Value {
    matrix_to_json(a)
}

pub fn vectors_text(vs: &[Vector]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n")
}

pub fn single_row(a: &Matrix, what: &str) -> Result<Vec<Scalar>, Failure> {
    if a.rows() != 1 {
        return Err(input_error(format!("{what} must be a single row, got {} rows", a.rows())));
    }
    Ok(a.row(0).into_entries())
}
