//! Text encodings of matrices: `plain16` and JSON.
//!
//! `plain16` is sixteen whitespace-separated decimals in row-major order. A
//! stream may hold any number of matrices; on output each matrix is one line.
//! JSON input is one or more `{"matrix": [[..],[..],[..],[..]]}` documents.
//! Numbers are written in shortest round-trip form so piping is lossless.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rotation4::Mat4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("invalid number {token:?} at position {position}")]
    InvalidNumber { token: String, position: usize },
    #[error("non-finite value {token:?} at position {position}")]
    NonFinite { token: String, position: usize },
    #[error("expected a multiple of 16 values, found {found}")]
    WrongCount { found: usize },
    #[error("input contains no matrix")]
    Empty,
    #[error("invalid JSON matrix document: {0}")]
    Json(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum InputFormat {
    /// Detect from the first non-blank character (`{` selects JSON).
    #[default]
    Auto,
    Plain16,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Stdin,
    Path(PathBuf),
}

/// Matrices read from one input, in stream order.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument {
    pub source: Source,
    pub format: InputFormat,
    pub matrices: Vec<Mat4>,
}

impl MatrixDocument {
    pub fn parse(source: Source, text: &str, format: InputFormat) -> Result<Self, ParseError> {
        let format = match format {
            InputFormat::Auto if text.trim_start().starts_with('{') => InputFormat::Json,
            InputFormat::Auto => InputFormat::Plain16,
            f => f,
        };
        let matrices = match format {
            InputFormat::Json => parse_json(text)?,
            _ => parse_plain16(text)?,
        };
        Ok(Self {
            source,
            format,
            matrices,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMatrix {
    matrix: [[f64; 4]; 4],
}

pub fn parse_plain16(text: &str) -> Result<Vec<Mat4>, ParseError> {
    let mut values = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let v: f64 = token.parse().map_err(|_| ParseError::InvalidNumber {
            token: token.to_string(),
            position,
        })?;
        if !v.is_finite() {
            return Err(ParseError::NonFinite {
                token: token.to_string(),
                position,
            });
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err(ParseError::Empty);
    }
    if values.len() % 16 != 0 {
        return Err(ParseError::WrongCount { found: values.len() });
    }
    Ok(values
        .chunks_exact(16)
        .map(|c| Mat4::from_row_major(c.try_into().expect("chunk of 16")))
        .collect())
}

pub fn parse_json(text: &str) -> Result<Vec<Mat4>, ParseError> {
    let mut out = Vec::new();
    for doc in serde_json::Deserializer::from_str(text).into_iter::<JsonMatrix>() {
        let doc = doc.map_err(|e| ParseError::Json(e.to_string()))?;
        let m = Mat4::from_rows(doc.matrix);
        if !m.is_finite() {
            return Err(ParseError::Json("non-finite entry".into()));
        }
        out.push(m);
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

/// One line of sixteen row-major values.
pub fn format_plain16(m: &Mat4) -> String {
    let mut s = String::with_capacity(16 * 24);
    for (k, v) in m.to_row_major().iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        write!(s, "{v}").expect("write to String");
    }
    s
}

/// `{"matrix": [[...], ...]}` on one line.
pub fn format_json(m: &Mat4) -> String {
    serde_json::to_string(&JsonMatrix { matrix: *m.rows() }).expect("finite matrix serializes")
}

pub fn format_matrix(m: &Mat4, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format_plain16(m),
        OutputFormat::Json => format_json(m),
    }
}
