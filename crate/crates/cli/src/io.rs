//! JSON documents accepted on the command line.

use std::fs;
use std::path::Path;

use csp_core::{CspMatrix, CycPoly, EvalTable};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{CliError, Result};

/// One of the three input schemas, told apart by their keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Document {
    /// `{"n": 6, "coeffs": [...]}`
    Poly(CycPoly),
    /// `{"n": 6, "values": [...]}`
    Table(EvalTable),
    /// `{"n": 6, "rows": [["p/q", ...], ...]}`
    Matrix(CspMatrix),
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }
}

/// Deserializes `text`, reporting the field path and position of any error.
pub fn parse_as<T: DeserializeOwned>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." || path.is_empty() {
            CliError::Schema(inner.to_string())
        } else {
            CliError::Schema(format!("at `{path}`: {inner}"))
        }
    })?;
    de.end().map_err(|e| CliError::Schema(e.to_string()))?;
    Ok(value)
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = parse_as(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Schema("expected a JSON object".into()))?;
    if obj.contains_key("rows") {
        parse_as(text).map(Document::Matrix)
    } else if obj.contains_key("coeffs") {
        parse_as(text).map(Document::Poly)
    } else if obj.contains_key("values") {
        parse_as(text).map(Document::Table)
    } else {
        Err(CliError::Schema(
            "object has none of the keys \"coeffs\", \"values\" or \"rows\"".into(),
        ))
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads and parses a document file.
pub fn io_roundtrip(path: &Path) -> Result<Document> {
    parse_document(&read_file(path)?)
}
