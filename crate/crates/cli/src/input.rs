//! Reading quadrilateral documents.

use std::io::Read;
use std::path::Path;

use inellipse_core::{Point, Quadrilateral};
use serde::Deserialize;

use crate::CliError;

/// `{"vertices": [[x, y], ...], "label": "..."}`, vertices in any cyclic order.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadDocument {
    pub vertices: [[f64; 2]; 4],
    #[serde(default)]
    pub label: Option<String>,
}

impl QuadDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn quad(&self) -> Result<Quadrilateral, CliError> {
        let points = self.vertices.map(|[x, y]| Point::new(x, y));
        Quadrilateral::new(points).map_err(CliError::from)
    }
}

/// Reads the document at `path`, or standard input for `None` and `-`.
pub fn read_document(path: Option<&Path>) -> Result<QuadDocument, CliError> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
            buf
        }
    };
    QuadDocument::parse(&text)
}
