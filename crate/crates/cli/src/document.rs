//! The JSON triangle document and its validation.

use std::fmt;
use std::io::Read;

use dstrig_core::{DeSitterPoint, DeSitterTriangle, MinkVec3, EPS_UNIT};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exit::Failure;

pub const SCHEMA: u32 = 1;
pub const SIGNATURE: &str = "-++";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleDocument {
    #[serde(default = "schema")]
    pub schema: u32,
    #[serde(default = "signature")]
    pub signature: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Rows are `(x0, x1, x2)`, `x0` the time coordinate.
    pub vertices: Vec<Vec<f64>>,
}

fn schema() -> u32 {
    SCHEMA
}

fn signature() -> String {
    SIGNATURE.to_owned()
}

impl TriangleDocument {
    pub fn from_triangle(tri: &DeSitterTriangle, name: Option<String>, seed: Option<u64>) -> Self {
        Self {
            schema: SCHEMA,
            signature: signature(),
            name,
            seed,
            vertices: tri
                .vertices()
                .iter()
                .map(|p| p.vec().to_array().to_vec())
                .collect(),
        }
    }

    /// Checks the header and every row, and returns the three points.
    pub fn points(&self) -> Result<[DeSitterPoint; 3], Failure> {
        if self.schema != SCHEMA {
            return Err(Failure::input(format!(
                "unsupported schema {}, expected {SCHEMA}",
                self.schema
            )));
        }
        if self.signature != SIGNATURE {
            return Err(Failure::input(format!(
                "unsupported signature `{}`, expected `{SIGNATURE}`",
                self.signature
            )));
        }
        if self.vertices.len() != 3 {
            return Err(Failure::input(format!(
                "expected 3 vertex rows, found {}",
                self.vertices.len()
            )));
        }
        let mut out = Vec::with_capacity(3);
        for (i, row) in self.vertices.iter().enumerate() {
            let &[x0, x1, x2] = row.as_slice() else {
                return Err(Failure::input(format!(
                    "vertex row {i} has {} entries, expected 3",
                    row.len()
                )));
            };
            let v = MinkVec3::try_new(x0, x1, x2)
                .map_err(|e| Failure::input(format!("vertex row {i}: {e}")))?;
            let q = v.norm_sq();
            if (q - 1.0).abs() > EPS_UNIT {
                return Err(Failure::input(format!(
                    "vertex row {i} is off the quadric: <v,v> = {q} (must be 1 within {EPS_UNIT:e})"
                )));
            }
            out.push(
                DeSitterPoint::new(v)
                    .map_err(|e| Failure::input(format!("vertex row {i}: {e}")))?,
            );
        }
        Ok([out[0], out[1], out[2]])
    }

    pub fn label(&self, index: usize) -> String {
        match &self.name {
            Some(n) => format!("document {index} ({n})"),
            None => format!("document {index}"),
        }
    }
}

impl fmt::Display for TriangleDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string(self).map_err(|_| fmt::Error)?;
        f.write_str(&s)
    }
}

pub fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading standard input: {e}")))?;
    } else {
        s = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("reading {path}: {e}")))?;
    }
    Ok(s)
}

/// Parses concatenated or newline-delimited documents; a top-level array is
/// flattened into its elements.
pub fn parse_documents(text: &str) -> Result<Vec<TriangleDocument>, Failure> {
    let mut docs = Vec::new();
    for value in serde_json::Deserializer::from_str(text).into_iter::<Value>() {
        let value = value.map_err(|e| Failure::input(format!("malformed JSON: {e}")))?;
        let items = match value {
            Value::Array(items) => items,
            v => vec![v],
        };
        for item in items {
            let doc = serde_json::from_value(item)
                .map_err(|e| Failure::input(format!("document {}: {e}", docs.len())))?;
            docs.push(doc);
        }
    }
    if docs.is_empty() {
        return Err(Failure::input("no triangle document in input".into()));
    }
    Ok(docs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dstrig_core::fixtures;

    #[test]
    fn round_trip() {
        let doc = TriangleDocument::from_triangle(&fixtures::sp0(), Some("SP0".into()), None);
        let back = parse_documents(&doc.to_string()).unwrap();
        assert_eq!(back, vec![doc.clone()]);
        assert_eq!(back[0].points().unwrap(), *fixtures::sp0().vertices());
    }

    #[test]
    fn header_defaults() {
        let docs = parse_documents(r#"{"vertices":[[0,1,0],[0,0,1],[0,-1,0]]}"#).unwrap();
        assert_eq!(docs[0].schema, 1);
        assert_eq!(docs[0].signature, "-++");
    }

    #[test]
    fn streams_and_arrays() {
        let one = r#"{"vertices":[[0,1,0],[0,0,1],[0,-1,0]]}"#;
        assert_eq!(
            parse_documents(&format!("{one}\n{one}\n")).unwrap().len(),
            2
        );
        assert_eq!(
            parse_documents(&format!("[{one},{one},{one}]"))
                .unwrap()
                .len(),
            3
        );
        assert!(parse_documents("  \n").is_err());
    }

    #[test]
    fn off_quadric_row_is_named() {
        let docs = parse_documents(r#"{"vertices":[[0,1,0],[0,2,0],[0,-1,0]]}"#).unwrap();
        let err = docs[0].points().unwrap_err();
        assert_eq!(err.code, 2);
        assert!(err.message.contains("row 1"), "{}", err.message);
        assert!(err.message.contains("<v,v> = 4"), "{}", err.message);
    }

    #[test]
    fn wrong_shapes() {
        for text in [
            r#"{"vertices":[[0,1,0],[0,0,1]]}"#,
            r#"{"vertices":[[0,1,0],[0,0,1],[0,-1]]}"#,
            r#"{"schema":2,"vertices":[[0,1,0],[0,0,1],[0,-1,0]]}"#,
            r#"{"signature":"+--","vertices":[[0,1,0],[0,0,1],[0,-1,0]]}"#,
        ] {
            assert_eq!(
                parse_documents(text).unwrap()[0].points().unwrap_err().code,
                2
            );
        }
    }
}
