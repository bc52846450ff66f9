//! Text formats: the canonical JSON code file, the CSV incidence matrix and
//! the JSON failure schedule.
//!
//! A code file looks like
//!
//! ```text
//! {
//!   "n": 3,
//!   "theta": 3,
//!   "name": "triangle",
//!   "nodes": [
//!     [1, 2],
//!     [1, 3],
//!     [2, 3]
//!   ]
//! }
//! ```
//!
//! Keys appear in this order, `name` is optional, node sets are sorted and
//! the file ends with a newline. [`emit_code_json`] always produces exactly
//! this layout.

use std::path::Path;

use serde::Deserialize;

use crate::code::{FrCode, NpdiMatrix};
use crate::error::{Error, Result};
use crate::sim::FailureSchedule;

/// A parsed code file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub name: Option<String>,
    pub code: FrCode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Json,
    Csv,
}

impl FileKind {
    /// `.csv` selects the matrix format; anything else is JSON.
    pub fn from_path(path: &Path) -> FileKind {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => FileKind::Csv,
            _ => FileKind::Json,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCode {
    n: usize,
    theta: usize,
    #[serde(default)]
    name: Option<String>,
    nodes: Vec<Vec<usize>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

pub fn parse_code_file(text: &str, kind: FileKind) -> Result<CodeFile> {
    match kind {
        FileKind::Json => parse_code_json(text),
        FileKind::Csv => Ok(CodeFile { name: None, code: parse_matrix_csv(text)? }),
    }
}

pub fn parse_code_json(text: &str) -> Result<CodeFile> {
    let raw: RawCode = serde_json::from_str(text).map_err(json_error)?;
    if raw.n != raw.nodes.len() {
        return Err(Error::InvalidField {
            field: "n",
            message: format!("declares {} nodes but `nodes` lists {}", raw.n, raw.nodes.len()),
        });
    }
    if raw.theta == 0 {
        return Err(Error::InvalidField { field: "theta", message: "must be positive".into() });
    }
    Ok(CodeFile { name: raw.name, code: FrCode::new(&raw.nodes, raw.theta)? })
}

pub fn emit_code_json(code: &FrCode, name: Option<&str>) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"n\": {},\n", code.n()));
    out.push_str(&format!("  \"theta\": {},\n", code.theta()));
    if let Some(name) = name {
        let quoted = serde_json::to_string(name).expect("strings always serialize");
        out.push_str(&format!("  \"name\": {quoted},\n"));
    }
    out.push_str("  \"nodes\": [\n");
    let rows: Vec<String> = code
        .nodes()
        .iter()
        .map(|u| {
            let items: Vec<String> = u.iter().map(usize::to_string).collect();
            format!("    [{}]", items.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// `n` lines of `theta` comma-separated 0/1 entries. Blank lines are skipped.
pub fn parse_matrix_csv(text: &str) -> Result<FrCode> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (l, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for cell in line.split(',') {
            let value = cell.trim().parse::<u8>().map_err(|e| Error::Parse {
                line: l + 1,
                column,
                message: format!("{:?} is not a matrix entry: {e}", cell.trim()),
            })?;
            row.push(value);
            column += cell.chars().count() + 1;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse { line: 1, column: 1, message: "empty matrix".into() });
    }
    FrCode::from_matrix(&NpdiMatrix::from_rows(&rows)?)
}

pub fn emit_matrix_csv(code: &FrCode) -> String {
    let m = code.to_matrix();
    let mut out = String::new();
    for r in 0..m.rows() {
        let cells: Vec<String> = m.row(r).iter().map(u8::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// A JSON array of events, each an array of 1-based node indices.
pub fn parse_schedule_json(text: &str) -> Result<FailureSchedule> {
    let events: Vec<Vec<usize>> = serde_json::from_str(text).map_err(json_error)?;
    Ok(FailureSchedule::new(events))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table_one;

    const TABLE_ONE_JSON: &str = "{\n  \"n\": 6,\n  \"theta\": 10,\n  \"name\": \"table1\",\n  \"nodes\": [\n    [1, 2, 3, 4],\n    [1, 5, 6, 7],\n    [2, 5, 8, 9],\n    [3, 6, 8],\n    [4, 7, 10],\n    [8, 9, 10]\n  ]\n}\n";

    #[test]
    fn canonical_json() {
        assert_eq!(emit_code_json(&table_one(), Some("table1")), TABLE_ONE_JSON);
        let parsed = parse_code_json(TABLE_ONE_JSON).unwrap();
        assert_eq!(parsed.code, table_one());
        assert_eq!(parsed.name.as_deref(), Some("table1"));
    }

    #[test]
    fn json_accepts_unsorted_compact_input() {
        let text = r#"{"nodes": [[4,3,2,1],[7,6,5,1],[9,8,5,2],[8,6,3],[10,7,4],[10,9,8]], "theta": 10, "n": 6}"#;
        let parsed = parse_code_json(text).unwrap();
        assert_eq!(parsed.code, table_one());
        assert_eq!(emit_code_json(&parsed.code, None).lines().nth(3), Some("  \"nodes\": ["));
    }

    #[test]
    fn json_errors() {
        assert!(matches!(parse_code_json(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code_json("{\n  \"n\": -1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_code_json(r#"{"n": 2, "theta": 1, "nodes": [[1]]}"#),
            Err(Error::InvalidField { field: "n", .. })
        ));
        assert_eq!(
            parse_code_json(r#"{"n": 2, "theta": 2, "nodes": [[1], [1]]}"#).unwrap_err().to_string(),
            "OrphanPacket: 2"
        );
        assert!(matches!(
            parse_code_json(r#"{"n": 1, "theta": 1, "nodes": [[1]], "extra": 0}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn csv_matrix() {
        let text = emit_matrix_csv(&table_one());
        assert_eq!(text.lines().next(), Some("1,1,1,1,0,0,0,0,0,0"));
        assert_eq!(parse_matrix_csv(&text).unwrap(), table_one());
        assert!(matches!(parse_matrix_csv(""), Err(Error::Parse { .. })));
        assert_eq!(
            parse_matrix_csv("1,0\n1,x\n"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                message: "\"x\" is not a matrix entry: invalid digit found in string".into()
            })
        );
        assert_eq!(parse_matrix_csv("1,0\n1,0\n"), Err(Error::ZeroColumn(2)));
    }

    #[test]
    fn kinds() {
        assert_eq!(FileKind::from_path(Path::new("a/b.CSV")), FileKind::Csv);
        assert_eq!(FileKind::from_path(Path::new("a/b.code")), FileKind::Json);
    }

    #[test]
    fn schedules() {
        let s = parse_schedule_json("[[6], [3, 4]]").unwrap();
        assert_eq!(s.events, vec![vec![6], vec![3, 4]]);
        assert!(parse_schedule_json("[[0.5]]").is_err());
    }
}
