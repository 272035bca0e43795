//! Check results and their serialization: every verification routine
//! produces a `CheckData`, which the CLI wraps into a timed, named
//! `CheckReport` with a machine-readable JSON form.

use crate::bimodule::BimoduleMap;
use crate::linalg::{Q, RatMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Raw outcome of one verification routine.
#[derive(Debug, Clone)]
pub struct CheckData {
    pub pass: bool,
    /// human-readable lines describing what was checked
    pub lines: Vec<String>,
    /// named dimensions involved (for the report's dims field)
    pub dims: BTreeMap<String, usize>,
    /// serialized certificate (maps, matrices) when the verdict is pass
    pub certificate: Option<serde_json::Value>,
    /// explanation of failure or of a negative claim
    pub witness: Option<String>,
}

impl CheckData {
    pub fn pass() -> Self {
        CheckData {
            pass: true,
            lines: Vec::new(),
            dims: BTreeMap::new(),
            certificate: None,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        CheckData {
            pass: false,
            lines: Vec::new(),
            dims: BTreeMap::new(),
            certificate: None,
            witness: Some(witness.into()),
        }
    }

    pub fn line(mut self, s: impl Into<String>) -> Self {
        self.lines.push(s.into());
        self
    }

    pub fn dim(mut self, name: impl Into<String>, d: usize) -> Self {
        self.dims.insert(name.into(), d);
        self
    }

    /// Merge another result: pass only if both pass; lines and dims
    /// concatenate.
    pub fn merge(mut self, other: CheckData) -> Self {
        self.pass &= other.pass;
        self.lines.extend(other.lines);
        self.dims.extend(other.dims);
        if self.certificate.is_none() {
            self.certificate = other.certificate;
        }
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self
    }

    pub fn with_certificate(mut self, cert: serde_json::Value) -> Self {
        self.certificate = Some(cert);
        self
    }
}

/// The CLI-facing report, one per executed check.
#[derive(Serialize, Deserialize, Debug)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub paper_ref: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub dims: BTreeMap<String, usize>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn text(&self) -> String {
        let mut s = format!("[{}] {} ({} ms)", self.verdict, self.check, self.elapsed_ms);
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            s.push_str(&format!("  {}", params.join(" ")));
        }
        if !self.dims.is_empty() {
            let dims: Vec<String> = self.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!("  dims: {}", dims.join(" ")));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!("\n    note: {w}"));
        }
        s
    }
}

/// Sparse exact serialization of a matrix: shape plus (row, col, value)
/// triples with values as rational strings.
pub fn matrix_json(m: &RatMatrix) -> serde_json::Value {
    let mut entries = Vec::new();
    for r in 0..m.rows() {
        for (c, v) in m.row(r) {
            entries.push(serde_json::json!([r, c, v.to_string()]));
        }
    }
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn matrix_from_json(v: &serde_json::Value) -> Result<RatMatrix, String> {
    let rows = v["rows"].as_u64().ok_or("missing rows")? as usize;
    let cols = v["cols"].as_u64().ok_or("missing cols")? as usize;
    let mut m = RatMatrix::zero(rows, cols);
    for e in v["entries"].as_array().ok_or("missing entries")? {
        let arr = e.as_array().ok_or("bad entry")?;
        let r = arr[0].as_u64().ok_or("bad row")? as usize;
        let c = arr[1].as_u64().ok_or("bad col")? as usize;
        let q: Q = arr[2]
            .as_str()
            .ok_or("bad value")?
            .parse()
            .map_err(|e| format!("bad rational: {e}"))?;
        m.set(r, c, q);
    }
    Ok(m)
}

pub fn map_json(map: &BimoduleMap) -> serde_json::Value {
    serde_json::json!({
        "shift": map.shift,
        "matrix": matrix_json(&map.matrix),
    })
}

pub fn map_from_json(v: &serde_json::Value) -> Result<BimoduleMap, String> {
    Ok(BimoduleMap {
        shift: v["shift"].as_i64().ok_or("missing shift")?,
        matrix: matrix_from_json(&v["matrix"])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_int;

    #[test]
    fn matrix_json_roundtrip() {
        let mut m = RatMatrix::zero(3, 2);
        m.set(0, 1, q_int(5));
        m.set(2, 0, Q::new(1.into(), 3.into()));
        let j = matrix_json(&m);
        let back = matrix_from_json(&j).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn map_json_roundtrip() {
        let map = BimoduleMap {
            matrix: RatMatrix::identity(4),
            shift: -2,
        };
        let back = map_from_json(&map_json(&map)).unwrap();
        assert_eq!(back.shift, -2);
        assert_eq!(back.matrix, map.matrix);
    }
}
