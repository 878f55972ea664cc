//! Golden-file comparison: a structural diff of two reports that ignores
//! timing.

use std::path::Path;

use serde_json::Value;

use crate::error::{CliError, Result};
use crate::report::Report;

/// One differing leaf, addressed by a JSON-pointer-like path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub path: String,
    pub golden: String,
    pub actual: String,
}

impl std::fmt::Display for Difference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: golden {} but got {}", self.path, self.golden, self.actual)
    }
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("timing");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(xs) => xs.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn walk(path: &str, golden: &Value, actual: &Value, out: &mut Vec<Difference>) {
    let missing = || "<absent>".to_string();
    match (golden, actual) {
        (Value::Object(a), Value::Object(b)) => {
            let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
            for k in keys {
                let p = format!("{path}/{k}");
                match (a.get(k), b.get(k)) {
                    (Some(x), Some(y)) => walk(&p, x, y, out),
                    (Some(x), None) => out.push(Difference { path: p, golden: x.to_string(), actual: missing() }),
                    (None, Some(y)) => out.push(Difference { path: p, golden: missing(), actual: y.to_string() }),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            for i in 0..a.len().max(b.len()) {
                let p = format!("{path}/{i}");
                match (a.get(i), b.get(i)) {
                    (Some(x), Some(y)) => walk(&p, x, y, out),
                    (Some(x), None) => out.push(Difference { path: p, golden: x.to_string(), actual: missing() }),
                    (None, Some(y)) => out.push(Difference { path: p, golden: missing(), actual: y.to_string() }),
                    (None, None) => unreachable!(),
                }
            }
        }
        (x, y) if x == y => {}
        (x, y) => out.push(Difference { path: path.to_string(), golden: x.to_string(), actual: y.to_string() }),
    }
}

/// Differences between two reports, timing ignored.
pub fn diff_reports(golden: &Report, actual: &Report) -> Vec<Difference> {
    let mut a = serde_json::to_value(golden).expect("serialisable");
    let mut b = serde_json::to_value(actual).expect("serialisable");
    strip_timing(&mut a);
    strip_timing(&mut b);
    let mut out = Vec::new();
    walk("", &a, &b, &mut out);
    out
}

/// Loads the golden report at `path` and diffs `report` against it.
pub fn compare_golden(report: &Report, path: &Path) -> Result<Vec<Difference>> {
    if !path.exists() {
        return Err(CliError::MissingGolden(path.to_path_buf()));
    }
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let golden: Report = serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_path_buf(), source })?;
    Ok(diff_reports(&golden, report))
}

/// Writes `report` (without timing) as the golden file at `path`.
pub fn record_golden(report: &Report, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    }
    std::fs::write(path, report.to_json(false)).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
