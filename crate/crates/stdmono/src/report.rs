//! Versioned JSON reports.
//!
//! Schema (version 1):
//!
//! ```text
//! {
//!   "schema": 1,
//!   "command": "verify bs",
//!   "config": { "<key>": "<value as given>", ... },
//!   "versions": { "stdmono": "<crate version>" },
//!   "pass": true,
//!   "checks": [ { "id": "...", "pass": true, "data": { ... } }, ... ],
//!   "timing": { "total_ms": 12, "checks": { "<id>": 3, ... } }
//! }
//! ```
//!
//! Checks are sorted by id.  Everything except `timing` is a deterministic
//! function of the configuration and seeds; `timing` can be left out.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub pass: bool,
    pub data: Value,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, pass: bool, data: Value) -> Self {
        CheckRecord { id: id.into(), pass, data }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
    pub checks: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: serde_json::Map<String, Value>,
    pub versions: BTreeMap<String, String>,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(command: &str, config: serde_json::Map<String, Value>, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = checks.iter().all(|c| c.pass);
        let versions = BTreeMap::from([("stdmono".to_string(), env!("CARGO_PKG_VERSION").to_string())]);
        Report { schema: SCHEMA_VERSION, command: command.to_string(), config, versions, pass, checks, timing: None }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self, with_timing: bool) -> String {
        let mut r = self.clone();
        if !with_timing {
            r.timing = None;
        }
        let mut s = serde_json::to_string_pretty(&r).expect("reports always serialise");
        s.push('\n');
        s
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// 0 if every check passes, 2 if any check records a failure.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            2
        }
    }
}
