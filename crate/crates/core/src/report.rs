//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub version: String,
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    /// Command output; certificates and tables live here.
    pub data: BTreeMap<String, serde_json::Value>,
    /// SHA-256 of each data entry's canonical JSON.
    pub digests: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            checks: Vec::new(),
            data: BTreeMap::new(),
            digests: BTreeMap::new(),
            timings_ms: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
        ok
    }

    pub fn inconclusive(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Inconclusive,
            detail: detail.into(),
        });
    }

    /// Attach a serializable value under `key`, with its digest.
    pub fn put<T: Serialize>(&mut self, key: &str, value: &T) {
        let v = serde_json::to_value(value).expect("report data serializes");
        let bytes = serde_json::to_vec(&v).expect("json value serializes");
        self.digests.insert(key.to_string(), hex::encode(Sha256::digest(&bytes)));
        self.data.insert(key.to_string(), v);
    }

    pub fn time(&mut self, key: &str, ms: u128) {
        self.timings_ms.get_or_insert_with(BTreeMap::new).insert(key.to_string(), ms);
    }

    pub fn merge(&mut self, prefix: &str, other: RunReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.data {
            self.put(&format!("{prefix}/{k}"), &v);
        }
    }

    /// 0 when every check passes, 1 on a failure, 2 when something was
    /// inconclusive and nothing failed.
    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            let _ = writeln!(s, "{tag:<12} {}: {}", c.name, c.detail);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_and_digests() {
        let mut r = RunReport::new(vec!["x".into()]);
        assert_eq!(r.exit_code(), 0);
        r.inconclusive("bound", "hit");
        assert_eq!(r.exit_code(), 2);
        r.check("c", false, "");
        assert_eq!(r.exit_code(), 1);
        r.put("k", &vec![1, 2]);
        let mut r2 = RunReport::new(vec!["x".into()]);
        r2.put("k", &vec![1, 2]);
        assert_eq!(r.digests["k"], r2.digests["k"]);
        assert_eq!(r.digests["k"].len(), 64);
    }
}
