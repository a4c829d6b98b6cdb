//! Run manifests and deterministic JSON reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::silting::QUANTIFICATION;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything that determines a report: identical manifests give identical bytes.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub seed: u64,
    pub prime: u32,
    pub cutoff: usize,
    pub inputs: Vec<InputDigest>,
    pub parameters: BTreeMap<String, Value>,
}

impl RunManifest {
    pub fn new(command: &str, seed: u64, prime: u32, cutoff: usize) -> Self {
        RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            prime,
            cutoff,
            inputs: Vec::new(),
            parameters: BTreeMap::new(),
        }
    }

    /// Records the digest of an input file under the path as given.
    pub fn input(&mut self, path: &Path) -> Result<()> {
        let bytes = fs::read(path)?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        Ok(())
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(v).unwrap_or(Value::Null));
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// A computed quantity contradicts a checked statement.
    Violation,
    /// A cutoff was reached before a verdict.
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Violation => 2,
            Status::Inconclusive => 3,
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Violation
        }
    }

    /// The worse of two outcomes; a violation outranks an inconclusive run.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Violation, _) | (_, Status::Violation) => Status::Violation,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        }
    }
}

/// One named verdict with the sub-check that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub status: Status,
    pub checks: Vec<Check>,
    pub sections: BTreeMap<String, Value>,
    pub quantification: &'static str,
}

impl Report {
    pub fn new(manifest: RunManifest) -> Self {
        Report {
            manifest,
            status: Status::Pass,
            checks: Vec::new(),
            sections: BTreeMap::new(),
            quantification: QUANTIFICATION,
        }
    }

    pub fn check(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.status = self.status.and(status);
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail: detail.into(),
        });
    }

    pub fn section(&mut self, name: &str, v: impl Serialize) {
        self.sections
            .insert(name.to_string(), serde_json::to_value(v).unwrap_or(Value::Null));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Short text form: one line per check and the overall status.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("{:<13} {:<40} {}\n", format!("[{:?}]", c.status).to_lowercase(), c.name, c.detail));
        }
        s.push_str(&format!("status: {:?}\n", self.status).to_lowercase());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_manifests_give_identical_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("a.alg");
        fs::write(&f, "field 2\ndim 1\nunit 1\nmult 1 1 = 1:1\n").unwrap();
        let build = || {
            let mut m = RunManifest::new("build", 7, 2, 8);
            m.input(&f).unwrap();
            m.param("zeta", 1);
            m.param("alpha", vec![1, 2]);
            let mut r = Report::new(m);
            r.check("x", Status::Pass, "ok");
            r.section("table", vec![("a", 1)]);
            r.to_json()
        };
        assert_eq!(build(), build());
        assert!(build().contains("\"sha256\""));
    }

    #[test]
    fn status_combination() {
        assert_eq!(Status::Pass.and(Status::Inconclusive), Status::Inconclusive);
        assert_eq!(Status::Inconclusive.and(Status::Violation), Status::Violation);
        assert_eq!(Status::Violation.exit_code(), 2);
    }
}
