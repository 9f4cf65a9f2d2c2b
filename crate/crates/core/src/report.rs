//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
}

impl Case {
    pub fn new(name: impl Into<String>, ok: bool, expected: Value, actual: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Case { name: name.into(), status, expected, actual }
    }

    /// Passes iff `expected == actual`.
    pub fn compare(name: impl Into<String>, expected: Value, actual: Value) -> Self {
        let ok = expected == actual;
        Self::new(name, ok, expected, actual)
    }

    pub fn skipped(name: impl Into<String>, expected: Value, reason: &str) -> Self {
        Case { name: name.into(), status: Status::Skipped, expected, actual: Value::String(reason.into()) }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { schema: SCHEMA_VERSION, suite: suite.into(), params: BTreeMap::new(), cases: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn push(&mut self, case: Case) -> &mut Self {
        self.cases.push(case);
        self
    }

    /// Appends the cases of `other`, prefixing their names with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) -> &mut Self {
        for mut c in other.cases {
            c.name = format!("{prefix}/{}", c.name);
            self.cases.push(c);
        }
        self
    }

    /// Sorts cases by name.
    pub fn finish(mut self) -> Self {
        self.cases.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
