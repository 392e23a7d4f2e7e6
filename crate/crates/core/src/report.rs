//! Pass/fail reports shared by every checker and by the command line front end.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// A named list of checks. `pass` is kept equal to the conjunction of all
/// result statuses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<CheckResult>,
    pub pass: bool,
    /// Extra payload for table-emitting commands (characters, radicals).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            params: BTreeMap::new(),
            results: Vec::new(),
            pass: true,
            data: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.pass &= pass;
        self.results.push(CheckResult {
            name: name.into(),
            pass,
            witness,
        });
    }

    /// Records a check that carries no witness.
    pub fn ok(&mut self, name: impl Into<String>, pass: bool) {
        self.check(name, pass, None);
    }

    /// Appends every result of `other`, prefixing names with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for r in other.results {
            let name = if prefix.is_empty() {
                r.name
            } else {
                format!("{prefix}/{}", r.name)
            };
            self.check(name, r.pass, r.witness);
        }
    }

    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    /// Sorts results by name (stable), which is the order reports are emitted in.
    pub fn sorted(mut self) -> Self {
        self.results.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are always serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_conjunction() {
        let mut r = Report::new("x");
        r.ok("a", true);
        assert!(r.pass);
        r.check("b", false, Some("w".into()));
        r.ok("c", true);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn schema_round_trip() {
        let mut r = Report::new("verify-phi").param("l", "3/2");
        r.ok("z", true);
        r.ok("a", true);
        let r = r.sorted();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["command"], "verify-phi");
        assert_eq!(v["params"]["l"], "3/2");
        assert_eq!(v["results"][0]["name"], "a");
        assert!(v["results"][0]["witness"].is_null());
        assert_eq!(v["pass"], true);
        assert!(v.get("data").is_none());
    }
}
