//! Report documents shared by every command: `meta`, `instance`, `checks[]`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Violation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information only; never affects the exit code.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trial: Option<String>,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { trial: None, name: name.into(), status: Status::Pass, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { trial: None, name: name.into(), status: Status::Fail, witness: Some(witness.into()), detail: None }
    }

    pub fn info(name: impl Into<String>, detail: Value) -> Self {
        Check { trial: None, name: name.into(), status: Status::Info, witness: None, detail: Some(detail) }
    }

    pub fn expect(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    /// Pass iff `violations` is empty; otherwise the first one is the witness.
    pub fn from_violations(name: impl Into<String>, violations: &[Violation]) -> Self {
        match violations.first() {
            None => Check::pass(name),
            Some(v) => {
                let more = if violations.len() > 1 { format!(" (+{} more)", violations.len() - 1) } else { String::new() };
                Check::fail(name, format!("{}: {}{more}", v.axiom, v.witness))
            }
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub config_hash: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub instance: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.is_failure()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violations_become_witnesses() {
        assert_eq!(Check::from_violations("x", &[]).status, Status::Pass);
        let c = Check::from_violations("x", &[Violation::new("a", "b"), Violation::new("c", "d")]);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_deref(), Some("a: b (+1 more)"));
        let json = serde_json::to_string(&Check::pass("y")).unwrap();
        assert_eq!(json, r#"{"name":"y","status":"pass"}"#);
    }
}
