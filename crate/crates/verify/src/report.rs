use std::fmt::Write as _;

use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not decided by computation; the string says why.
    Flagged(String),
    /// The tool itself failed while running the check.
    Error(String),
}

impl Status {
    pub fn label(&self) -> String {
        match self {
            Status::Pass => "pass".into(),
            Status::Fail => "fail".into(),
            Status::Flagged(why) => format!("flagged: {why}"),
            Status::Error(_) => "error".into(),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

pub const EXTERNAL: &str = "external-citation";
pub const UNANCHORED: &str = "unanchored-class";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The mathematical fact being checked, in words.
    pub basis: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Check {
    pub fn new(name: &str, basis: &str, ok: bool, detail: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { name: name.into(), basis: basis.into(), status, detail }
    }

    pub fn flagged(name: &str, basis: &str, why: &str, detail: Value) -> Self {
        Check { name: name.into(), basis: basis.into(), status: Status::Flagged(why.into()), detail }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioResult {
    pub id: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl ScenarioResult {
    pub fn from_checks(id: &str, checks: Vec<Check>) -> Self {
        let status = if let Some(c) = checks.iter().find(|c| matches!(c.status, Status::Error(_))) {
            c.status.clone()
        } else if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if let Some(c) = checks.iter().find(|c| matches!(c.status, Status::Flagged(_))) {
            c.status.clone()
        } else {
            Status::Pass
        };
        ScenarioResult { id: id.into(), status, checks }
    }

    pub fn tool_failure(id: &str, msg: String) -> Self {
        ScenarioResult { id: id.into(), status: Status::Error(msg), checks: Vec::new() }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool_version: String,
    pub scenarios: Vec<ScenarioResult>,
}

impl Report {
    pub fn new(mut scenarios: Vec<ScenarioResult>) -> Self {
        scenarios.sort_by(|a, b| a.id.cmp(&b.id));
        Report { schema: 1, tool_version: env!("CARGO_PKG_VERSION").into(), scenarios }
    }

    /// 0 when nothing failed (flags allowed), 1 on a falsified check, 3 when
    /// the tool itself failed.
    pub fn exit_code(&self) -> i32 {
        if self.scenarios.iter().any(|s| matches!(s.status, Status::Error(_))) {
            3
        } else if self.scenarios.iter().any(|s| s.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn scenario(&self, id: &str) -> Option<&ScenarioResult> {
        self.scenarios.iter().find(|s| s.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.scenarios {
            let _ = writeln!(out, "{} [{}]", s.id, s.status.label());
            if let Status::Error(msg) = &s.status {
                let _ = writeln!(out, "    error: {msg}");
            }
            for c in &s.checks {
                let _ = writeln!(out, "    [{}] {}: {}", c.status.label(), c.name, c.basis);
                if c.status != Status::Pass && !c.detail.is_null() {
                    let _ = writeln!(out, "        {}", c.detail);
                }
            }
        }
        let _ = writeln!(out, "schema 1, version {}", self.tool_version);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_valid() {
        let r = Report::new(vec![]);
        assert_eq!(r.exit_code(), 0);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["scenarios"], Value::Array(vec![]));
    }

    #[test]
    fn statuses_roll_up() {
        let ok = Check::new("a", "x", true, Value::Null);
        let bad = Check::new("b", "x", false, serde_json::json!({"counterexample": 3}));
        let flag = Check::flagged("c", "x", EXTERNAL, Value::Null);
        assert_eq!(ScenarioResult::from_checks("s", vec![ok.clone(), flag.clone()]).status.label(), "flagged: external-citation");
        let failing = Report::new(vec![ScenarioResult::from_checks("s", vec![ok, bad, flag])]);
        assert_eq!(failing.exit_code(), 1);
        assert!(failing.to_json().contains("counterexample"));
        assert_eq!(Report::new(vec![ScenarioResult::tool_failure("t", "boom".into())]).exit_code(), 3);
    }
}
