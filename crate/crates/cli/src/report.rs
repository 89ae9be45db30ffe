use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "outersix/1";

/// Outcome of one command. `passed` is false iff an asserted claim failed.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub parameters: Value,
    pub passed: bool,
    pub findings: Value,
    #[serde(skip)]
    pub text: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn new(command: &str, parameters: Value) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            parameters,
            passed: true,
            findings: Value::Null,
            text: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    /// Records a claim; a false claim fails the report.
    pub fn claim(&mut self, what: impl Into<String>, holds: bool) {
        let what = what.into();
        self.text.push(format!("[{}] {what}", if holds { "ok" } else { "FAILED" }));
        self.passed &= holds;
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.text.push(line.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.command, if self.passed { "PASS" } else { "FAIL" });
        for l in &self.text {
            s.push_str("  ");
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}
