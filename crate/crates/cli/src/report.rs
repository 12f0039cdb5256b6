//! Structured run reports.
//!
//! One `Report` per invocation. The text and JSON renderings are produced
//! from the same data, so every verdict appears identically in both. Events
//! are operational notes (cache maintenance and the like) destined for
//! stderr; they never influence the verdict.

use serde_json::{json, Value};
use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Self {
        Self { name: name.into(), verdict, detail: detail.into() }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Verdict::Pass, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Verdict::Fail, detail)
    }

    pub fn inconclusive(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Verdict::Inconclusive, detail)
    }

    pub fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, Verdict::from_bool(ok), detail)
    }
}

/// Exit codes: 0 all checks pass, 1 I/O or usage error (raised before a
/// report exists), 2 a verification failed, 3 inconclusive.
#[derive(Debug)]
pub struct Report {
    command: String,
    parameters: Vec<(String, String)>,
    body: Vec<String>,
    checks: Vec<Check>,
    findings: Vec<String>,
    events: Vec<String>,
    payload: Option<Value>,
    csv: Option<Vec<Vec<String>>>,
    timing: Option<Duration>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: Vec::new(),
            body: Vec::new(),
            checks: Vec::new(),
            findings: Vec::new(),
            events: Vec::new(),
            payload: None,
            csv: None,
            timing: None,
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.body.push(text.into());
        self
    }

    pub fn check(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn finding(&mut self, text: impl Into<String>) -> &mut Self {
        self.findings.push(text.into());
        self
    }

    pub fn event(&mut self, text: impl Into<String>) -> &mut Self {
        self.events.push(text.into());
        self
    }

    pub fn set_payload(&mut self, payload: Value) -> &mut Self {
        self.payload = Some(payload);
        self
    }

    /// First row is the header; CSV output is refused without a table.
    pub fn set_table(&mut self, rows: Vec<Vec<String>>) -> &mut Self {
        self.csv = Some(rows);
        self
    }

    pub fn set_timing(&mut self, elapsed: Duration) -> &mut Self {
        self.timing = Some(elapsed);
        self
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn findings(&self) -> &[String] {
        &self.findings
    }

    pub fn events(&self) -> &[String] {
        &self.events
    }

    pub fn payload(&self) -> Option<&Value> {
        self.payload.as_ref()
    }

    pub fn has_table(&self) -> bool {
        self.csv.is_some()
    }

    /// Fail dominates; inconclusive dominates pass; no checks means pass.
    pub fn overall(&self) -> Verdict {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall() {
            Verdict::Pass => 0,
            Verdict::Fail => 2,
            Verdict::Inconclusive => 3,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut parameters = serde_json::Map::new();
        for (k, v) in &self.parameters {
            parameters.insert(k.clone(), Value::String(v.clone()));
        }
        let mut out = json!({
            "command": self.command,
            "parameters": parameters,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "verdict": c.verdict.as_str(),
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "findings": self.findings,
            "verdict": self.overall().as_str(),
        });
        let obj = out.as_object_mut().expect("constructed as an object");
        if let Some(payload) = &self.payload {
            obj.insert("payload".into(), payload.clone());
        }
        if let Some(elapsed) = self.timing {
            obj.insert("timingMs".into(), json!(elapsed.as_secs_f64() * 1e3));
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for line in &self.body {
            out.push_str(line);
            out.push('\n');
        }
        for check in &self.checks {
            out.push_str(&format!("[{}] {}: {}\n", check.verdict, check.name, check.detail));
        }
        for finding in &self.findings {
            out.push_str(&format!("finding: {finding}\n"));
        }
        if let Some(elapsed) = self.timing {
            out.push_str(&format!("timing: {:.1} ms\n", elapsed.as_secs_f64() * 1e3));
        }
        if !self.checks.is_empty() {
            out.push_str(&format!("verdict: {}\n", self.overall()));
        }
        out
    }

    /// Flat table only; structured results belong to the JSON rendering.
    pub fn render_csv(&self) -> Option<String> {
        let rows = self.csv.as_ref()?;
        let mut out = String::new();
        for row in rows {
            let escaped: Vec<String> = row
                .iter()
                .map(|cell| {
                    if cell.contains([',', '"', '\n']) {
                        format!("\"{}\"", cell.replace('"', "\"\""))
                    } else {
                        cell.clone()
                    }
                })
                .collect();
            out.push_str(&escaped.join(","));
            out.push('\n');
        }
        Some(out)
    }
}
