use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Result of one command. `elapsed_ms` is the only field that varies between
/// identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: Value,
    pub pass: bool,
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: Value::Null,
            pass: true,
            failures: Vec::new(),
            elapsed_ms: 0,
            lines: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn fail(&mut self, why: impl Into<String>) {
        self.pass = false;
        self.failures.push(why.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("{} {}\n", self.command, inputs.join(" ")));
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for f in &self.failures {
            out.push_str(&format!("FAIL {f}\n"));
        }
        out.push_str(if self.pass { "result: pass\n" } else { "result: FAIL\n" });
        out
    }
}
