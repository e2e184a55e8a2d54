//! Command output: ordered key-value sections, rendered as text or JSON.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub certificate: Option<Map<String, Value>>,
    pub warnings: Vec<String>,
    /// False when a verification step failed; the process then exits with 1.
    pub ok: bool,
    /// Wall-clock milliseconds, only recorded on request so that reports
    /// stay byte-identical across runs.
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: Map::new(),
            results: Map::new(),
            certificate: None,
            warnings: Vec::new(),
            ok: true,
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), value.into());
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), self.command.clone().into());
        out.insert("ok".into(), self.ok.into());
        out.insert("inputs".into(), Value::Object(self.inputs.clone()));
        out.insert("results".into(), Value::Object(self.results.clone()));
        if let Some(c) = &self.certificate {
            out.insert("certificate".into(), Value::Object(c.clone()));
        }
        if !self.warnings.is_empty() {
            out.insert("warnings".into(), self.warnings.clone().into());
        }
        if let Some(ms) = self.timing_ms {
            out.insert("timing_ms".into(), Value::from(ms as u64));
        }
        Value::Object(out)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("reports serialize") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        let mut section = |title: &str, map: &Map<String, Value>| {
            if map.is_empty() {
                return;
            }
            writeln!(out, "{title}:").unwrap();
            for (k, v) in map {
                writeln!(out, "  {k}: {}", text(v)).unwrap();
            }
        };
        section("inputs", &self.inputs);
        section("results", &self.results);
        if let Some(c) = &self.certificate {
            section("certificate", c);
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "time: {ms} ms").unwrap();
        }
        writeln!(out, "status: {}", if self.ok { "ok" } else { "VERIFICATION FAILED" }).unwrap();
        out
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(text).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter().map(|(k, v)| format!("{k}: {}", text(v))).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}
