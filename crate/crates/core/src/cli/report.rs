use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use super::config::RunConfig;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub struct Report {
    command: String,
    config: Value,
    timings: bool,
    sections: Vec<Value>,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig) -> Result<Self> {
        Ok(Report {
            command: command.into(),
            config: to_value(config)?,
            timings: config.timings,
            sections: Vec::new(),
        })
    }

    /// Runs `f` and appends its output as a section. `anchor` names the
    /// property the section checks.
    pub fn section<T: Serialize>(&mut self, name: &str, anchor: &str, f: impl FnOnce() -> Result<T>) -> Result<()> {
        let start = Instant::now();
        let data = to_value(&f()?)?;
        let mut section = Map::new();
        section.insert("name".into(), name.into());
        section.insert("anchor".into(), anchor.into());
        section.insert("data".into(), data);
        if self.timings {
            section.insert("elapsed_ms".into(), (start.elapsed().as_millis() as u64).into());
        }
        self.sections.push(Value::Object(section));
        Ok(())
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "tool": { "name": "einl", "version": env!("CARGO_PKG_VERSION") },
            "command": self.command,
            "config": self.config,
            "sections": self.sections,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "einl {} {}", env!("CARGO_PKG_VERSION"), self.command);
        render(&mut out, "config", &self.config, 0);
        for s in &self.sections {
            let _ = writeln!(out, "\n== {} [{}] ==", s["name"].as_str().unwrap_or(""), s["anchor"].as_str().unwrap_or(""));
            if let Some(ms) = s.get("elapsed_ms") {
                let _ = writeln!(out, "elapsed_ms: {ms}");
            }
            render(&mut out, "", &s["data"], 0);
        }
        out
    }
}

pub(crate) fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Precondition(format!("report serialization: {e}")))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    v.as_object()
        .is_some_and(|o| o.values().all(|x| !x.is_object() && (!x.is_array() || scalar(x).len() < 40)))
}

/// Objects become indented `key: value` lines, arrays of flat objects with
/// common keys become aligned tables.
fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = if key.is_empty() { String::new() } else { format!("{pad}{key}:") };
    match v {
        Value::Object(o) => {
            let inner = if key.is_empty() { depth } else { depth + 1 };
            if !key.is_empty() {
                let _ = writeln!(out, "{label}");
            }
            for (k, x) in o {
                render(out, k, x, inner);
            }
        }
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(is_flat) => {
            let keys: Vec<&String> = rows[0].as_object().expect("flat").keys().collect();
            if rows.iter().any(|r| r.as_object().expect("flat").keys().ne(keys.iter().copied())) {
                for (n, r) in rows.iter().enumerate() {
                    render(out, &format!("{key}[{n}]"), r, depth);
                }
                return;
            }
            let cells: Vec<Vec<String>> = rows.iter().map(|r| keys.iter().map(|k| scalar(&r[k.as_str()])).collect()).collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(c, k)| cells.iter().map(|r| r[c].chars().count()).chain([k.chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |items: Vec<&str>| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            if !key.is_empty() {
                let _ = writeln!(out, "{label}");
            }
            let inner = "  ".repeat(if key.is_empty() { depth } else { depth + 1 });
            let _ = writeln!(out, "{inner}{}", line(keys.iter().map(|k| k.as_str()).collect()));
            for r in &cells {
                let _ = writeln!(out, "{inner}{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (n, x) in items.iter().enumerate() {
                render(out, &format!("{key}[{n}]"), x, depth);
            }
        }
        other => {
            let _ = writeln!(out, "{label} {}", scalar(other));
        }
    }
}
