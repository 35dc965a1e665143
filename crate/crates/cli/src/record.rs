//! The serialized result of one command, with text and CSV projections.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Keys are kept sorted, so encodings are byte-stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub format_version: u32,
    pub command: String,
    pub input: Map<String, Value>,
    pub results: Map<String, Value>,
    pub notes: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            input: Map::new(),
            results: Map::new(),
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.input.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Text => self.render_text(out),
            Format::Csv => self.render_csv(out),
        }
    }

    fn render_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.command)?;
        let mut tables = Vec::new();
        for (prefix, map) in [("input", &self.input), ("results", &self.results)] {
            for (k, v) in map {
                if let Some(rows) = object_rows(v) {
                    tables.push((k, rows));
                } else {
                    let mut leaves = Vec::new();
                    flatten(&format!("{prefix}.{k}"), v, &mut leaves);
                    for (path, s) in leaves {
                        writeln!(out, "  {path}: {s}")?;
                    }
                }
            }
        }
        for (name, rows) in tables {
            writeln!(out, "{name}:")?;
            let header = columns(rows);
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| header.iter().map(|h| r.get(h).map(scalar).unwrap_or_default()).collect())
                .collect();
            let widths: Vec<usize> = header
                .iter()
                .enumerate()
                .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
                .collect();
            let line = |vals: Vec<&str>| {
                let padded: Vec<String> = vals
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect();
                format!("  {}", padded.join("  ").trim_end())
            };
            writeln!(out, "{}", line(header.iter().map(String::as_str).collect()))?;
            for row in &cells {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
            }
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        Ok(())
    }

    /// A record with a `rows` table renders as that table; anything else
    /// renders as `field,value` pairs.
    fn render_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(rows) = self.results.get("rows").and_then(object_rows) {
            let header = columns(rows);
            w.write_record(&header)?;
            for r in rows {
                w.write_record(header.iter().map(|h| r.get(h).map(scalar).unwrap_or_default()))?;
            }
        } else {
            w.write_record(["field", "value"])?;
            w.write_record(["command", self.command.as_str()])?;
            for (prefix, map) in [("input", &self.input), ("results", &self.results)] {
                for (k, v) in map {
                    let mut leaves = Vec::new();
                    flatten(&format!("{prefix}.{k}"), v, &mut leaves);
                    for (path, s) in leaves {
                        w.write_record([path, s])?;
                    }
                }
            }
            for n in &self.notes {
                w.write_record(["note", n.as_str()])?;
            }
        }
        w.flush()
    }
}

fn object_rows(v: &Value) -> Option<&Vec<Value>> {
    match v {
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => Some(items),
        _ => None,
    }
}

fn columns(rows: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().into_iter().flat_map(|o| o.keys()) {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

/// One-cell rendering; arrays of scalars become space-separated lists.
pub fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn flatten(path: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{path}.{k}"), inner, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{path}.{i}"), inner, out);
            }
        }
        _ => out.push((path.to_string(), scalar(v))),
    }
}
