//! Verification reports. Every check and property listed was computed;
//! checks gated off by the size limit are listed under `skipped`.

use serde_json::{json, Map, Value};

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: Option<String>,
}

pub struct Report {
    pub id: String,
    pub kind: &'static str,
    pub mode: String,
    pub dims: Vec<(&'static str, usize)>,
    pub checks: Vec<Check>,
    pub properties: Vec<(String, Value)>,
    pub skipped: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(id: impl Into<String>, kind: &'static str, mode: impl Into<String>) -> Report {
        Report { id: id.into(), kind, mode: mode.into(), dims: Vec::new(), checks: Vec::new(), properties: Vec::new(), skipped: Vec::new(), elapsed_ms: None }
    }

    pub fn dim(&mut self, name: &'static str, d: usize) {
        self.dims.push((name, d));
    }

    /// Records a check and returns its outcome.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) -> bool {
        self.checks.push(Check { name: name.into(), ok, detail });
        ok
    }

    pub fn prop(&mut self, name: impl Into<String>, v: impl Into<Value>) {
        self.properties.push((name.into(), v.into()));
    }

    pub fn skip(&mut self, what: impl Into<String>) {
        self.skipped.push(what.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> Value {
        let dims: Map<String, Value> = self.dims.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), json!(c.name));
                m.insert("ok".into(), json!(c.ok));
                if let Some(d) = &c.detail {
                    m.insert("detail".into(), json!(d));
                }
                Value::Object(m)
            })
            .collect();
        let props: Map<String, Value> = self.properties.iter().cloned().collect();
        let mut out = Map::new();
        out.insert("id".into(), json!(self.id));
        out.insert("kind".into(), json!(self.kind));
        out.insert("mode".into(), json!(self.mode));
        out.insert("dims".into(), Value::Object(dims));
        out.insert("checks".into(), Value::Array(checks));
        out.insert("properties".into(), Value::Object(props));
        out.insert("skipped".into(), json!(self.skipped));
        out.insert("passed".into(), json!(self.passed()));
        if let Some(ms) = self.elapsed_ms {
            out.insert("elapsed_ms".into(), json!(ms));
        }
        Value::Object(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} ({}, mode {})\n", self.id, self.kind, self.mode);
        if !self.dims.is_empty() {
            let d: Vec<String> = self.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s += &format!("  dims: {}\n", d.join(" "));
        }
        for c in &self.checks {
            s += &format!("  [{}] {}", if c.ok { "pass" } else { "FAIL" }, c.name);
            if let Some(d) = &c.detail {
                s += &format!(": {d}");
            }
            s.push('\n');
        }
        for (k, v) in &self.properties {
            let v = match v {
                Value::String(x) => x.clone(),
                o => o.to_string(),
            };
            s += &format!("  {k}: {v}\n");
        }
        for k in &self.skipped {
            s += &format!("  skipped: {k}\n");
        }
        if let Some(ms) = self.elapsed_ms {
            s += &format!("  elapsed: {ms} ms\n");
        }
        s += if self.passed() { "result: pass\n" } else { "result: FAIL\n" };
        s
    }
}

/// A table row: ordered columns and whether it verified.
pub struct Row {
    pub cells: Vec<(&'static str, Value)>,
    pub ok: bool,
}

pub fn table_json(name: &str, rows: &[Row]) -> Value {
    let rows: Vec<Value> = rows.iter().map(|r| Value::Object(r.cells.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())).collect();
    json!({ "table": name, "rows": rows })
}

pub fn table_text(rows: &[Row]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let show = |v: &Value| match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        o => o.to_string(),
    };
    let header: Vec<String> = first.cells.iter().map(|(k, _)| k.to_string()).collect();
    let body: Vec<Vec<String>> = rows.iter().map(|r| r.cells.iter().map(|(_, v)| show(v)).collect()).collect();
    let widths: Vec<usize> = (0..header.len()).map(|c| body.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap()).collect();
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&header);
    for r in &body {
        s += &line(r);
    }
    s
}
