use std::fmt::Write;

use clap::ValueEnum;

/// Output format of a report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        }
    }
}

/// One outcome: a kind, a status and ordered `key = value` fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub status: Status,
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: impl Into<String>, status: Status) -> Self {
        Record { kind: kind.into(), status, fields: Vec::new() }
    }

    pub fn check(kind: impl Into<String>, ok: bool) -> Self {
        Record::new(kind, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }
}

/// An ordered list of records; byte-identical across runs given the same
/// inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = Record>) {
        self.records.extend(rs);
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        let checks = self.records.iter().filter(|r| r.status != Status::Info).count();
        match format {
            Format::Text => {
                for r in &self.records {
                    let _ = write!(out, "[{}] {}", r.status.as_str(), r.kind);
                    for (k, v) in &r.fields {
                        let _ = write!(out, " {k}={v}");
                    }
                    out.push('\n');
                }
                let verdict = if self.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "summary: {verdict} ({checks} checks, {} failures)", self.failures());
            }
            Format::Records => {
                for r in &self.records {
                    let mut m = serde_json::Map::new();
                    m.insert("kind".into(), r.kind.clone().into());
                    m.insert("status".into(), r.status.as_str().into());
                    for (k, v) in &r.fields {
                        m.insert(k.clone(), v.clone().into());
                    }
                    let _ = writeln!(out, "{}", serde_json::Value::Object(m));
                }
                let summary = serde_json::json!({
                    "kind": "summary",
                    "passed": self.passed(),
                    "checks": checks,
                    "failures": self.failures(),
                });
                let _ = writeln!(out, "{summary}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_both_formats() {
        let mut r = Report::default();
        r.push(Record::check("hh", true).field("dim", 1));
        r.push(Record::new("note", Status::Info).field("text", "a b"));
        assert_eq!(r.render(Format::Text), "[pass] hh dim=1\n[info] note text=a b\nsummary: PASS (1 checks, 0 failures)\n");
        let lines: Vec<String> = r.render(Format::Records).lines().map(String::from).collect();
        assert_eq!(lines[0], r#"{"dim":"1","kind":"hh","status":"pass"}"#);
        r.push(Record::check("x", false));
        assert!(!r.passed());
    }
}
