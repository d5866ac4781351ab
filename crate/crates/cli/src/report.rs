//! Check reports and tables, rendered as TSV or JSON.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Format;

/// Version of the JSON output layout.
pub const SCHEMA: u32 = 1;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Undecided within the configured bounds.
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

/// One check in a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    /// The identity family checked.
    pub anchor: String,
    pub check: String,
    pub t: Option<u8>,
    pub status: Status,
    pub detail: String,
}

/// The checks of a suite, in execution order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub lines: Vec<Line>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            lines: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        anchor: &str,
        check: impl Into<String>,
        t: Option<u8>,
        ok: bool,
        detail: impl Into<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push_status(anchor, check, t, status, detail);
    }

    pub fn push_status(
        &mut self,
        anchor: &str,
        check: impl Into<String>,
        t: Option<u8>,
        status: Status,
        detail: impl Into<String>,
    ) {
        self.lines.push(Line {
            anchor: anchor.to_string(),
            check: check.into(),
            t,
            status,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.lines.extend(other.lines);
    }

    /// No check failed; unknown checks are allowed.
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    /// Every check passed outright.
    pub fn all_pass(&self) -> bool {
        !self.lines.is_empty() && self.lines.iter().all(|l| l.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&Line> {
        self.lines.iter().find(|l| l.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.lines.iter().filter(|l| l.status == s).count()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = String::from("suite\tanchor\tt\tcheck\tstatus\tdetail\n");
                for l in &self.lines {
                    let t = l.t.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\n",
                        self.suite,
                        l.anchor,
                        t,
                        l.check,
                        l.status.as_str(),
                        l.detail
                    ));
                }
                out
            }
            Format::Json => {
                let v = json!({
                    "schema": SCHEMA,
                    "suite": self.suite,
                    "passed": self.passed(),
                    "checks": self.lines,
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("serializable")
                )
            }
        }
    }
}

/// A titled table of rendered cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Structured cells for JSON output, parallel to `rows`.
    pub json_rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(title: &str, header: &[&str]) -> Self {
        Self {
            title: title.to_string(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            json_rows: Vec::new(),
        }
    }

    pub fn push(&mut self, cells: Vec<String>, json_cells: Vec<Value>) {
        self.rows.push(cells);
        self.json_rows.push(json_cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = format!("# {}\n{}\n", self.title, self.header.join("\t"));
                for r in &self.rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .json_rows
                    .iter()
                    .map(|r| {
                        Value::Object(self.header.iter().cloned().zip(r.iter().cloned()).collect())
                    })
                    .collect();
                let v = json!({ "schema": SCHEMA, "table": self.title, "columns": self.header, "rows": rows });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("serializable")
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_and_json_rendering() {
        let mut r = SuiteReport::new("demo");
        r.push("family", "check", Some(1), true, "");
        r.push_status("family", "open", None, Status::Unknown, "bound");
        assert!(r.passed() && !r.all_pass());
        let tsv = r.render(Format::Tsv);
        assert_eq!(tsv.lines().nth(1), Some("demo\tfamily\t1\tcheck\tpass\t"));
        assert_eq!(
            tsv.lines().nth(2),
            Some("demo\tfamily\t-\topen\tunknown\tbound")
        );
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][1]["status"], "unknown");
        r.push("family", "bad", None, false, "x");
        assert_eq!(r.first_failure().map(|l| l.check.as_str()), Some("bad"));
    }
}
