//! Verification reports and their renderings.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedOutOfScope,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedOutOfScope => "skipped-out-of-scope",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub status: Status,
    pub witness: Value,
    pub ms: u64,
}

impl ReportItem {
    pub fn new(id: impl Into<String>, status: Status, witness: Value) -> Self {
        ReportItem { id: id.into(), status, witness, ms: 0 }
    }

    /// Runs `f` and records its wall time.
    pub fn timed(id: impl Into<String>, f: impl FnOnce() -> (Status, Value)) -> Self {
        let start = Instant::now();
        let (status, witness) = f();
        ReportItem { id: id.into(), status, witness, ms: start.elapsed().as_millis() as u64 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub items: Vec<ReportItem>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Md,
    Tsv,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" => Ok(Format::Md),
            "tsv" => Ok(Format::Tsv),
            _ => Err(crate::Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl VerificationReport {
    /// Sorts by id; later duplicates of an id are dropped.
    pub fn new(mut items: Vec<ReportItem>) -> Self {
        items.sort_by(|a, b| a.id.cmp(&b.id));
        items.dedup_by(|b, a| a.id == b.id);
        let mut summary = Summary::default();
        for it in &items {
            match it.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::SkippedOutOfScope => summary.skipped += 1,
            }
        }
        VerificationReport { version: REPORT_VERSION.into(), items, summary }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.items).collect())
    }

    pub fn without_timing(mut self) -> Self {
        for it in &mut self.items {
            it.ms = 0;
        }
        self
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&ReportItem> {
        self.items.binary_search_by(|it| it.id.as_str().cmp(id)).ok().map(|i| &self.items[i])
    }

    /// Items whose id starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a ReportItem> + 'a {
        self.items.iter().filter(move |it| it.id.starts_with(prefix))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Md => {
                let mut s = String::from("| id | status | ms | witness |\n|---|---|---|---|\n");
                for it in &self.items {
                    let w = it.witness.to_string().replace('|', "\\|");
                    let _ = writeln!(s, "| {} | {} | {} | {} |", it.id, it.status.as_str(), it.ms, w);
                }
                let _ = writeln!(
                    s,
                    "\npass {}, fail {}, skipped {}",
                    self.summary.pass, self.summary.fail, self.summary.skipped
                );
                s
            }
            Format::Tsv => {
                let mut s = String::from("id\tstatus\tms\twitness\n");
                for it in &self.items {
                    let _ = writeln!(s, "{}\t{}\t{}\t{}", it.id, it.status.as_str(), it.ms, it.witness);
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn sorted_and_counted() {
        let r = VerificationReport::new(vec![
            ReportItem::new("b", Status::Fail, json!(null)),
            ReportItem::new("a", Status::Pass, json!({"x": 1})),
            ReportItem::new("c", Status::SkippedOutOfScope, json!("why")),
        ]);
        assert_eq!(r.items[0].id, "a");
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1 });
        assert!(!r.ok());
        assert_eq!(r.get("c").unwrap().status, Status::SkippedOutOfScope);
        let js = r.render(Format::Json);
        assert!(js.contains("\"skipped-out-of-scope\""));
        assert!(r.render(Format::Tsv).starts_with("id\tstatus"));
    }
}
