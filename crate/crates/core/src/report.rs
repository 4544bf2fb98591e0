//! Machine-readable check reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Fail dominates undecided, which dominates pass.
    pub fn combine(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
        })
    }
}

/// Outcome of one named check, with exact witnesses and optional sub-checks.
///
/// Witnesses are stored in a sorted map so that serialized reports are
/// byte-identical across runs. Wall-clock timing is kept out of the JSON form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subchecks: Vec<Report>,
    #[serde(skip)]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(check: impl Into<String>, verdict: Verdict) -> Self {
        Report {
            check: check.into(),
            verdict,
            witnesses: BTreeMap::new(),
            subchecks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn pass(check: impl Into<String>) -> Self {
        Self::new(check, Verdict::Pass)
    }

    pub fn from_bool(check: impl Into<String>, ok: bool) -> Self {
        Self::new(check, Verdict::from_bool(ok))
    }

    /// Aggregates sub-checks; the verdict is the combination of theirs.
    pub fn aggregate(check: impl Into<String>, subchecks: Vec<Report>) -> Self {
        let verdict = subchecks.iter().fold(Verdict::Pass, |v, r| v.combine(r.verdict));
        Report { subchecks, verdict, ..Self::new(check, Verdict::Pass) }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) {
        self.witnesses.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, sub: Report) {
        self.verdict = self.verdict.combine(sub.verdict);
        self.subchecks.push(sub);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The first sub-check with the given name, searched depth-first.
    pub fn find(&self, name: &str) -> Option<&Report> {
        if self.check == name {
            return Some(self);
        }
        self.subchecks.iter().find_map(|s| s.find(name))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Indented one-line-per-check summary for humans.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        self.write_summary(&mut out, 0);
        out
    }

    fn write_summary(&self, out: &mut String, depth: usize) {
        let timing = self.elapsed_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
        out.push_str(&format!("{}{}: {}{}\n", "  ".repeat(depth), self.check, self.verdict, timing));
        for (k, v) in &self.witnesses {
            out.push_str(&format!("{}  - {k} = {v}\n", "  ".repeat(depth)));
        }
        for s in &self.subchecks {
            s.write_summary(out, depth + 1);
        }
    }
}
