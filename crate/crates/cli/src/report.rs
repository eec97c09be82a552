use crate::config::Config;
use serde::Serialize;
use serde_json::Value;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    /// `None` when the computation does not depend on a window cap.
    pub cap_stable: Option<bool>,
}

impl Check {
    /// Passes iff `computed == expected`.
    pub fn compare(id: &str, anchor: &str, computed: impl Serialize, expected: impl Serialize) -> Check {
        let computed = serde_json::to_value(computed).expect("serializable");
        let expected = serde_json::to_value(expected).expect("serializable");
        let status = if computed == expected { Status::Pass } else { Status::Fail };
        Check { id: id.into(), anchor: anchor.into(), status, computed, expected, cap_stable: None }
    }

    /// Passes iff `ok`; `expected` documents the predicate.
    pub fn predicate(id: &str, anchor: &str, ok: bool, computed: impl Serialize, expected: &str) -> Check {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            computed: serde_json::to_value(computed).expect("serializable"),
            expected: Value::String(expected.into()),
            cap_stable: None,
        }
    }

    /// Marks the check as depending on a cap; an unstable result fails.
    pub fn with_cap(mut self, stable: bool) -> Check {
        self.cap_stable = Some(stable);
        if !stable {
            self.status = Status::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub config: Config,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let s = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{s}  {}/{}", self.suite, c.id)?;
        }
        let n = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "{}: {n}/{} checks passed (seed {})", self.suite, self.checks.len(), self.seed)
    }
}

/// A row of the Passi rank table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRow {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub dim_formula: u128,
    pub dim_computed: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn rank_csv(rows: &[RankRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
