use std::fmt::Display;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Outcome of one check over a range of `n`.
///
/// Serializes as
/// `{"check_name", "range": [lo, hi], "passed", "failures": [{"n", "expected", "actual"}],
///   "witnesses": [{"n", "detail"}], "elapsed_ms"}`.
/// Integers that can be large are carried as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub check_name: String,
    pub range: [usize; 2],
    pub passed: bool,
    pub failures: Vec<Failure>,
    #[serde(default)]
    pub witnesses: Vec<Witness>,
    #[serde(rename = "elapsed_ms", with = "millis")]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub expected: String,
    pub actual: String,
}

/// Per-`n` detail that does not affect the verdict, e.g. counterexamples at or
/// below a conjecture's threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub detail: String,
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    /// Clears the timing so that repeated runs serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.elapsed = Duration::ZERO;
        self
    }

    /// `PASS`/`FAIL` line with range and failure count.
    pub fn summary(&self) -> String {
        format!(
            "{} {} n in [{}, {}]: {} failure(s), {} witness(es), {} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.range[0],
            self.range[1],
            self.failures.len(),
            self.witnesses.len(),
            self.elapsed.as_millis()
        )
    }

    /// Combines sub-reports into one under a new name; fails if any part did.
    pub fn merge(name: &str, parts: Vec<VerdictReport>) -> VerdictReport {
        let lo = parts.iter().map(|r| r.range[0]).min().unwrap_or(0);
        let hi = parts.iter().map(|r| r.range[1]).max().unwrap_or(0);
        let mut b = ReportBuilder::new(name, lo, hi);
        let mut elapsed = Duration::ZERO;
        for r in parts {
            elapsed += r.elapsed;
            for f in r.failures {
                b.failures.push(Failure {
                    actual: format!("{}: {}", r.check_name, f.actual),
                    ..f
                });
            }
            for w in r.witnesses {
                b.witnesses.push(Witness {
                    detail: format!("{}: {}", r.check_name, w.detail),
                    ..w
                });
            }
        }
        let mut out = b.finish();
        out.elapsed = elapsed;
        out
    }
}

pub(crate) struct ReportBuilder {
    name: String,
    range: [usize; 2],
    failures: Vec<Failure>,
    witnesses: Vec<Witness>,
    start: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(name: &str, lo: usize, hi: usize) -> Self {
        ReportBuilder {
            name: name.to_string(),
            range: [lo, hi],
            failures: Vec::new(),
            witnesses: Vec::new(),
            start: Instant::now(),
        }
    }

    pub(crate) fn fail(&mut self, n: usize, expected: impl Display, actual: impl Display) {
        self.failures.push(Failure {
            n,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Records a failure unless the two values agree.
    pub(crate) fn expect_eq<V: PartialEq + Display>(&mut self, n: usize, expected: V, actual: V) {
        if expected != actual {
            self.fail(n, expected, actual);
        }
    }

    pub(crate) fn witness(&mut self, n: usize, detail: impl Into<String>) {
        self.witnesses.push(Witness {
            n,
            detail: detail.into(),
        });
    }

    pub(crate) fn finish(mut self) -> VerdictReport {
        // stable sort keeps per-n insertion order
        self.failures.sort_by_key(|f| f.n);
        self.witnesses.sort_by_key(|w| w.n);
        VerdictReport {
            check_name: self.name,
            range: self.range,
            passed: self.failures.is_empty(),
            failures: self.failures,
            witnesses: self.witnesses,
            elapsed: self.start.elapsed(),
        }
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_iff_no_failures() {
        let mut b = ReportBuilder::new("x", 1, 5);
        b.witness(3, "seen");
        let r = b.finish();
        assert!(r.passed);
        let mut b = ReportBuilder::new("x", 1, 5);
        b.fail(4, 1, 2);
        b.fail(2, "a", "b");
        let r = b.finish();
        assert!(!r.passed);
        assert_eq!(r.failures.iter().map(|f| f.n).collect::<Vec<_>>(), [2, 4]);
    }

    #[test]
    fn json_shape() {
        let mut b = ReportBuilder::new("mod3", 1, 10);
        b.fail(7, 0, 1);
        let r = b.finish().without_timing();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["check_name"], "mod3");
        assert_eq!(v["range"], serde_json::json!([1, 10]));
        assert_eq!(v["passed"], false);
        assert_eq!(v["failures"][0]["n"], 7);
        assert_eq!(v["failures"][0]["expected"], "0");
        assert_eq!(v["elapsed_ms"], 0);
        let back: VerdictReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn merge_fails_if_any_part_fails() {
        let ok = ReportBuilder::new("a", 1, 3).finish();
        let mut b = ReportBuilder::new("b", 2, 9);
        b.fail(5, 1, 0);
        let merged = VerdictReport::merge("both", vec![ok, b.finish()]);
        assert!(!merged.passed);
        assert_eq!(merged.range, [1, 9]);
        assert_eq!(merged.failures[0].actual, "b: 0");
    }
}
