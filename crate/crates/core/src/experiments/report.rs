use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

pub const REPORT_SCHEMA: &str = "braidex.report/1";

/// One asserted value: what was expected, where the expectation comes from,
/// and what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub source: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        source: impl Into<String>,
    ) -> Check {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Check {
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
            source: source.into(),
        }
    }

    /// A check whose outcome is decided by the caller.
    pub fn judged(
        name: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        source: impl Into<String>,
        pass: bool,
    ) -> Check {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            source: source.into(),
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRow {
    pub series: String,
    pub m: i64,
    pub value: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub schema: &'static str,
    pub id: String,
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub samples: Vec<SampleRow>,
    pub notes: Vec<String>,
    pub pass: bool,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ExperimentReport {
    pub fn new(id: &str) -> ExperimentReport {
        ExperimentReport {
            schema: REPORT_SCHEMA,
            id: id.to_string(),
            params: Vec::new(),
            checks: Vec::new(),
            samples: Vec::new(),
            notes: Vec::new(),
            pass: true,
            runtime: Duration::ZERO,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn check(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn samples(&mut self, series: &str, points: impl IntoIterator<Item = (i64, i64)>) {
        for (m, value) in points {
            self.samples.push(SampleRow {
                series: series.to_string(),
                m,
                value,
            });
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Tab-separated records; the first field names the record kind.
    /// Contains no timing data, so identical runs give identical bytes.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        writeln!(out, "schema\t{}", self.schema).unwrap();
        writeln!(out, "experiment\t{}", self.id).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param\t{}\t{}", clean(k), clean(v)).unwrap();
        }
        writeln!(out, "#check\tname\texpected\tcomputed\tresult\tsource").unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "check\t{}\t{}\t{}\t{}\t{}",
                clean(&c.name),
                clean(&c.expected),
                clean(&c.computed),
                if c.pass { "PASS" } else { "FAIL" },
                clean(&c.source)
            )
            .unwrap();
        }
        if !self.samples.is_empty() {
            writeln!(out, "#sample\tseries\tm\tvalue").unwrap();
        }
        for s in &self.samples {
            writeln!(out, "sample\t{}\t{}\t{}", clean(&s.series), s.m, s.value).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note\t{}", clean(n)).unwrap();
        }
        writeln!(out, "result\t{}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    /// One-line summary such as `dn n=5: PASS (3/3 checks)`.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let passed = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "{} {}: {} ({}/{} checks)",
            self.id,
            params.join(" "),
            if self.pass { "PASS" } else { "FAIL" },
            passed,
            self.checks.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_layout() {
        let mut r = ExperimentReport::new("demo");
        r.param("n", 5);
        r.check(Check::new("x", -40, -40, "formula"));
        r.samples("a3", [(-1, 2), (0, 3)]);
        r.runtime = Duration::from_secs(3);
        let tsv = r.to_tsv();
        assert!(tsv.contains("check\tx\t-40\t-40\tPASS\tformula\n"));
        assert!(tsv.contains("sample\ta3\t-1\t2\n"));
        assert!(tsv.ends_with("result\tPASS\n"));
        assert_eq!(r.summary(), "demo n=5: PASS (1/1 checks)");
        r.check(Check::new("y", 1, 2, "oracle"));
        assert!(!r.pass);
        assert_eq!(r.failed_checks().count(), 1);
        assert!(!r.to_json().contains("runtime"));
    }
}
