//! Report records shared by the verifiers, the acceptance suite and the CLI.

use std::fmt;

use serde::Serialize;

/// One checked identity.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckEntry {
    pub label: String,
    pub passed: bool,
    /// Exact residual (zero on success) or the offending value, as printed text.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    pub fn new(label: impl Into<String>, passed: bool) -> Self {
        Self {
            label: label.into(),
            passed,
            residual: None,
            detail: None,
        }
    }

    pub fn with_residual(mut self, residual: impl Into<String>) -> Self {
        self.residual = Some(residual.into());
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// A named group of checks. A suite with no checks never passes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

impl SuiteReport {
    pub fn new(id: impl Into<String>, title: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            passed: false,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckEntry) {
        self.checks.push(check);
        self.refresh();
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckEntry>) {
        self.checks.extend(checks);
        self.refresh();
    }

    /// Records an engine error as a failed check.
    pub fn push_error(&mut self, label: impl Into<String>, err: &crate::Error) {
        self.push(CheckEntry::new(label, false).with_detail(format!("error: {err}")));
    }

    fn refresh(&mut self) {
        self.passed = !self.checks.is_empty() && self.checks.iter().all(|c| c.passed);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            f,
            "[{}] {} {} ({ok}/{} checks)",
            verdict(self.passed),
            self.id,
            self.title,
            self.checks.len()
        )?;
        for c in &self.checks {
            write!(
                f,
                "    {} {}",
                if c.passed { "ok  " } else { "FAIL" },
                c.label
            )?;
            if let Some(r) = &c.residual {
                write!(f, " => {r}")?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Everything one CLI invocation produced.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub command: String,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Document {
    pub fn new(command: impl Into<String>, suites: Vec<SuiteReport>) -> Self {
        let passed = !suites.is_empty() && suites.iter().all(|s| s.passed);
        Self {
            command: command.into(),
            passed,
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            write!(f, "{s}")?;
        }
        let ok = self.suites.iter().filter(|s| s.passed).count();
        writeln!(
            f,
            "{}: {ok}/{} suites passed",
            verdict(self.passed),
            self.suites.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_does_not_pass() {
        let mut s = SuiteReport::new("x", "empty");
        assert!(!s.passed);
        s.push(CheckEntry::new("a", true));
        assert!(s.passed);
        s.push(CheckEntry::new("b", false).with_residual("H"));
        assert!(!s.passed);
        assert_eq!(s.failures().count(), 1);
        assert!(!Document::new("c", vec![]).passed);
    }

    #[test]
    fn json_shape() {
        let mut s = SuiteReport::new("id", "title");
        s.push(CheckEntry::new("c", true).with_residual("0"));
        let doc = Document::new("cmd", vec![s]);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["suites"][0]["checks"][0]["residual"], "0");
        assert!(v["suites"][0]["checks"][0].get("detail").is_none());
    }
}
