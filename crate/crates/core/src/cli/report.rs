use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::numeric::CheckOutcome;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericEntry {
    pub label: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Output of one CLI command. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub symbolic: Vec<Entry>,
    pub constraints: Vec<String>,
    pub numeric: Vec<NumericEntry>,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            input: BTreeMap::new(),
            symbolic: Vec::new(),
            constraints: Vec::new(),
            numeric: Vec::new(),
            verdict: Verdict {
                passed: true,
                checks: Vec::new(),
            },
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.input.insert(key.to_string(), value.to_string());
        self
    }

    pub fn symbolic(&mut self, label: impl Into<String>, value: impl ToString) -> &mut Self {
        self.symbolic.push(Entry {
            label: label.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn constraint(&mut self, line: impl Into<String>) -> &mut Self {
        self.constraints.push(line.into());
        self
    }

    pub fn numeric(&mut self, label: impl Into<String>, outcome: CheckOutcome) -> &mut Self {
        self.numeric.push(NumericEntry {
            label: label.into(),
            residual: outcome.residual,
            tolerance: outcome.tolerance,
            passed: outcome.passed,
        });
        self.verdict.passed &= outcome.passed;
        self
    }

    pub fn check(
        &mut self,
        label: impl Into<String>,
        passed: bool,
        detail: Option<String>,
    ) -> &mut Self {
        self.verdict.checks.push(Check {
            label: label.into(),
            passed,
            detail,
        });
        self.verdict.passed &= passed;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.input.is_empty() {
            let _ = writeln!(out, "input:");
            for (k, v) in &self.input {
                let _ = writeln!(out, "  {} = {}", k, v);
            }
        }
        if !self.symbolic.is_empty() {
            let _ = writeln!(out, "symbolic:");
            for e in &self.symbolic {
                let _ = writeln!(out, "  {} = {}", e.label, e.value);
            }
        }
        if !self.constraints.is_empty() {
            let _ = writeln!(out, "constraints:");
            for c in &self.constraints {
                let _ = writeln!(out, "  {}", c);
            }
        }
        if !self.numeric.is_empty() {
            let _ = writeln!(out, "numeric:");
            for n in &self.numeric {
                let _ = writeln!(
                    out,
                    "  [{}] {}: residual {:.3e} (tol {:.0e})",
                    mark(n.passed),
                    n.label,
                    n.residual,
                    n.tolerance
                );
            }
        }
        if !self.verdict.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.verdict.checks {
                match &c.detail {
                    Some(d) => {
                        let _ = writeln!(out, "  [{}] {}: {}", mark(c.passed), c.label, d);
                    }
                    None => {
                        let _ = writeln!(out, "  [{}] {}", mark(c.passed), c.label);
                    }
                }
            }
        }
        let total = self.verdict.checks.len() + self.numeric.len();
        let passed = self.verdict.checks.iter().filter(|c| c.passed).count()
            + self.numeric.iter().filter(|n| n.passed).count();
        let _ = writeln!(
            out,
            "verdict: {} ({}/{} checks passed)",
            if self.verdict.passed { "PASS" } else { "FAIL" },
            passed,
            total
        );
        out
    }
}

fn mark(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}
