//! Structured verification reports: one named check per line with status,
//! expected and actual values, plus an overall verdict. Reports serialize to
//! a single JSON object with stable field order so CI runs diff cleanly.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub toolkit_version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<Check>,
    pub verdict: CheckStatus,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>) -> Self {
        VerificationReport {
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            verdict: CheckStatus::Pass,
        }
    }

    pub fn add_input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.push(InputDigest {
            name: name.into(),
            sha256: hex_string(&hasher.finalize()),
        });
    }

    /// Overall verdict: pass iff every non-skipped check passes.
    pub fn finalize(&mut self) {
        self.verdict = if self
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::Fail)
        {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        };
    }

    pub fn passed(&self) -> bool {
        self.verdict == CheckStatus::Pass
    }

    /// Equality of everything the determinism contract covers: check names,
    /// statuses, expected and actual values, and the verdict; elapsed times
    /// and input digests are excluded.
    pub fn semantically_equal(&self, other: &VerificationReport) -> bool {
        self.verdict == other.verdict
            && self.checks.len() == other.checks.len()
            && self.checks.iter().zip(&other.checks).all(|(a, b)| {
                a.name == b.name
                    && a.status == b.status
                    && a.expected == b.expected
                    && a.actual == b.actual
            })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} (toolkit {}) ==", self.command, self.toolkit_version);
        for input in &self.inputs {
            let _ = writeln!(out, "input {}  sha256 {}", input.name, input.sha256);
        }
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            let _ = writeln!(
                out,
                "{status:4}  {:<42} expected: {:<34} actual: {:<34} {:>6} ms",
                c.name, c.expected, c.actual, c.elapsed_ms
            );
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }
}

fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}

/// Collects checks, timing each one and short-circuiting dependents after a
/// hard failure.
pub struct Runner {
    pub report: VerificationReport,
    halted: bool,
}

pub enum Outcome<T> {
    /// check passed, carry a value forward
    Pass(T, String),
    /// check failed but later checks can still run
    Fail(String),
    /// check failed and everything depending on it must be skipped
    FailHard(String),
}

impl Runner {
    pub fn new(command: impl Into<String>) -> Self {
        Runner {
            report: VerificationReport::new(command),
            halted: false,
        }
    }

    /// Runs one check unless a hard failure already occurred; returns the
    /// carried value on pass.
    pub fn check<T>(
        &mut self,
        name: &str,
        expected: impl Into<String>,
        f: impl FnOnce() -> Outcome<T>,
    ) -> Option<T> {
        let expected = expected.into();
        if self.halted {
            self.report.checks.push(Check {
                name: name.to_string(),
                status: CheckStatus::Skipped,
                expected,
                actual: "skipped: earlier check failed".to_string(),
                elapsed_ms: 0,
            });
            return None;
        }
        let start = Instant::now();
        let outcome = f();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        match outcome {
            Outcome::Pass(value, actual) => {
                self.report.checks.push(Check {
                    name: name.to_string(),
                    status: CheckStatus::Pass,
                    expected,
                    actual,
                    elapsed_ms,
                });
                Some(value)
            }
            Outcome::Fail(actual) => {
                self.report.checks.push(Check {
                    name: name.to_string(),
                    status: CheckStatus::Fail,
                    expected,
                    actual,
                    elapsed_ms,
                });
                None
            }
            Outcome::FailHard(actual) => {
                self.report.checks.push(Check {
                    name: name.to_string(),
                    status: CheckStatus::Fail,
                    expected,
                    actual,
                    elapsed_ms,
                });
                self.halted = true;
                None
            }
        }
    }

    /// Skips a check explicitly (for example an opt-in stage that was not
    /// requested or an absent optional input).
    pub fn skip(&mut self, name: &str, expected: impl Into<String>, reason: &str) {
        self.report.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            expected: expected.into(),
            actual: format!("skipped: {reason}"),
            elapsed_ms: 0,
        });
    }

    pub fn into_report(mut self) -> VerificationReport {
        self.report.finalize();
        self.report
    }
}
