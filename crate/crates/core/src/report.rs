//! Verification results in a shape shared by the text and JSON outputs.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    /// Passes when `expected == actual`.
    pub fn equal(check: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check {
            check: check.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A yes/no property expected to hold.
    pub fn holds(check: impl Into<String>, ok: bool) -> Self {
        Check::equal(check, true, ok)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: expected={} actual={}", self.check, self.expected, self.actual)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
