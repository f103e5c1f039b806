//! Check results and per-suite reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Version of every structured document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// Disagrees with transcribed published data exactly at documented
    /// locations; the derived value is the one reported as `actual`.
    Erratum,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Erratum => "ERRATUM",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            name: name.into(),
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn pass_if(name: impl Into<String>, ok: bool, expected: impl ToString, actual: impl ToString) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check::new(name, status, expected, actual)
    }

    /// Equality check of two displayable values.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let ok = expected == actual;
        Check::pass_if(name, ok, format!("{expected:?}"), format!("{actual:?}"))
    }

    /// Comparison with published data: pass when nothing differs, erratum
    /// when the differences are exactly the documented ones, fail otherwise.
    pub fn against_reference<T: PartialEq + fmt::Debug>(name: impl Into<String>, differences: &[T], documented: &[T]) -> Self {
        let status = if differences.is_empty() {
            Status::Pass
        } else if differences == documented {
            Status::Erratum
        } else {
            Status::Fail
        };
        Check::new(
            name,
            status,
            format!("differences {documented:?}"),
            format!("differences {differences:?}"),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl SuiteReport {
    /// Overall status is the worst check status.
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        let status = checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass);
        SuiteReport {
            suite: suite.into(),
            checks,
            status,
        }
    }

    /// Whether the suite passes; errata count as failures when `strict`.
    pub fn passes(&self, strict: bool) -> bool {
        match self.status {
            Status::Pass => true,
            Status::Erratum => !strict,
            Status::Fail => false,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("[{}] {}\n", self.status, self.suite);
        for c in &self.checks {
            out.push_str(&format!("  {:<7} {}\n", c.status.to_string(), c.name));
            if c.status != Status::Pass {
                out.push_str(&format!("          expected: {}\n", c.expected));
                out.push_str(&format!("          actual:   {}\n", c.actual));
            }
        }
        out
    }
}

/// Reports of a full `verify` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub strict: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn new(suites: Vec<SuiteReport>, strict: bool) -> Self {
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            strict,
            suites,
        }
    }

    pub fn passes(&self) -> bool {
        self.suites.iter().all(|s| s.passes(self.strict))
    }

    /// First suite that does not pass, if any.
    pub fn first_failure(&self) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| !s.passes(self.strict))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_is_worst() {
        let r = SuiteReport::new(
            "demo",
            vec![
                Check::equal("a", 1, 1),
                Check::against_reference("b", &[(0, 2)], &[(0, 2)]),
            ],
        );
        assert_eq!(r.status, Status::Erratum);
        assert!(r.passes(false));
        assert!(!r.passes(true));
        let bad = SuiteReport::new("demo", vec![Check::equal("c", 1, 2)]);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(SuiteReport::new("empty", vec![]).status, Status::Pass);
    }

    #[test]
    fn undocumented_difference_fails() {
        let c = Check::against_reference("t", &[(1, 1), (0, 2)], &[(0, 2)]);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(Check::against_reference::<u8>("t", &[], &[3]).status, Status::Pass);
    }

    #[test]
    fn serde_round_trip() {
        let r = VerifyReport::new(
            vec![SuiteReport::new("x", vec![Check::pass_if("y", true, "1", "1")])],
            false,
        );
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"schema_version\":1"));
        assert!(json.contains("\"status\":\"pass\""));
        assert_eq!(serde_json::from_str::<VerifyReport>(&json).unwrap(), r);
    }
}
