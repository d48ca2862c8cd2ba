use std::fmt;

use crate::error::Error;
use crate::projective::{Line, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    /// The assertion does not apply to this configuration.
    Vacuous,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

/// Outcome of a verifier: named checks plus every intermediate object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub theorem: String,
    pub checks: Vec<Check>,
    pub witness: Vec<(String, String)>,
}

impl Report {
    pub fn new(theorem: impl Into<String>) -> Self {
        Report { theorem: theorem.into(), ..Default::default() }
    }

    pub fn record(&mut self, name: &str, outcome: Outcome, detail: impl Into<String>) -> Outcome {
        self.checks.push(Check { name: name.to_string(), outcome, detail: detail.into() });
        outcome
    }

    pub fn check(&mut self, name: &str, ok: bool) -> Outcome {
        self.record(name, if ok { Outcome::Pass } else { Outcome::Fail }, "")
    }

    /// A computation error counts as a failure, with the error kept as detail.
    pub fn check_result(&mut self, name: &str, r: Result<bool, Error>) -> Outcome {
        match r {
            Ok(ok) => self.check(name, ok),
            Err(e) => self.record(name, Outcome::Fail, e.to_string()),
        }
    }

    pub fn vacuous(&mut self, name: &str, why: &str) -> Outcome {
        self.record(name, Outcome::Vacuous, why)
    }

    pub fn point(&mut self, name: &str, p: &Point) {
        self.witness.push((name.to_string(), p.to_string()));
    }

    pub fn line(&mut self, name: &str, l: &Line) {
        self.witness.push((name.to_string(), l.to_string()));
    }

    pub fn outcome(&self, name: &str) -> Option<Outcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.outcome)
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
        for (n, v) in other.witness {
            self.witness.push((format!("{prefix}{n}"), v));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.theorem)?;
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(f, "  {:<24} {}", c.name, c.outcome)?;
            } else {
                writeln!(f, "  {:<24} {} ({})", c.name, c.outcome, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Named witness points, in the order they were printed.
pub fn format_witness(w: &[(String, String)]) -> String {
    w.iter().map(|(n, v)| format!("  {n} = {v}\n")).collect()
}
