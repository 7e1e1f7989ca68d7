//! Pass/fail records produced by the verification routines. A failing
//! check is data, not an error.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Where the check failed (an index, exponent or parameter tuple).
    pub at: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, at: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                at: at.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn fail(&mut self, at: impl fmt::Display, detail: impl Into<String>) {
        self.checks += 1;
        self.failures.push(Failure {
            at: at.to_string(),
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        for f in other.failures {
            self.failures.push(Failure {
                at: format!("{}: {}", other.name, f.at),
                detail: f.detail,
            });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} checks)", self.name, self.checks)
        } else {
            write!(
                f,
                "FAIL {} ({}/{} failed)",
                self.name,
                self.failures.len(),
                self.checks
            )?;
            for fl in self.failures.iter().take(5) {
                write!(f, "\n  at {}: {}", fl.at, fl.detail)?;
            }
            Ok(())
        }
    }
}
