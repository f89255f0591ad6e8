//! Pass/fail records shared by all verifiers.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An ordered list of named checks. Names are unique within a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        let name = name.into();
        debug_assert!(self.get(&name).is_none(), "duplicate check {name}");
        self.checks.push(Check {
            name,
            status,
            witness,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Status::Skip, Some(reason.into()));
    }

    /// Records a check from the first failing witness, if any.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c.name, c.status, c.witness);
        }
    }

    /// Appends `other` with every name prefixed by `prefix`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.push(format!("{prefix}{}", c.name), c.status, c.witness);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// `name: witness` of the first failed check.
    pub fn first_failure(&self) -> Option<String> {
        self.failures()
            .next()
            .map(|c| format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("")))
    }
}
