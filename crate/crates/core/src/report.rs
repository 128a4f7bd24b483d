//! Pass/fail bookkeeping shared by every verification routine.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(Check { name: name.into(), holds, detail: None });
    }

    pub fn push_detail(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            holds,
            detail: Some(detail.into()),
        });
    }

    /// Appends `other`, prefixing its check names.
    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.holds)
    }
}
