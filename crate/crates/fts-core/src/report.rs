use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// One line of a check report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    pub residual_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl CheckRecord {
    pub fn from_residual(check: impl Into<String>, residual_terms: usize) -> Self {
        let status = if residual_terms == 0 { Status::Pass } else { Status::Fail };
        CheckRecord { check: check.into(), status, residual_terms, seed: None, details: None }
    }

    pub fn with_status(check: impl Into<String>, status: Status, residual_terms: usize) -> Self {
        CheckRecord { check: check.into(), status, residual_terms, seed: None, details: None }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = Some(details);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report(pub Vec<CheckRecord>);

impl Report {
    pub fn push(&mut self, r: CheckRecord) {
        self.0.push(r);
    }

    pub fn all_pass(&self) -> bool {
        self.0.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.0.iter().filter(|r| r.status != Status::Pass).collect()
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.0.iter().find(|r| r.check == check)
    }

    pub fn extend(&mut self, other: Report) {
        self.0.extend(other.0);
    }

    pub fn any_fail(&self) -> bool {
        self.0.iter().any(|r| r.status == Status::Fail)
    }
}
