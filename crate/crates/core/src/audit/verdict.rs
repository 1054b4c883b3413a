use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::space::{Subset, ToleranceSpace};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    /// No instance in scope satisfied the claim's premises.
    Vacuous,
}

/// Self-contained space encoding: size plus the related pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceCode {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl SpaceCode {
    pub fn of(space: &ToleranceSpace) -> Self {
        SpaceCode {
            n: space.size(),
            pairs: space.edges(),
        }
    }

    pub fn to_space(&self) -> Result<ToleranceSpace> {
        ToleranceSpace::build(self.n, &self.pairs, true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub space: SpaceCode,
    /// The subsets the violated instance ranges over; for claims about
    /// classes, the canonical representatives.
    pub witnesses: Vec<Subset>,
    pub trace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditVerdict {
    pub claim: String,
    pub scope: String,
    pub status: Status,
    /// Non-vacuous instances evaluated (up to and including a violation).
    pub instances: u64,
    pub vacuous: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl AuditVerdict {
    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }
}
