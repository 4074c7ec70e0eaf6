//! Verdicts on quantitative statements: each check yields a [`ClaimResult`]
//! carrying an exact witness, and [`run_all_claims`] evaluates the whole
//! registry under a [`Budget`].

mod registry;
mod series;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use registry::{claim_ids, run_all_claims, run_claim, Budget, PRINTED_DENSITY_TABLE};
pub use series::{
    binet_check, check_telescoping, doubling_identity_check, genfunc_check, genfunc_coefficients,
    telescope_terms, DoublingReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Verified,
    Refuted,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Refuted => "refuted",
        }
    }
}

/// One adjudicated statement. Field names are part of the JSON contract.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub location: String,
    pub status: ClaimStatus,
    pub witness: String,
    pub payload: Value,
}

impl ClaimResult {
    pub fn verified(
        id: impl Into<String>,
        location: impl Into<String>,
        witness: impl Into<String>,
        payload: Value,
    ) -> Self {
        ClaimResult {
            id: id.into(),
            location: location.into(),
            status: ClaimStatus::Verified,
            witness: witness.into(),
            payload,
        }
    }

    pub fn refuted(
        id: impl Into<String>,
        location: impl Into<String>,
        witness: impl Into<String>,
        payload: Value,
    ) -> Self {
        ClaimResult {
            id: id.into(),
            location: location.into(),
            status: ClaimStatus::Refuted,
            witness: witness.into(),
            payload,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == ClaimStatus::Verified
    }
}
