//! JSON reports produced by the verifiers.

use serde::{Deserialize, Serialize};

use crate::hypersurface::LocalHypersurfaceModel;
use crate::ideals::MonomialIdeal;
use crate::lattice::{BoxComparison, ExponentVector, LatticeBox};
use crate::num::Rational;

/// Threshold convention shared by every verifier.
pub const CONVENTION: &str =
    "strict interior as <w,m> >= floor(lambda*c)+1; a^mu = R and the module is omega for mu <= 0";

/// One compared graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeEntry {
    pub k: i64,
    pub lhs_count: u64,
    pub rhs_count: u64,
    pub equal: bool,
    /// Lexicographically first point in exactly one side.
    pub witness: Option<ExponentVector>,
}

impl DegreeEntry {
    pub fn from_comparison(k: i64, c: &BoxComparison) -> DegreeEntry {
        DegreeEntry {
            k,
            lhs_count: c.lhs_count,
            rhs_count: c.rhs_count,
            equal: c.equal(),
            witness: c.first_mismatch.clone(),
        }
    }
}

/// Enumeration bounds recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportBox {
    Lattice(LatticeBox),
    /// Local model box: `a, b <= deg` and `c_i <= c`.
    Local { deg: i64, c: i64 },
}

/// Pair-rationality outcome for one ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOutcome {
    pub rational: bool,
    /// Decided by threshold comparison rather than box enumeration.
    pub exact: bool,
}

/// The three pair-rationality values compared by the biconditional check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRationality {
    #[serde(rename = "R")]
    pub base: PairOutcome,
    #[serde(rename = "S")]
    pub rees: PairOutcome,
    #[serde(rename = "T")]
    pub extended: PairOutcome,
}

impl PairRationality {
    /// `T rational <=> (R rational and S rational)`.
    pub fn biconditional(&self) -> bool {
        self.extended.rational == (self.base.rational && self.rees.rational)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub theorem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<MonomialIdeal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<LocalHypersurfaceModel>,
    #[serde(with = "crate::num::serde_rational")]
    pub lambda: Rational,
    pub k_range: [i64; 2],
    #[serde(rename = "box")]
    pub bounds: ReportBox,
    pub convention: String,
    pub per_k: Vec<DegreeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<PairRationality>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic_identity: Option<bool>,
    pub overall: bool,
}

impl VerificationReport {
    /// Deterministic pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
