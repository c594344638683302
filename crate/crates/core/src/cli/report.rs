use serde::{Deserialize, Serialize};

use crate::algebra::{ElementSet, SemigroupSpec};
use crate::cd_constants::OmegaBreakdown;
use crate::davenport::{TransformAudit, TransformResult};
use crate::localization::LocalizationResult;
use crate::theorem_suite::{BoundReport, SweepSummary};

/// Machine-readable record of one run.
///
/// Without `--timing` it depends only on the command and the semigroup, so
/// repeated runs produce identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// The command in canonical form, without output-only flags.
    pub command: String,
    pub semigroup: SemigroupSpec,
    pub order: usize,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub result: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Sumset { x: ElementSet, y: ElementSet, sumset: ElementSet, size: usize },
    Omega(OmegaBreakdown),
    Bound(BoundReport),
    Sweep(SweepSummary),
    Transform {
        x: ElementSet,
        y: ElementSet,
        /// The ambient had no identity and the transform ran in its unitization.
        unitized: bool,
        result: TransformResult,
        /// Absent when `Y_z` is empty.
        audit: Option<TransformAudit>,
    },
    Localization(LocalizationResult),
}

/// What `--json` prints when a command fails after parsing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub command: String,
    pub exit_code: i32,
    pub error: String,
}
