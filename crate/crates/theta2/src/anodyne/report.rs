use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::delta::Shuffle;
use crate::hyperface::HyperfaceLabel;
use crate::theta::ThetaShape;

/// The named locus a cell is attached along.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct HornTag {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shuffle: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub set: Vec<String>,
}

impl HornTag {
    pub fn named(family: &str) -> Self {
        HornTag { family: family.to_string(), ..Default::default() }
    }

    pub fn horn_h(k: usize) -> Self {
        HornTag { k: Some(k), ..HornTag::named("horn_h") }
    }

    pub fn horn_v(k: usize, i: usize) -> Self {
        HornTag { k: Some(k), i: Some(i), ..HornTag::named("horn_v") }
    }

    pub fn horn_h_alt(k: usize, s: &Shuffle) -> Self {
        HornTag { k: Some(k), shuffle: Some(s.to_string()), ..HornTag::named("horn_h_alt") }
    }

    /// A family indexed by a set of hyperfaces of `shape`.
    pub fn with_set(family: &str, shape: &ThetaShape, labels: &[HyperfaceLabel]) -> Self {
        HornTag { set: labels.iter().map(|l| l.display_on(shape)).collect(), ..HornTag::named(family) }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Checks {
    pub pullback: bool,
    pub cover: bool,
    pub injective: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.pullback && self.cover && self.injective
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepReport {
    pub index: usize,
    pub stage: String,
    pub cell: String,
    pub shape: String,
    pub horn: HornTag,
    pub checks: Checks,
    /// Side conditions a particular script asserts about this step.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub extra: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failures: Vec<String>,
    /// Set when the cell lies in the top layer of a truncated ambient; the
    /// pullback was then compared only through the certified dimension.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pullback_through: Option<usize>,
}

impl StepReport {
    pub fn ok(&self) -> bool {
        self.checks.all() && self.extra.values().all(|&b| b)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FinalCheck {
    pub equals_target: bool,
    pub certified_dim: usize,
    /// Cells of this dimension and above were not certified.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub uncertified_from: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Every square and the final union verified.
    Certified,
    /// Nothing to attach: the inclusion is an identity.
    Trivial,
    Failed,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub script: String,
    pub params: BTreeMap<String, String>,
    pub bound: usize,
    /// How ties in the attaching order were broken.
    pub order: String,
    /// Checks on the starting subobject and on the script's bookkeeping.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub base: BTreeMap<String, bool>,
    pub steps: Vec<StepReport>,
    #[serde(rename = "final")]
    pub final_check: FinalCheck,
    pub status: Status,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.status != Status::Failed
    }

    /// The first failing step, if any.
    pub fn first_failure(&self) -> Option<&StepReport> {
        self.steps.iter().find(|s| !s.ok())
    }

    pub(crate) fn settle(&mut self) {
        let good =
            self.steps.iter().all(|s| s.ok()) && self.base.values().all(|&b| b) && self.final_check.equals_target;
        self.status = if !good {
            Status::Failed
        } else if self.steps.is_empty() {
            Status::Trivial
        } else {
            Status::Certified
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per report.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = match self.status {
            Status::Certified => "decomposition certified",
            Status::Trivial => "trivial",
            Status::Failed => "FAILED",
        };
        let mut s = format!("{} {} : {} steps, {status}", self.script, params.join(" "), self.steps.len());
        if let Some(d) = self.final_check.uncertified_from {
            s.push_str(&format!(" through dim {} (dim >= {d} uncertified)", self.final_check.certified_dim));
        }
        s
    }
}
