use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T5_MNPD_PROPS")]
    MnpdProperties,
    #[serde(rename = "T9_MN2D_PROPS")]
    Mn2dProperties,
    #[serde(rename = "T3_HOMOG")]
    HomogeneousSets,
    #[serde(rename = "T4_CUTSET")]
    CliqueCutsets,
    #[serde(rename = "L6_TRIANGLEFREE")]
    TriangleFreeCutsets,
    #[serde(rename = "L11_CLAWFREE_ANTIHOLE")]
    ClawFreeAntiholes,
    #[serde(rename = "T10_4CRITICAL")]
    FourCritical,
    #[serde(rename = "CHROMATIC_BOUNDS")]
    ChromaticBounds,
    #[serde(rename = "T2_EQUIVALENCE_EMPIRICAL")]
    WeightEquivalence,
    #[serde(rename = "P_PD_VS_PWD")]
    PdVsPwd,
    #[serde(rename = "P_VERTEX_IN_A")]
    VertexInA,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::MnpdProperties,
        TheoremId::Mn2dProperties,
        TheoremId::HomogeneousSets,
        TheoremId::CliqueCutsets,
        TheoremId::TriangleFreeCutsets,
        TheoremId::ClawFreeAntiholes,
        TheoremId::FourCritical,
        TheoremId::ChromaticBounds,
        TheoremId::WeightEquivalence,
        TheoremId::PdVsPwd,
        TheoremId::VertexInA,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::MnpdProperties => "T5_MNPD_PROPS",
            TheoremId::Mn2dProperties => "T9_MN2D_PROPS",
            TheoremId::HomogeneousSets => "T3_HOMOG",
            TheoremId::CliqueCutsets => "T4_CUTSET",
            TheoremId::TriangleFreeCutsets => "L6_TRIANGLEFREE",
            TheoremId::ClawFreeAntiholes => "L11_CLAWFREE_ANTIHOLE",
            TheoremId::FourCritical => "T10_4CRITICAL",
            TheoremId::ChromaticBounds => "CHROMATIC_BOUNDS",
            TheoremId::WeightEquivalence => "T2_EQUIVALENCE_EMPIRICAL",
            TheoremId::PdVsPwd => "P_PD_VS_PWD",
            TheoremId::VertexInA => "P_VERTEX_IN_A",
        }
    }

    /// Hunters report counterexamples to open questions, not violations
    /// of proved statements.
    pub fn is_hunt(self) -> bool {
        matches!(self, TheoremId::PdVsPwd | TheoremId::VertexInA)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {s:?}")))
    }
}

/// One graph that breaks a check (or, for hunters, answers an open
/// question), identified by its graph6 string alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub universe: String,
    /// Corpus members processed (skipped members excluded).
    pub checked: u64,
    /// Members the statement actually speaks about (e.g. certified MNPD).
    pub in_scope: u64,
    /// No member was in scope, so nothing was asserted.
    pub vacuous: bool,
    pub violations: Vec<Violation>,
    /// Members left out because a size cap was hit.
    pub skipped: Vec<Violation>,
    pub assumptions: Vec<String>,
    /// Census counts specific to the check.
    pub counts: BTreeMap<String, u64>,
    /// Files written for counterexample hits.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<String>,
    pub wall_time_ms: u64,
}

impl TheoremReport {
    pub fn new(theorem_id: TheoremId, universe: impl Into<String>) -> Self {
        TheoremReport {
            theorem_id,
            universe: universe.into(),
            checked: 0,
            in_scope: 0,
            vacuous: true,
            violations: Vec::new(),
            skipped: Vec::new(),
            assumptions: Vec::new(),
            counts: BTreeMap::new(),
            artifacts: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub(crate) fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += by;
    }

    pub(crate) fn finish(&mut self) {
        self.vacuous = self.in_scope == 0;
    }

    pub(crate) fn violation(&mut self, graph6: &str, detail: impl Into<String>) {
        self.violations.push(Violation {
            graph6: graph6.to_string(),
            detail: detail.into(),
        });
    }
}
