//! Findings stream: one self-contained JSON record per (graph, check), so
//! campaigns stream to disk and resume cleanly after truncation.

use gallai_core::intersect::Witness;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Bumped when the finding record's shape changes.
pub const FINDINGS_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub schema: u32,
    pub graph6: String,
    pub check: String,
    pub holds: bool,
    pub vacuous: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub capped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub order_l: usize,
    pub longest_path_count: usize,
    pub elapsed_micros: u64,
}

impl Finding {
    pub fn is_violation(&self) -> bool {
        !self.holds
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("findings always serialize")
    }
}

/// Per-check tallies of a findings stream.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Summary {
    /// check name -> (holds, violations, vacuous)
    pub per_check: BTreeMap<String, CheckTally>,
    pub graphs: usize,
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CheckTally {
    pub holds: usize,
    pub violations: usize,
    pub vacuous: usize,
}

impl Summary {
    pub fn record(&mut self, finding: &Finding) {
        let tally = self.per_check.entry(finding.check.clone()).or_default();
        if finding.vacuous {
            tally.vacuous += 1;
            tally.holds += 1;
        } else if finding.holds {
            tally.holds += 1;
        } else {
            tally.violations += 1;
        }
    }

    pub fn total_violations(&self) -> usize {
        self.per_check.values().map(|t| t.violations).sum()
    }

    /// Violations on checks other than the listed informational ones.
    pub fn gating_violations(&self, informational: &[String]) -> usize {
        self.per_check
            .iter()
            .filter(|(name, _)| !informational.contains(name))
            .map(|(_, t)| t.violations)
            .sum()
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} graphs", self.graphs)?;
        writeln!(f, "{:<20} {:>8} {:>11} {:>8}", "check", "holds", "violations", "vacuous")?;
        for (name, t) in &self.per_check {
            writeln!(f, "{:<20} {:>8} {:>11} {:>8}", name, t.holds, t.violations, t.vacuous)?;
        }
        Ok(())
    }
}
