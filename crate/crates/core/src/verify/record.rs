use serde::{Deserialize, Serialize};

use super::{CheckId, CheckReport, CheckResult, Verdict};

/// One row per (graph, check), the unit of JSON-lines and CSV output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub b_chi: usize,
    pub check_id: CheckId,
    pub applicable: bool,
    pub verdict: Verdict,
    /// Smallest slack among the evaluated assertions.
    pub slack: Option<f64>,
    pub witness: Option<String>,
}

impl ReportRecord {
    pub fn new(report: &CheckReport, r: &CheckResult) -> Self {
        ReportRecord {
            graph6: report.graph6.clone(),
            n: report.n,
            m: report.m,
            chi: report.chi,
            b_chi: report.b_chi,
            check_id: r.id,
            applicable: r.applicable,
            verdict: r.verdict,
            slack: r.min_slack(),
            witness: r.witness.clone().or_else(|| r.hypothesis.clone()),
        }
    }
}
