//! Bound and multiplicity checkers over a fully analysed graph.
//!
//! [`GraphAnalysis::new`] computes everything once (distances, spectrum,
//! coloring, twin classes, complement structure); each checker in
//! [`REGISTRY`] is then a pure function of the analysis returning a
//! [`CheckResult`] with one [`Assertion`] per inequality it tests. Slack is
//! always oriented so that `slack >= 0` means the inequality holds and
//! `slack == 0` means it is tight.

mod checks;
mod extremal;
mod record;

pub use checks::REGISTRY;
pub use extremal::{audit_extremal, CorpusEntry, ExtremalAudit, Minimizer};
pub use record::ReportRecord;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{max_ell1_coloring, optimal_coloring, ColoringResult};
use crate::eigen::{eig_symmetric, Spectrum, Tolerances};
use crate::graph::{to_graph6, Graph};
use crate::metric::{apsp, distance_laplacian, DistanceData};
use crate::twins::{twin_classes_with, TwinClass};
use crate::Result;

/// Which optimal coloring feeds the class-size based checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringMode {
    /// The deterministic coloring from the exact search.
    #[default]
    Default,
    /// An optimal coloring with the largest possible first class.
    MaxEll1,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub tol: Tolerances,
    pub coloring: ColoringMode,
}

/// Every quantity the checkers need, computed once per graph.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub graph: Graph,
    pub distances: DistanceData,
    pub spectrum: Spectrum,
    pub coloring: ColoringResult,
    /// Present when [`ColoringMode::MaxEll1`] was requested.
    pub max_ell1: Option<ColoringResult>,
    pub twins: Vec<TwinClass>,
    pub complement_components: usize,
    pub universal_vertices: usize,
    pub tol: Tolerances,
}

impl GraphAnalysis {
    /// Analyses a connected graph. `MaxEll1` mode requires `n <= 16`.
    pub fn new(g: &Graph, opts: AnalysisOptions) -> Result<Self> {
        let distances = apsp(g)?;
        let dl = distance_laplacian(&distances);
        let spectrum = Spectrum::from_values(
            eig_symmetric(&dl.to_f64(), opts.tol.solver)?,
            opts.tol.interval,
        );
        let coloring = optimal_coloring(g);
        let max_ell1 = match opts.coloring {
            ColoringMode::Default => None,
            ColoringMode::MaxEll1 => Some(max_ell1_coloring(g)?),
        };
        Ok(GraphAnalysis {
            graph: g.clone(),
            twins: twin_classes_with(g, &distances),
            distances,
            spectrum,
            coloring,
            max_ell1,
            complement_components: g.complement().connected_components().len(),
            universal_vertices: g.universal_vertex_count(),
            tol: opts.tol,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn chi(&self) -> usize {
        self.coloring.chi
    }

    /// `ceil(n / chi)`.
    pub fn ceil_ratio(&self) -> usize {
        self.n().div_ceil(self.chi())
    }

    pub fn b_chi(&self) -> usize {
        self.n() + self.ceil_ratio()
    }

    /// The coloring the class-size checks use.
    pub fn active_coloring(&self) -> &ColoringResult {
        self.max_ell1.as_ref().unwrap_or(&self.coloring)
    }

    pub fn ell(&self) -> &[usize] {
        &self.active_coloring().sizes
    }

    pub fn dl1(&self) -> f64 {
        self.spectrum.largest()
    }

    /// Eigenvalues in `[b_chi, dl1]`.
    pub fn m_above(&self) -> usize {
        self.spectrum
            .count_in_interval(self.b_chi() as f64, self.dl1(), self.tol.interval)
    }

    /// Eigenvalues in `[0, b_chi)`.
    pub fn mu_below(&self) -> usize {
        self.spectrum
            .count_below(self.b_chi() as f64, self.tol.interval)
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.graph)
    }
}

/// Stable identifiers of the registered checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    AhBound,
    ColorMajorization,
    ManyAbove,
    KRange,
    IntervalComplement,
    NMultiplicity,
    CliqueRefine,
    IndepRefine,
    DiameterRefine,
    CountingIdentity,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::AhBound => "ah_bound",
            CheckId::ColorMajorization => "color_majorization",
            CheckId::ManyAbove => "many_above",
            CheckId::KRange => "k_range",
            CheckId::IntervalComplement => "interval_complement",
            CheckId::NMultiplicity => "n_multiplicity",
            CheckId::CliqueRefine => "clique_refine",
            CheckId::IndepRefine => "indep_refine",
            CheckId::DiameterRefine => "diameter_refine",
            CheckId::CountingIdentity => "counting_identity",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "==")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "==",
        })
    }
}

/// One tested inequality `lhs REL rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub label: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    /// `lhs - rhs` for `>=` and `==`, `rhs - lhs` for `<=`.
    pub slack: f64,
    pub holds: bool,
}

impl Assertion {
    pub fn ge(label: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = lhs - rhs;
        Assertion {
            label: label.into(),
            lhs,
            relation: Relation::Ge,
            rhs,
            slack,
            holds: slack >= -tol,
        }
    }

    pub fn le(label: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = rhs - lhs;
        Assertion {
            label: label.into(),
            lhs,
            relation: Relation::Le,
            rhs,
            slack,
            holds: slack >= -tol,
        }
    }

    pub fn eq(label: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = lhs - rhs;
        Assertion {
            label: label.into(),
            lhs,
            relation: Relation::Eq,
            rhs,
            slack,
            holds: slack.abs() <= tol,
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} (slack {})",
            self.label,
            fmt_num(self.lhs),
            self.relation,
            fmt_num(self.rhs),
            fmt_num(self.slack)
        )
    }
}

/// Integers print without decimals, everything else with six.
pub fn fmt_num(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.6}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        })
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: CheckId,
    pub applicable: bool,
    /// The unmet hypothesis when not applicable.
    pub hypothesis: Option<String>,
    /// Sub-claims skipped because their own hypothesis failed.
    pub skipped: Vec<String>,
    pub assertions: Vec<Assertion>,
    pub verdict: Verdict,
    /// Failing assertions, when the verdict is a failure.
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn not_applicable(id: CheckId, hypothesis: impl Into<String>) -> Self {
        CheckResult {
            id,
            applicable: false,
            hypothesis: Some(hypothesis.into()),
            skipped: Vec::new(),
            assertions: Vec::new(),
            verdict: Verdict::NotApplicable,
            witness: None,
        }
    }

    pub fn evaluated(id: CheckId, assertions: Vec<Assertion>, skipped: Vec<String>) -> Self {
        let failed: Vec<String> = assertions
            .iter()
            .filter(|a| !a.holds)
            .map(|a| a.to_string())
            .collect();
        let (verdict, witness) = if failed.is_empty() {
            (Verdict::Pass, None)
        } else {
            (Verdict::Fail, Some(failed.join("; ")))
        };
        CheckResult {
            id,
            applicable: true,
            hypothesis: None,
            skipped,
            assertions,
            verdict,
            witness,
        }
    }

    /// Smallest slack over the assertions, if any were evaluated.
    pub fn min_slack(&self) -> Option<f64> {
        self.assertions
            .iter()
            .map(|a| a.slack)
            .min_by(f64::total_cmp)
    }
}

/// All check results for one graph, in registry order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub b_chi: usize,
    pub results: Vec<CheckResult>,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// One flat record per check.
    pub fn records(&self) -> Vec<ReportRecord> {
        self.results
            .iter()
            .map(|r| ReportRecord::new(self, r))
            .collect()
    }
}

/// Runs every registered check on an existing analysis.
pub fn run_checks(a: &GraphAnalysis) -> CheckReport {
    CheckReport {
        graph6: a.graph6(),
        n: a.n(),
        m: a.graph.m(),
        chi: a.chi(),
        b_chi: a.b_chi(),
        results: REGISTRY.iter().map(|(_, check)| check(a)).collect(),
    }
}

/// Analyses `g` once and runs every registered check.
pub fn run_all(g: &Graph, opts: AnalysisOptions) -> Result<CheckReport> {
    Ok(run_checks(&GraphAnalysis::new(g, opts)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assertion_orientation() {
        let a = Assertion::ge("x", 5.0, 3.0, 0.0);
        assert_eq!((a.slack, a.holds), (2.0, true));
        let a = Assertion::le("x", 5.0, 3.0, 0.0);
        assert_eq!((a.slack, a.holds), (-2.0, false));
        let a = Assertion::le("x", 3.0, 3.0, 0.0);
        assert_eq!((a.slack, a.holds), (0.0, true));
        let a = Assertion::eq("x", 3.0, 3.0 + 1e-8, 1e-6);
        assert!(a.holds);
        assert!(!Assertion::eq("x", 3.0, 4.0, 1e-6).holds);
        assert!(Assertion::ge("x", 3.0 - 1e-7, 3.0, 1e-6).holds);
    }

    #[test]
    fn failed_results_carry_witness() {
        let r = CheckResult::evaluated(
            CheckId::AhBound,
            vec![Assertion::ge("dl1 >= b_chi", 8.0, 9.0, 1e-6)],
            vec![],
        );
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.as_deref().unwrap().contains("dl1 >= b_chi"));
        assert_eq!(r.min_slack(), Some(-1.0));
        let na = CheckResult::not_applicable(CheckId::AhBound, "G is complete");
        assert_eq!(na.verdict, Verdict::NotApplicable);
        assert!(na.hypothesis.is_some());
        assert_eq!(na.min_slack(), None);
    }

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(14.0), "14");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(26.4459), "26.445900");
    }
}
