use serde::{Deserialize, Serialize};

use crate::coloring::chromatic_number;
use crate::eigen::{spectrum, Tolerances};
use crate::graph::{connected_class_count, is_complete_multipartite, to_graph6, Graph, PartSizes};
use crate::{Error, Result};

/// The per-graph data the extremal audit needs.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub graph: Graph,
    pub chi: usize,
    pub dl1: f64,
}

impl CorpusEntry {
    pub fn new(g: &Graph, tol: Tolerances) -> Result<Self> {
        Ok(CorpusEntry {
            graph: g.clone(),
            chi: chromatic_number(g),
            dl1: spectrum(g, tol)?.largest(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Minimizer {
    pub graph6: String,
    pub dl1: f64,
    /// Part sizes when the minimizer is complete multipartite.
    pub parts: Option<PartSizes>,
}

/// Minimum spectral radius over one chromatic slice of a complete corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalAudit {
    pub n: usize,
    pub chi: usize,
    /// Graphs in the corpus with this chromatic number.
    pub candidates: usize,
    pub min_dl1: f64,
    /// `n + ceil(n / chi)`.
    pub expected_min: usize,
    pub minimizers: Vec<Minimizer>,
    /// The observed minimum equals `expected_min`.
    pub min_matches: bool,
    /// Every minimizer is complete `chi`-partite with largest part `ceil(n / chi)`.
    pub minimizers_characterized: bool,
    /// Every complete `chi`-partite graph with largest part `ceil(n / chi)` is a minimizer.
    pub converse_holds: bool,
    /// Minimizers with a part smaller than `floor(n / chi)`. Reported, never asserted.
    pub balanced_findings: Vec<Minimizer>,
}

impl ExtremalAudit {
    pub fn passed(&self) -> bool {
        self.min_matches && self.minimizers_characterized && self.converse_holds
    }
}

fn is_extremal_shape(parts: &Option<PartSizes>, chi: usize, ceil: usize) -> bool {
    parts
        .as_ref()
        .is_some_and(|p| p.k() == chi && p.largest() == ceil)
}

/// Audits the extremal characterization at `(n, chi)` over `corpus`, which
/// must hold exactly one graph per connected isomorphism class on `n`
/// vertices. Returns `None` when no corpus graph has chromatic number `chi`.
pub fn audit_extremal(
    n: usize,
    chi: usize,
    corpus: &[CorpusEntry],
    tol: Tolerances,
) -> Result<Option<ExtremalAudit>> {
    let expected = connected_class_count(n).ok_or(Error::TooLarge { n, limit: 8 })?;
    if corpus.len() != expected {
        return Err(Error::CorpusCount {
            n,
            found: corpus.len(),
            expected,
        });
    }
    if let Some(e) = corpus.iter().find(|e| e.graph.n() != n) {
        return Err(Error::CorpusMismatch {
            expected: n,
            found: e.graph.n(),
        });
    }
    let slice: Vec<&CorpusEntry> = corpus.iter().filter(|e| e.chi == chi).collect();
    let Some(min_dl1) = slice.iter().map(|e| e.dl1).min_by(f64::total_cmp) else {
        return Ok(None);
    };
    let ceil = n.div_ceil(chi);
    let floor = n / chi;
    let expected_min = n + ceil;
    let mut minimizers = Vec::new();
    let mut converse_holds = true;
    for e in &slice {
        let parts = is_complete_multipartite(&e.graph);
        let is_min = e.dl1 <= min_dl1 + tol.interval;
        if is_extremal_shape(&parts, chi, ceil) && !is_min {
            converse_holds = false;
        }
        if is_min {
            minimizers.push(Minimizer {
                graph6: to_graph6(&e.graph),
                dl1: e.dl1,
                parts,
            });
        }
    }
    minimizers.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let minimizers_characterized = minimizers
        .iter()
        .all(|m| is_extremal_shape(&m.parts, chi, ceil));
    let balanced_findings = minimizers
        .iter()
        .filter(|m| {
            m.parts
                .as_ref()
                .is_some_and(|p| p.as_slice().iter().any(|&l| l < floor))
        })
        .cloned()
        .collect();
    Ok(Some(ExtremalAudit {
        n,
        chi,
        candidates: slice.len(),
        min_dl1,
        expected_min,
        min_matches: (min_dl1 - expected_min as f64).abs() <= tol.interval,
        minimizers_characterized,
        converse_holds,
        minimizers,
        balanced_findings,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_connected;

    fn corpus(n: usize) -> Vec<CorpusEntry> {
        enumerate_connected(n)
            .unwrap()
            .iter()
            .map(|g| CorpusEntry::new(g, Tolerances::default()).unwrap())
            .collect()
    }

    #[test]
    fn small_corpora_pass() {
        for n in 3..=6 {
            let c = corpus(n);
            for chi in 2..n {
                let a = audit_extremal(n, chi, &c, Tolerances::default())
                    .unwrap()
                    .unwrap();
                assert!(a.passed(), "{a:?}");
                assert_eq!(a.min_dl1.round() as usize, n + n.div_ceil(chi));
            }
        }
    }

    #[test]
    fn n6_chi4_minimizer_is_k2211() {
        let a = audit_extremal(6, 4, &corpus(6), Tolerances::default())
            .unwrap()
            .unwrap();
        assert_eq!(a.minimizers.len(), 1);
        assert_eq!(
            a.minimizers[0].parts.as_ref().unwrap().as_slice(),
            [2, 2, 1, 1]
        );
        assert!(a.balanced_findings.is_empty());
    }

    #[test]
    fn n5_chi2_minimizer_is_k32() {
        let a = audit_extremal(5, 2, &corpus(5), Tolerances::default())
            .unwrap()
            .unwrap();
        assert_eq!(a.minimizers.len(), 1);
        assert_eq!(a.minimizers[0].parts.as_ref().unwrap().as_slice(), [3, 2]);
    }

    #[test]
    fn incomplete_corpus_is_rejected() {
        let mut c = corpus(5);
        c.pop();
        assert_eq!(
            audit_extremal(5, 2, &c, Tolerances::default()).unwrap_err(),
            Error::CorpusCount {
                n: 5,
                found: 20,
                expected: 21
            }
        );
        let mut c = corpus(5);
        c[0] = CorpusEntry::new(
            &crate::graph::gen_named("path", &[4]).unwrap(),
            Tolerances::default(),
        )
        .unwrap();
        assert_eq!(
            audit_extremal(5, 2, &c, Tolerances::default()).unwrap_err(),
            Error::CorpusMismatch {
                expected: 5,
                found: 4
            }
        );
    }

    #[test]
    fn absent_chromatic_slice() {
        assert!(audit_extremal(4, 5, &corpus(4), Tolerances::default())
            .unwrap()
            .is_none());
    }
}
