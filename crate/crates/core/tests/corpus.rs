use distlap::eigen::{spectrum, Tolerances};
use distlap::graph::{
    canonical_form, enumerate_connected, generate_connected, is_complete_multipartite, Graph,
};
use distlap::verify::{
    audit_extremal, run_all, AnalysisOptions, ColoringMode, CorpusEntry, Verdict,
};

fn entries(n: usize) -> Vec<CorpusEntry> {
    enumerate_connected(n)
        .unwrap()
        .iter()
        .map(|g| CorpusEntry::new(g, Tolerances::default()).unwrap())
        .collect()
}

#[test]
fn fixtures_are_canonical_and_distinct() {
    for (n, count) in [(7, 853), (8, 11117)] {
        let graphs = enumerate_connected(n).unwrap();
        assert_eq!(graphs.len(), count);
        let mut forms: Vec<_> = graphs
            .iter()
            .map(|g| {
                assert!(g.is_connected());
                let f = canonical_form(g).unwrap();
                assert_eq!(
                    f.as_str(),
                    g.to_string(),
                    "fixture entries are stored canonically"
                );
                f
            })
            .collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), count);
    }
}

#[test]
fn fixture_matches_generator_at_seven() {
    assert_eq!(
        enumerate_connected(7).unwrap(),
        generate_connected(7).unwrap()
    );
}

#[test]
fn no_failures_on_eight_vertices() {
    for g in enumerate_connected(8).unwrap() {
        let r = run_all(&g, AnalysisOptions::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn max_ell1_mode_passes_on_seven_vertices() {
    let opts = AnalysisOptions {
        coloring: ColoringMode::MaxEll1,
        ..Default::default()
    };
    for g in enumerate_connected(7).unwrap() {
        let r = run_all(&g, opts).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn loosening_the_interval_tolerance_never_breaks_a_pass() {
    let taus = [1e-6, 1e-5, 1e-4];
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let verdicts: Vec<Vec<Verdict>> = taus
                .iter()
                .map(|&interval| {
                    let tol = Tolerances {
                        interval,
                        ..Default::default()
                    };
                    let r = run_all(
                        &g,
                        AnalysisOptions {
                            tol,
                            ..Default::default()
                        },
                    )
                    .unwrap();
                    r.results.iter().map(|c| c.verdict).collect()
                })
                .collect();
            for pair in verdicts.windows(2) {
                for (a, b) in pair[0].iter().zip(&pair[1]) {
                    assert!(!(*a == Verdict::Pass && *b == Verdict::Fail), "{g}");
                }
            }
        }
    }
}

#[test]
fn extremal_at_eight_vertices() {
    let corpus = entries(8);
    let tol = Tolerances::default();
    for chi in 2..8 {
        let a = audit_extremal(8, chi, &corpus, tol).unwrap().unwrap();
        assert!(a.passed(), "{a:?}");
    }
    let a = audit_extremal(8, 5, &corpus, tol).unwrap().unwrap();
    assert_eq!(a.minimizers.len(), 1);
    assert_eq!(
        a.minimizers[0].parts.as_ref().unwrap().as_slice(),
        [2, 2, 2, 1, 1]
    );
}

#[test]
fn balanced_finding_at_seven_vertices() {
    let a = audit_extremal(7, 3, &entries(7), Tolerances::default())
        .unwrap()
        .unwrap();
    let parts: Vec<Vec<usize>> = a
        .minimizers
        .iter()
        .map(|m| m.parts.clone().unwrap().as_slice().to_vec())
        .collect();
    assert_eq!(parts.len(), 2);
    assert!(parts.contains(&vec![3, 3, 1]) && parts.contains(&vec![3, 2, 2]));
    assert_eq!(a.balanced_findings.len(), 1);
    assert_eq!(
        a.balanced_findings[0].parts.as_ref().unwrap().as_slice(),
        [3, 3, 1]
    );
}

/// Complement of K3 + K3 + P3: chromatic number 4 and spectral radius
/// 9 + ceil(9/4) = 12, yet not complete multipartite.
#[test]
fn nine_vertex_minimizer_outside_the_characterization() {
    let h = Graph::from_edges(
        9,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (6, 7),
            (7, 8),
        ],
    )
    .unwrap();
    let g = h.complement();
    let e = CorpusEntry::new(&g, Tolerances::default()).unwrap();
    assert_eq!(e.chi, 4);
    assert!((e.dl1 - 12.0).abs() < 1e-9);
    assert!(is_complete_multipartite(&g).is_none());
    assert!(run_all(&g, AnalysisOptions::default())
        .unwrap()
        .all_passed());
    let s = spectrum(&g, Tolerances::default()).unwrap();
    assert_eq!(s.count_at(12.0, 1e-6), 5);
}
