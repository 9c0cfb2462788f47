use super::{Assertion, CheckId, CheckResult, GraphAnalysis};
use crate::twins::{TwinClass, TwinKind};

pub type Checker = fn(&GraphAnalysis) -> CheckResult;

/// Every check, in report order.
pub const REGISTRY: [(CheckId, Checker); 10] = [
    (CheckId::AhBound, ah_bound),
    (CheckId::ColorMajorization, color_majorization),
    (CheckId::ManyAbove, many_above),
    (CheckId::KRange, k_range),
    (CheckId::IntervalComplement, interval_complement),
    (CheckId::NMultiplicity, n_multiplicity),
    (CheckId::CliqueRefine, clique_refine),
    (CheckId::IndepRefine, indep_refine),
    (CheckId::DiameterRefine, diameter_refine),
    (CheckId::CountingIdentity, counting_identity),
];

fn f(x: usize) -> f64 {
    x as f64
}

fn is_complete(a: &GraphAnalysis) -> bool {
    a.graph.is_complete()
}

fn ah_bound(a: &GraphAnalysis) -> CheckResult {
    if is_complete(a) {
        return CheckResult::not_applicable(CheckId::AhBound, "G is not complete");
    }
    let t = a.tol.interval;
    CheckResult::evaluated(
        CheckId::AhBound,
        vec![Assertion::ge("dl1 >= b_chi", a.dl1(), f(a.b_chi()), t)],
        vec![],
    )
}

fn color_majorization(a: &GraphAnalysis) -> CheckResult {
    let n = a.n();
    let t = a.tol.interval;
    let mut out = Vec::new();
    let mut start = 1;
    for (j, &l) in a.ell().iter().enumerate().take_while(|(_, &l)| l >= 2) {
        let end = start + l - 2;
        let lo = (start..=end)
            .map(|i| a.spectrum.eigenvalue(i))
            .fold(f64::INFINITY, f64::min);
        out.push(Assertion::ge(
            format!("min dl[{start}..={end}] >= n + l{}", j + 1),
            lo,
            f(n + l),
            t,
        ));
        start = end + 1;
    }
    CheckResult::evaluated(CheckId::ColorMajorization, out, vec![])
}

fn many_above(a: &GraphAnalysis) -> CheckResult {
    let (n, chi) = (a.n(), a.chi());
    if chi == n {
        return CheckResult::not_applicable(CheckId::ManyAbove, "chi <= n - 1");
    }
    let above = f(a.m_above());
    let r = a.ceil_ratio();
    let l1 = a.ell()[0];
    let out = vec![
        Assertion::ge("m[b_chi, dl1] >= l1 - 1", above, f(l1 - 1), 0.0),
        Assertion::ge("m[b_chi, dl1] >= ceil(n/chi) - 1", above, f(r - 1), 0.0),
        Assertion::le(
            "mu[0, b_chi) <= n - ceil(n/chi) + 1",
            f(a.mu_below()),
            f(n - r + 1),
            0.0,
        ),
        Assertion::ge("l1 >= ceil(n/chi)", f(l1), f(r), 0.0),
    ];
    CheckResult::evaluated(CheckId::ManyAbove, out, vec![])
}

fn k_range(a: &GraphAnalysis) -> CheckResult {
    let (n, chi) = (a.n(), a.chi());
    if n < 4 || chi == n {
        return CheckResult::not_applicable(CheckId::KRange, "n >= 4 and chi <= n - 1");
    }
    let t = a.tol.interval;
    let b = f(a.b_chi());
    let mut out: Vec<Assertion> = (2..a.ceil_ratio())
        .map(|k| Assertion::ge(format!("dl{k} >= b_chi"), a.spectrum.eigenvalue(k), b, t))
        .collect();
    let mut skipped = Vec::new();
    if chi + 2 <= n {
        out.push(Assertion::ge(
            "second eigenvalue: dl2 >= b_chi",
            a.spectrum.eigenvalue(2),
            b,
            t,
        ));
    } else {
        skipped.push("second eigenvalue: requires chi <= n - 2".to_string());
    }
    CheckResult::evaluated(CheckId::KRange, out, skipped)
}

fn interval_complement(a: &GraphAnalysis) -> CheckResult {
    let n = a.n();
    let m = f(a.m_above());
    let c = a.complement_components;
    let mut out = vec![Assertion::le("m[b_chi, dl1] <= n - c", m, f(n - c), 0.0)];
    let mut skipped = Vec::new();
    if is_complete(a) {
        skipped.push("lower bounds and universal-vertex bound: G is complete".to_string());
        return CheckResult::evaluated(CheckId::IntervalComplement, out, skipped);
    }
    let l1 = a.ell()[0];
    let p = a.universal_vertices;
    out.push(Assertion::ge("m[b_chi, dl1] >= l1 - 1", m, f(l1 - 1), 0.0));
    out.push(Assertion::ge(
        "m[b_chi, dl1] >= ceil(n/chi) - 1",
        m,
        f(a.ceil_ratio() - 1),
        0.0,
    ));
    if l1 >= 4 {
        out.push(Assertion::ge("l1 >= 4: m[b_chi, dl1] >= 3", m, 3.0, 0.0));
    } else {
        skipped.push("m >= 3: requires l1 >= 4".to_string());
    }
    out.push(Assertion::ge("c >= P + 1", f(c), f(p + 1), 0.0));
    out.push(Assertion::le(
        "m[b_chi, dl1] <= n - P - 1",
        m,
        f(n - p - 1),
        0.0,
    ));
    CheckResult::evaluated(CheckId::IntervalComplement, out, skipped)
}

fn n_multiplicity(a: &GraphAnalysis) -> CheckResult {
    let n = a.n();
    let mult = a.spectrum.count_at(f(n), a.tol.interval);
    let out = vec![Assertion::eq(
        "mult(n) == c - 1",
        f(mult),
        f(a.complement_components - 1),
        0.0,
    )];
    CheckResult::evaluated(CheckId::NMultiplicity, out, vec![])
}

fn twin_refine(a: &GraphAnalysis, id: CheckId, kind: TwinKind) -> CheckResult {
    let classes: Vec<&TwinClass> = a.twins.iter().filter(|c| c.kind == kind).collect();
    if classes.is_empty() {
        let what = match kind {
            TwinKind::Clique => "G has clique twins",
            TwinKind::Independent => "G has independent twins",
        };
        return CheckResult::not_applicable(id, what);
    }
    let n = a.n();
    let t = a.tol.interval;
    let r = a.ceil_ratio();
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for c in classes {
        let (s, nb) = (c.size(), c.external_size());
        let lam = c.forced_value as f64;
        let tag = format!("class {:?}", c.member_list());
        let mult = a.spectrum.count_at(lam, t);
        out.push(Assertion::ge(
            format!("{tag}: mult({lam}) >= s - 1"),
            f(mult),
            f(s - 1),
            0.0,
        ));
        let constant = if c.transmission_constant(&a.distances) {
            1.0
        } else {
            0.0
        };
        out.push(Assertion::eq(
            format!("{tag}: constant transmission"),
            constant,
            1.0,
            0.0,
        ));
        let (lower, lower_label, cond_lhs, label) = match kind {
            TwinKind::Clique => (2 * n - s - nb, "2n - s - |N|", s + nb, "s + |N|"),
            TwinKind::Independent => (2 * n - nb, "2n - |N|", nb, "|N|"),
        };
        out.push(Assertion::ge(
            format!("{tag}: lambda >= {lower_label}"),
            lam,
            f(lower),
            t,
        ));
        if cond_lhs + r <= n {
            out.push(Assertion::ge(
                format!("{tag}: lambda >= b_chi"),
                lam,
                f(a.b_chi()),
                t,
            ));
            out.push(Assertion::ge(
                format!("{tag}: m[b_chi, dl1] >= s - 1"),
                f(a.m_above()),
                f(s - 1),
                0.0,
            ));
        } else {
            skipped.push(format!("{tag}: (c) requires {label} <= n - ceil(n/chi)"));
        }
    }
    CheckResult::evaluated(id, out, skipped)
}

fn clique_refine(a: &GraphAnalysis) -> CheckResult {
    twin_refine(a, CheckId::CliqueRefine, TwinKind::Clique)
}

fn indep_refine(a: &GraphAnalysis) -> CheckResult {
    twin_refine(a, CheckId::IndepRefine, TwinKind::Independent)
}

fn diameter_refine(a: &GraphAnalysis) -> CheckResult {
    let (n, chi) = (a.n(), a.chi());
    if n < 5 || chi == n {
        return CheckResult::not_applicable(CheckId::DiameterRefine, "n >= 5 and chi <= n - 1");
    }
    let r = a.ceil_ratio();
    let below = f(a.mu_below());
    let mut out = vec![Assertion::le(
        "mu[0, b_chi) <= n - ceil(n/chi) + 1",
        below,
        f(n - r + 1),
        0.0,
    )];
    let mut skipped = Vec::new();
    if a.distances.diameter >= 3 {
        let cap = n - 2.max(r - 1);
        out.push(Assertion::le(
            "diam >= 3: mu[0, b_chi) <= n - max(2, ceil(n/chi) - 1)",
            below,
            f(cap),
            0.0,
        ));
    } else {
        skipped.push("(b) requires diam >= 3".to_string());
    }
    out.push(counting_assertion(a));
    CheckResult::evaluated(CheckId::DiameterRefine, out, skipped)
}

fn counting_assertion(a: &GraphAnalysis) -> Assertion {
    Assertion::eq(
        "mu[0, b_chi) + m[b_chi, dl1] == n",
        f(a.mu_below() + a.m_above()),
        f(a.n()),
        0.0,
    )
}

fn counting_identity(a: &GraphAnalysis) -> CheckResult {
    CheckResult::evaluated(
        CheckId::CountingIdentity,
        vec![counting_assertion(a)],
        vec![],
    )
}
