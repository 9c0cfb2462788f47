use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use distlap::graph::{enumerate_connected, parse_edge_list, parse_graph6, Bits, GenSpec, Graph};
use distlap::tables::regenerate;
use distlap::twins::TwinKind;
use distlap::verify::{
    audit_extremal, run_checks, CheckId, CheckReport, CorpusEntry, ExtremalAudit, GraphAnalysis,
    ReportRecord, Verdict,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{self, Sink};
use crate::{CorpusArgs, Format, InputArgs, OutputArgs, SingleArgs, Status};

fn load(input: &InputArgs) -> Result<Graph> {
    let g = if let Some(s) = &input.g6 {
        parse_graph6(s.trim()).with_context(|| format!("parsing graph6 `{s}`"))?
    } else if let Some(path) = &input.edges {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?
    } else if let Some(spec) = &input.gen {
        spec.parse::<GenSpec>()?
            .build()
            .with_context(|| format!("generating `{spec}`"))?
    } else {
        bail!("no input given");
    };
    if !g.is_connected() {
        bail!("input graph is disconnected");
    }
    Ok(g)
}

#[derive(Serialize)]
struct TwinOut {
    kind: TwinKind,
    members: Vec<usize>,
    external: Vec<usize>,
    transmission: u64,
    forced_value: u64,
    forced_mult: usize,
}

#[derive(Serialize)]
struct AnalyzeReport {
    graph6: String,
    n: usize,
    m: usize,
    diameter: u32,
    wiener: u64,
    transmissions: Vec<u64>,
    chi: usize,
    ell: Vec<usize>,
    color_classes: Vec<Vec<usize>>,
    b_chi: usize,
    spectrum: Vec<f64>,
    m_ge_b: usize,
    mu_below_b: usize,
    mult_n: usize,
    complement_components: usize,
    universal_vertices: usize,
    twins: Vec<TwinOut>,
}

impl AnalyzeReport {
    fn new(a: &GraphAnalysis) -> Self {
        let col = a.active_coloring();
        AnalyzeReport {
            graph6: a.graph6(),
            n: a.n(),
            m: a.graph.m(),
            diameter: a.distances.diameter,
            wiener: a.distances.wiener,
            transmissions: a.distances.tr.clone(),
            chi: a.chi(),
            ell: col.sizes.clone(),
            color_classes: col.classes.iter().map(|&c| Bits(c).collect()).collect(),
            b_chi: a.b_chi(),
            spectrum: a.spectrum.values().to_vec(),
            m_ge_b: a.m_above(),
            mu_below_b: a.mu_below(),
            mult_n: a.spectrum.count_at(a.n() as f64, a.tol.interval),
            complement_components: a.complement_components,
            universal_vertices: a.universal_vertices,
            twins: a
                .twins
                .iter()
                .map(|t| TwinOut {
                    kind: t.kind,
                    members: t.member_list(),
                    external: Bits(t.external).collect(),
                    transmission: t.transmission,
                    forced_value: t.forced_value,
                    forced_mult: t.forced_mult,
                })
                .collect(),
        }
    }
}

pub fn analyze(args: &SingleArgs) -> Result<Status> {
    let g = load(&args.input)?;
    let a = GraphAnalysis::new(&g, args.analysis.options())?;
    let report = AnalyzeReport::new(&a);
    let mut out = Sink::open(&args.output)?;
    match args.output.format {
        Format::Pretty => output::pretty_analysis(&mut out, &report.graph6, &a)?,
        Format::Json => out.json_line(&report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "graph6",
                "n",
                "m",
                "diameter",
                "chi",
                "ell",
                "b_chi",
                "m_ge_b",
                "mu_below_b",
                "mult_n",
                "complement_components",
                "spectrum",
            ])?;
            let join = |v: Vec<String>| v.join(";");
            w.write_record([
                report.graph6.clone(),
                report.n.to_string(),
                report.m.to_string(),
                report.diameter.to_string(),
                report.chi.to_string(),
                join(report.ell.iter().map(|x| x.to_string()).collect()),
                report.b_chi.to_string(),
                report.m_ge_b.to_string(),
                report.mu_below_b.to_string(),
                report.mult_n.to_string(),
                report.complement_components.to_string(),
                join(report.spectrum.iter().map(|x| x.to_string()).collect()),
            ])?;
            w.flush()?;
        }
    }
    out.finish()?;
    Ok(Status::Clean)
}

fn write_records(out: &mut Sink, format: Format, reports: &[CheckReport]) -> Result<()> {
    let records: Vec<ReportRecord> = reports.iter().flat_map(|r| r.records()).collect();
    match format {
        Format::Json => {
            for r in &records {
                out.json_line(r)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Pretty => unreachable!("pretty output is rendered separately"),
    }
    Ok(())
}

pub fn verify(args: &SingleArgs) -> Result<Status> {
    let g = load(&args.input)?;
    let report = run_checks(&GraphAnalysis::new(&g, args.analysis.options())?);
    let mut out = Sink::open(&args.output)?;
    match args.output.format {
        Format::Pretty => output::pretty_report(&mut out, &report)?,
        f => write_records(&mut out, f, std::slice::from_ref(&report))?,
    }
    out.finish()?;
    Ok(if report.all_passed() {
        Status::Clean
    } else {
        Status::Failures
    })
}

#[derive(Serialize)]
struct AuditLine<'a> {
    extremal_audit: &'a ExtremalAudit,
}

pub fn corpus(args: &CorpusArgs) -> Result<Status> {
    let opts = args.analysis.options();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build()?;
    let graphs = enumerate_connected(args.n)?;
    let reports: Vec<CheckReport> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| GraphAnalysis::new(g, opts).map(|a| run_checks(&a)))
            .collect::<Result<_, _>>()
    })?;
    let audits: Vec<ExtremalAudit> = if args.audit_extremal {
        let entries: Vec<CorpusEntry> = pool.install(|| {
            graphs
                .par_iter()
                .map(|g| CorpusEntry::new(g, opts.tol))
                .collect::<Result<_, _>>()
        })?;
        let mut audits = Vec::new();
        for chi in 2..args.n {
            if let Some(a) = audit_extremal(args.n, chi, &entries, opts.tol)? {
                audits.push(a);
            }
        }
        audits
    } else {
        Vec::new()
    };

    let mut tally: BTreeMap<CheckId, [usize; 3]> = BTreeMap::new();
    for r in reports.iter().flat_map(|r| &r.results) {
        let slot = match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::NotApplicable => 2,
        };
        tally.entry(r.id).or_default()[slot] += 1;
    }
    let failures: Vec<&CheckReport> = reports.iter().filter(|r| !r.all_passed()).collect();
    let audit_failed = audits.iter().any(|a| !a.passed());

    let mut out = Sink::open(&args.output)?;
    match args.output.format {
        Format::Pretty => {
            output::pretty_corpus(&mut out, args.n, reports.len(), &tally, &failures, &audits)?
        }
        Format::Json => {
            write_records(&mut out, Format::Json, &reports)?;
            for a in &audits {
                out.json_line(&AuditLine { extremal_audit: a })?;
            }
        }
        Format::Csv => {
            write_records(&mut out, Format::Csv, &reports)?;
            if !audits.is_empty() {
                let mut err = Sink::stderr();
                output::pretty_audits(&mut err, &audits)?;
            }
        }
    }
    out.finish()?;
    Ok(if failures.is_empty() && !audit_failed {
        Status::Clean
    } else {
        Status::Failures
    })
}

pub fn tables(args: &OutputArgs) -> Result<Status> {
    let rows = regenerate(Default::default())?;
    let mut out = Sink::open(args)?;
    match args.format {
        Format::Pretty => out.write_str(&distlap::tables::render(&rows))?,
        Format::Json => {
            for r in &rows {
                out.json_line(r)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "table", "graph", "n", "chi", "diam", "b_chi", "m_ge_b", "e1", "e2", "e3", "e4",
                "e5", "e6", "matches",
            ])?;
            for r in &rows {
                let mut rec = vec![
                    r.table.to_string(),
                    r.graph.clone(),
                    r.n.to_string(),
                    r.chi.to_string(),
                    r.diam.to_string(),
                    r.b_chi.to_string(),
                    r.m_ge_b.to_string(),
                ];
                rec.extend(r.first_six.iter().map(|&x| distlap::tables::round3(x)));
                rec.push(r.matches().to_string());
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    out.finish()?;
    Ok(if rows.iter().all(|r| r.matches()) {
        Status::Clean
    } else {
        Status::Failures
    })
}
