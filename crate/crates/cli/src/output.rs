use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{Context, Result};
use distlap::graph::Bits;
use distlap::tables::round3;
use distlap::verify::{CheckId, CheckReport, ExtremalAudit, GraphAnalysis, Verdict};
use serde::Serialize;

use crate::OutputArgs;

/// Standard output, standard error or a file.
pub struct Sink(Box<dyn Write>);

impl Sink {
    pub fn open(args: &OutputArgs) -> Result<Self> {
        Ok(match &args.out {
            Some(path) => {
                let f =
                    File::create(path).with_context(|| format!("creating {}", path.display()))?;
                Sink(Box::new(BufWriter::new(f)))
            }
            None => Sink(Box::new(io::stdout().lock())),
        })
    }

    pub fn stderr() -> Self {
        Sink(Box::new(io::stderr()))
    }

    pub fn json_line<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer(&mut self.0, value)?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    pub fn write_str(&mut self, s: &str) -> Result<()> {
        self.0.write_all(s.as_bytes())?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.0.flush()?;
        Ok(())
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.0.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.0.flush()
    }
}

fn num(x: f64) -> String {
    let s = round3(x);
    s.strip_suffix(".000").map_or(s.clone(), str::to_string)
}

fn set(bits: u64) -> String {
    let v: Vec<String> = Bits(bits).map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn pretty_analysis(out: &mut Sink, graph6: &str, a: &GraphAnalysis) -> Result<()> {
    let col = a.active_coloring();
    writeln!(out, "graph6        {graph6}")?;
    writeln!(out, "n, m          {}, {}", a.n(), a.graph.m())?;
    writeln!(out, "diameter      {}", a.distances.diameter)?;
    writeln!(out, "wiener        {}", a.distances.wiener)?;
    let tr: Vec<String> = a.distances.tr.iter().map(|t| t.to_string()).collect();
    writeln!(out, "transmissions {}", tr.join(" "))?;
    writeln!(out, "chi           {}", a.chi())?;
    let ell: Vec<String> = col.sizes.iter().map(|l| l.to_string()).collect();
    writeln!(out, "class sizes   ({})", ell.join(","))?;
    let classes: Vec<String> = col.classes.iter().map(|&c| set(c)).collect();
    writeln!(out, "classes       {}", classes.join(" "))?;
    writeln!(out, "b_chi         {}", a.b_chi())?;
    let clusters: Vec<String> = a
        .spectrum
        .clusters()
        .iter()
        .map(|c| {
            if c.multiplicity > 1 {
                format!("{} x{}", num(c.value), c.multiplicity)
            } else {
                num(c.value)
            }
        })
        .collect();
    writeln!(out, "spectrum      {}", clusters.join(", "))?;
    writeln!(out, "m[b_chi, dl1] {}", a.m_above())?;
    writeln!(out, "mu[0, b_chi)  {}", a.mu_below())?;
    writeln!(
        out,
        "mult(n)       {}",
        a.spectrum.count_at(a.n() as f64, a.tol.interval)
    )?;
    writeln!(
        out,
        "complement    {} component(s), {} universal vertex(es)",
        a.complement_components, a.universal_vertices
    )?;
    if a.twins.is_empty() {
        writeln!(out, "twins         none")?;
    }
    for t in &a.twins {
        let kind = match t.kind {
            distlap::twins::TwinKind::Clique => "clique",
            distlap::twins::TwinKind::Independent => "independent",
        };
        writeln!(
            out,
            "twins         {kind} {} N={} Tr={} forces {} x{}",
            set(t.members),
            set(t.external),
            t.transmission,
            t.forced_value,
            t.forced_mult
        )?;
    }
    Ok(())
}

pub fn pretty_report(out: &mut Sink, r: &CheckReport) -> Result<()> {
    writeln!(
        out,
        "{}  n={} m={} chi={} b_chi={}",
        r.graph6, r.n, r.m, r.chi, r.b_chi
    )?;
    for c in &r.results {
        let slack = c
            .min_slack()
            .map_or(String::new(), |s| format!("  min slack {}", num(s)));
        writeln!(out, "  {:<20} {}{}", c.id.as_str(), c.verdict, slack)?;
        if let Some(h) = &c.hypothesis {
            writeln!(out, "      hypothesis not met: {h}")?;
        }
        for a in &c.assertions {
            let mark = if a.holds { "ok " } else { "BAD" };
            writeln!(out, "      {mark} {a}")?;
        }
        for s in &c.skipped {
            writeln!(out, "      skipped {s}")?;
        }
    }
    let fails = r.failures().count();
    writeln!(
        out,
        "{}",
        if fails == 0 {
            "all checks pass".to_string()
        } else {
            format!("{fails} check(s) FAILED")
        }
    )?;
    Ok(())
}

pub fn pretty_audits(out: &mut Sink, audits: &[ExtremalAudit]) -> Result<()> {
    writeln!(out, "extremal audit")?;
    writeln!(
        out,
        "  {:>3} {:>6} {:>9} {:>8}  {:<6} minimizers",
        "chi", "graphs", "min dl1", "n+ceil", "status"
    )?;
    for a in audits {
        let mins: Vec<String> = a
            .minimizers
            .iter()
            .map(|m| {
                m.parts
                    .as_ref()
                    .map_or(m.graph6.clone(), |p| format!("K{p}"))
            })
            .collect();
        let status = if a.passed() { "ok" } else { "FAIL" };
        writeln!(
            out,
            "  {:>3} {:>6} {:>9} {:>8}  {:<6} {}",
            a.chi,
            a.candidates,
            num(a.min_dl1),
            a.expected_min,
            status,
            mins.join(" ")
        )?;
    }
    let findings: Vec<String> = audits
        .iter()
        .flat_map(|a| {
            a.balanced_findings.iter().map(move |m| {
                format!(
                    "chi={} K{} has a part below floor(n/chi)",
                    a.chi,
                    m.parts.as_ref().unwrap()
                )
            })
        })
        .collect();
    writeln!(out, "balanced-parts findings: {}", findings.len())?;
    for f in findings {
        writeln!(out, "  {f}")?;
    }
    Ok(())
}

pub fn pretty_corpus(
    out: &mut Sink,
    n: usize,
    graphs: usize,
    tally: &BTreeMap<CheckId, [usize; 3]>,
    failures: &[&CheckReport],
    audits: &[ExtremalAudit],
) -> Result<()> {
    writeln!(out, "connected graphs on {n} vertices: {graphs}")?;
    writeln!(
        out,
        "  {:<20} {:>6} {:>6} {:>6}",
        "check", "pass", "fail", "n/a"
    )?;
    for (id, [p, f, na]) in tally {
        writeln!(out, "  {:<20} {p:>6} {f:>6} {na:>6}", id.as_str())?;
    }
    for r in failures {
        for c in r.results.iter().filter(|c| c.verdict == Verdict::Fail) {
            writeln!(
                out,
                "FAIL {} {}: {}",
                r.graph6,
                c.id,
                c.witness.as_deref().unwrap_or("")
            )?;
        }
    }
    if !audits.is_empty() {
        pretty_audits(out, audits)?;
    }
    writeln!(out, "{} failure(s)", failures.len())?;
    Ok(())
}
