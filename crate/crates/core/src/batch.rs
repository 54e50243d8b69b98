//! Manifest-driven batches: solve every instance, cross-check against the
//! oracle, and report one tab-separated record per instance.
//!
//! Manifest lines:
//!
//! ```text
//! file <path>                                   # relative to the manifest
//! gen <family> k=<..> i=<..> p=<..> seed=<s> count=<c>
//! ```
//!
//! `count` expands to seeds `s, s+1, …, s+c-1`. Report lines are
//! `id<TAB>premise<TAB>verdict<TAB>method<TAB>micros<TAB>certificate`,
//! ordered by id.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::engine::{solve_with, Method, SolveOptions, Verdict};
use crate::error::{Error, Result};
use crate::generators::{generate, Family, GenSpec};
use crate::graph::{first_cycle_violation, validate_ham_cycle, Graph, HamCycle};
use crate::io::parse_graph;
use crate::oracle::{oracle_solve, OracleBudget};
use crate::reduction::{map_solution_back, reduce, BipartiteInstance};

#[derive(Clone, Debug, PartialEq)]
pub enum ManifestEntry {
    File(PathBuf),
    Gen { spec: GenSpec, count: u64 },
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        match words[0] {
            "file" if words.len() == 2 => out.push(ManifestEntry::File(PathBuf::from(words[1]))),
            "gen" => {
                let (spec, extra) = GenSpec::parse_words(&words[1..]).map_err(|e| err(e.to_string()))?;
                let mut count = 1;
                for (key, val) in extra {
                    match key.as_str() {
                        "count" => count = val.parse().map_err(|_| err(format!("bad count {val:?}")))?,
                        _ => return Err(err(format!("unknown key {key:?}"))),
                    }
                }
                out.push(ManifestEntry::Gen { spec, count });
            }
            _ => return Err(err(format!("expected `file <path>` or `gen <family> ...`, got {line:?}"))),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Split,
    /// Source of the reduction, with part `A`.
    Bipartite(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
    pub kind: InstanceKind,
}

/// Materializes every instance; file paths are resolved against `base`.
pub fn expand(entries: &[ManifestEntry], base: &Path) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for e in entries {
        match e {
            ManifestEntry::File(p) => {
                let path = base.join(p);
                let text = std::fs::read_to_string(&path)
                    .map_err(|err| Error::Parse { line: 0, msg: format!("{}: {err}", path.display()) })?;
                let f = parse_graph(&text)?;
                let id = format!("{:05}:{}", out.len(), p.display());
                out.push(Instance { id, graph: f.graph, kind: InstanceKind::Split });
            }
            ManifestEntry::Gen { spec, count } => {
                for s in 0..*count {
                    let spec = GenSpec { seed: spec.seed + s, ..*spec };
                    let g = generate(&spec)?;
                    let id = format!(
                        "{:05}:{}/k{}/i{}/p{}/s{}",
                        out.len(),
                        spec.family,
                        spec.k,
                        spec.i,
                        spec.density,
                        spec.seed
                    );
                    let kind = match (spec.family, g.part_a) {
                        (Family::BipartiteDeg3, Some(a)) => InstanceKind::Bipartite(a),
                        _ => InstanceKind::Split,
                    };
                    out.push(Instance { id, graph: g.graph, kind });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatchOptions {
    pub budget: OracleBudget,
    /// Largest instance cross-checked against the oracle.
    pub oracle_max_n: usize,
    /// Record wall time; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions { budget: OracleBudget::nodes(20_000_000), oracle_max_n: 20, timing: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub id: String,
    pub premise: String,
    pub verdict: String,
    pub method: String,
    pub micros: u128,
    pub certificate: String,
}

impl Record {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.id, self.premise, self.verdict, self.method, self.micros, self.certificate
        )
    }

    pub fn parse(line: &str) -> Result<Record> {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 6 {
            return Err(Error::Parse { line: 0, msg: format!("expected 6 fields, got {}", f.len()) });
        }
        let micros = f[4].parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad micros {:?}", f[4]) })?;
        Ok(Record {
            id: f[0].into(),
            premise: f[1].into(),
            verdict: f[2].into(),
            method: f[3].into(),
            micros,
            certificate: f[5].into(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub id: String,
    pub graph: Graph,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchReport {
    pub records: Vec<Record>,
    pub discrepancies: Vec<Discrepancy>,
    /// Instances a polynomial branch handed to the oracle.
    pub fallbacks: Vec<String>,
}

impl BatchReport {
    pub fn render(&self) -> String {
        self.records.iter().map(|r| r.line() + "\n").collect()
    }

    /// Human-readable counts per premise, verdict and method.
    pub fn summary(&self) -> String {
        let mut rows: std::collections::BTreeMap<(String, String, String), usize> = Default::default();
        for r in &self.records {
            *rows.entry((r.premise.clone(), r.verdict.clone(), r.method.clone())).or_default() += 1;
        }
        let mut out = format!("{:<24} {:<10} {:<24} {:>7}\n", "premise", "verdict", "method", "count");
        for ((p, v, m), c) in rows {
            out.push_str(&format!("{p:<24} {v:<10} {m:<24} {c:>7}\n"));
        }
        out.push_str(&format!(
            "instances {}  discrepancies {}  fallbacks {}\n",
            self.records.len(),
            self.discrepancies.len(),
            self.fallbacks.len()
        ));
        out
    }
}

fn cycle_cert(c: &HamCycle) -> String {
    c.order().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

struct Outcome {
    record: Record,
    discrepancy: Option<String>,
    fallback: bool,
}

fn run_split(inst: &Instance, opts: &BatchOptions) -> Outcome {
    let g = &inst.graph;
    let started = Instant::now();
    let solved = solve_with(g, &SolveOptions { budget: opts.budget, oracle_fallback: true });
    let micros = if opts.timing { started.elapsed().as_micros() } else { 0 };
    let out = match solved {
        Ok(o) => o,
        Err(e) => {
            let record = Record {
                id: inst.id.clone(),
                premise: "not-split".into(),
                verdict: "error".into(),
                method: "-".into(),
                micros,
                certificate: e.to_string(),
            };
            return Outcome { record, discrepancy: None, fallback: false };
        }
    };
    let mut problem = None;
    let certificate = match &out.verdict {
        Verdict::Cycle(c) => {
            if let Some(v) = first_cycle_violation(g, c) {
                problem = Some(format!("invalid cycle: {v}"));
            }
            cycle_cert(c)
        }
        Verdict::NoCycle(cert) => {
            if !cert.verify(g) {
                problem = Some(format!("certificate does not verify: {cert}"));
            }
            cert.to_string()
        }
        Verdict::Undecided => "-".into(),
    };
    if problem.is_none() && out.method != Method::OracleFallback && g.n() <= opts.oracle_max_n {
        if let (Some(ours), Some(truth)) = (out.verdict.has_cycle(), oracle_solve(g, opts.budget).has_cycle()) {
            if ours != truth {
                problem = Some(format!("solver says {ours}, oracle says {truth}"));
            }
        }
    }
    let method = match out.claim {
        Some(c) => format!("{}:{c}", out.method),
        None => out.method.to_string(),
    };
    let record = Record {
        id: inst.id.clone(),
        premise: out.premise.to_string(),
        verdict: out.verdict.tag().into(),
        method,
        micros,
        certificate,
    };
    let fallback = out.fallback.is_some() && matches!(out.premise, crate::engine::Premise::Delta2 | crate::engine::Premise::Delta3 | crate::engine::Premise::ClawFree);
    Outcome { record, discrepancy: problem, fallback }
}

/// Decides the source through the reduction and compares with the oracle
/// on the source itself.
fn run_bipartite(inst: &Instance, part_a: &[usize], opts: &BatchOptions) -> Outcome {
    let g = &inst.graph;
    let started = Instant::now();
    let result = (|| -> Result<(Verdict, Verdict, BipartiteInstance)> {
        let b = BipartiteInstance::new(g.clone(), part_a)?;
        let r = reduce(&b)?;
        let so = SolveOptions { budget: opts.budget, oracle_fallback: true };
        Ok((solve_with(&r.h1, &so)?.verdict, solve_with(&r.h2, &so)?.verdict, b))
    })();
    let micros = if opts.timing { started.elapsed().as_micros() } else { 0 };
    let mut rec = Record {
        id: inst.id.clone(),
        premise: "bipartite-deg3".into(),
        verdict: "undecided".into(),
        method: "reduction".into(),
        micros,
        certificate: "-".into(),
    };
    let (v1, v2, b) = match result {
        Ok(x) => x,
        Err(e) => {
            rec.verdict = "error".into();
            rec.certificate = e.to_string();
            return Outcome { record: rec, discrepancy: Some(e.to_string()), fallback: false };
        }
    };
    let mut problem = None;
    match (&v1, &v2) {
        (Verdict::Cycle(c1), Verdict::Cycle(c2)) => match map_solution_back(&b, c1, c2) {
            Ok(c) => {
                rec.verdict = "cycle".into();
                rec.certificate = cycle_cert(&c);
                if !validate_ham_cycle(g, &c) {
                    problem = Some("mapped cycle invalid on source".into());
                }
            }
            Err(e) => problem = Some(e.to_string()),
        },
        (Verdict::NoCycle(_), _) | (_, Verdict::NoCycle(_)) => {
            rec.verdict = "no-cycle".into();
            let side = if matches!(v1, Verdict::NoCycle(_)) { "h1" } else { "h2" };
            rec.certificate = format!("{side} has no cycle");
        }
        _ => {}
    }
    if problem.is_none() && g.n() <= opts.oracle_max_n {
        let ours = match rec.verdict.as_str() {
            "cycle" => Some(true),
            "no-cycle" => Some(false),
            _ => None,
        };
        if let (Some(ours), Some(truth)) = (ours, oracle_solve(g, opts.budget).has_cycle()) {
            if ours != truth {
                problem = Some(format!("reduction says {ours}, oracle on source says {truth}"));
            }
        }
    }
    Outcome { record: rec, discrepancy: problem, fallback: false }
}

pub fn run_batch(instances: &[Instance], opts: &BatchOptions) -> BatchReport {
    let outcomes: Vec<Outcome> = instances
        .par_iter()
        .map(|inst| match &inst.kind {
            InstanceKind::Split => run_split(inst, opts),
            InstanceKind::Bipartite(a) => run_bipartite(inst, a, opts),
        })
        .collect();
    let mut report = BatchReport::default();
    for (inst, o) in instances.iter().zip(outcomes) {
        if let Some(reason) = o.discrepancy {
            report.discrepancies.push(Discrepancy { id: inst.id.clone(), graph: inst.graph.clone(), reason });
        }
        if o.fallback {
            report.fallbacks.push(inst.id.clone());
        }
        report.records.push(o.record);
    }
    report
}

/// Re-validates every cycle certificate of a rendered report.
pub fn verify_report(text: &str, instances: &[Instance]) -> Result<usize> {
    let mut checked = 0;
    for (ln, line) in text.lines().enumerate() {
        let r = Record::parse(line).map_err(|e| Error::Parse { line: ln + 1, msg: e.to_string() })?;
        if r.verdict != "cycle" {
            continue;
        }
        let inst = instances
            .iter()
            .find(|i| i.id == r.id)
            .ok_or_else(|| Error::Parse { line: ln + 1, msg: format!("unknown id {}", r.id) })?;
        let c = crate::io::parse_cycle(&r.certificate)?;
        if let Some(v) = first_cycle_violation(&inst.graph, &c) {
            return Err(Error::Parse { line: ln + 1, msg: format!("{}: {v}", r.id) });
        }
        checked += 1;
    }
    Ok(checked)
}
