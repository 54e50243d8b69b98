//! Top-level dispatcher and the two direct constructions.

use std::fmt;

use crate::delta3::{hc_delta3, Claim, Delta3Outcome};
use crate::error::{Error, Result};
use crate::graph::{validate_ham_cycle, Graph, HamCycle};
use crate::oracle::{oracle_solve, OracleBudget, OracleVerdict};
use crate::paths::{hc_delta2, Delta2Outcome};
use crate::split::{
    is_two_connected, recognize_split, star_free_level, upgrade_to_maximum_clique, NoCycleCertificate,
    SplitPartition,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Cycle(HamCycle),
    NoCycle(NoCycleCertificate),
    /// Only the oracle could decide and it ran out of budget (or was not allowed to run).
    Undecided,
}

impl Verdict {
    pub fn has_cycle(&self) -> Option<bool> {
        match self {
            Verdict::Cycle(_) => Some(true),
            Verdict::NoCycle(_) => Some(false),
            Verdict::Undecided => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Cycle(_) => "cycle",
            Verdict::NoCycle(_) => "no-cycle",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// A cut vertex or disconnection settles the instance.
    Connectivity,
    Delta1,
    ClawFree,
    Delta2,
    Delta3,
    OracleFallback,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Connectivity => "connectivity",
            Method::Delta1 => "delta1",
            Method::ClawFree => "claw-free",
            Method::Delta2 => "delta2",
            Method::Delta3 => "delta3",
            Method::OracleFallback => "oracle",
        })
    }
}

/// Which premise class an instance falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Premise {
    NotTwoConnected,
    Delta1,
    ClawFree,
    Delta2,
    Delta3,
    /// `Δ^I = 3`, `K_{1,4}`-free, but not `|K| ≥ |I| ≥ 8`.
    Delta3Small,
    /// Contains an induced `K_{1,4}`.
    Unrestricted,
}

impl fmt::Display for Premise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Premise::NotTwoConnected => "not-2-connected",
            Premise::Delta1 => "delta1",
            Premise::ClawFree => "claw-free",
            Premise::Delta2 => "k14-free-delta2",
            Premise::Delta3 => "k14-free-delta3",
            Premise::Delta3Small => "k14-free-delta3-small",
            Premise::Unrestricted => "has-k14",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub method: Method,
    pub premise: Premise,
    /// Configuration used by the `Δ^I = 3` engine.
    pub claim: Option<Claim>,
    /// Why a polynomial branch handed over to the oracle, if it did.
    pub fallback: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: OracleBudget,
    /// Let the oracle decide instances outside the polynomial premises.
    pub oracle_fallback: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: OracleBudget::default(), oracle_fallback: true }
    }
}

pub fn solve(g: &Graph) -> Result<SolveOutcome> {
    solve_with(g, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveOutcome> {
    let p = recognize_split(g)?;
    let p = upgrade_to_maximum_clique(g, p)?;
    solve_partitioned(g, &p, opts)
}

/// Premise class of a split graph with a maximum clique partition.
pub fn classify_premise(g: &Graph, p: &SplitPartition) -> Premise {
    if !is_two_connected(g).is_two_connected() {
        return Premise::NotTwoConnected;
    }
    if p.delta_i() <= 1 {
        return Premise::Delta1;
    }
    let level = star_free_level(g, p);
    if level.is_claw_free() {
        Premise::ClawFree
    } else if !level.is_k14_free() {
        Premise::Unrestricted
    } else if p.delta_i() == 2 {
        Premise::Delta2
    } else if p.i() >= 8 && p.k() >= p.i() {
        Premise::Delta3
    } else {
        Premise::Delta3Small
    }
}

pub fn solve_partitioned(g: &Graph, p: &SplitPartition, opts: &SolveOptions) -> Result<SolveOutcome> {
    let premise = classify_premise(g, p);
    let done = |verdict, method, claim| {
        if let Verdict::Cycle(c) = &verdict {
            debug_assert!(validate_ham_cycle(g, c), "{method} produced an invalid cycle {c:?}");
        }
        Ok(SolveOutcome { verdict, method, premise, claim, fallback: None })
    };
    let oracle = |reason: String| -> Result<SolveOutcome> {
        let verdict = if opts.oracle_fallback {
            match oracle_solve(g, opts.budget) {
                OracleVerdict::Cycle(c) => Verdict::Cycle(c),
                OracleVerdict::NoCycle { nodes } => Verdict::NoCycle(NoCycleCertificate::ExhaustiveSearch { nodes }),
                OracleVerdict::Exhausted { .. } => Verdict::Undecided,
            }
        } else {
            Verdict::Undecided
        };
        Ok(SolveOutcome { verdict, method: Method::OracleFallback, premise, claim: None, fallback: Some(reason) })
    };

    match premise {
        Premise::NotTwoConnected => {
            done(Verdict::NoCycle(NoCycleCertificate::NotTwoConnected(is_two_connected(g))), Method::Connectivity, None)
        }
        Premise::Delta1 => done(Verdict::Cycle(hc_delta1(g, p)?), Method::Delta1, None),
        Premise::ClawFree => match hc_claw_free(g, p) {
            Ok(c) => done(Verdict::Cycle(c), Method::ClawFree, None),
            Err(e) => {
                log::warn!("claw-free construction failed: {e}");
                match hc_delta2(g, p) {
                    Ok(Delta2Outcome::Cycle(c)) => done(Verdict::Cycle(c), Method::Delta2, None),
                    Ok(Delta2Outcome::ShortCycle(w)) => {
                        done(Verdict::NoCycle(NoCycleCertificate::ShortCycle(w)), Method::Delta2, None)
                    }
                    Err(_) => oracle(e.to_string()),
                }
            }
        },
        Premise::Delta2 => match hc_delta2(g, p) {
            Ok(Delta2Outcome::Cycle(c)) => done(Verdict::Cycle(c), Method::Delta2, None),
            Ok(Delta2Outcome::ShortCycle(w)) => {
                done(Verdict::NoCycle(NoCycleCertificate::ShortCycle(w)), Method::Delta2, None)
            }
            Err(e) => {
                log::warn!("path assembly failed: {e}");
                oracle(e.to_string())
            }
        },
        Premise::Delta3 => match hc_delta3(g, p) {
            Ok(Delta3Outcome::Cycle(c, claim)) => done(Verdict::Cycle(c), Method::Delta3, Some(claim)),
            Ok(Delta3Outcome::ShortCycle(w)) => {
                done(Verdict::NoCycle(NoCycleCertificate::ShortCycle(w)), Method::Delta3, None)
            }
            Err(e) => {
                if let Error::CaseFallthrough { claim, .. } | Error::CensusViolation { claim, .. } = &e {
                    log::warn!("{e}; replay: {}", crate::delta3::replay_line(*claim, g));
                }
                let mut out = oracle(e.to_string())?;
                if let Error::CaseFallthrough { claim, .. } | Error::CensusViolation { claim, .. } = e {
                    out.claim = Some(claim);
                }
                Ok(out)
            }
        },
        Premise::Delta3Small => oracle("delta3 outside |K| >= |I| >= 8".into()),
        Premise::Unrestricted => oracle("induced K_1,4".into()),
    }
}

fn premise(g: &Graph, p: &SplitPartition, max_delta: usize) -> Result<()> {
    if p.delta_i() > max_delta {
        return Err(Error::PremiseViolated(format!("Δ^I = {} > {max_delta}", p.delta_i())));
    }
    let tc = is_two_connected(g);
    if !tc.is_two_connected() {
        return Err(Error::PremiseViolated(format!("not 2-connected: {tc:?}")));
    }
    Ok(())
}

/// Each independent vertex between its two smallest clique neighbours;
/// the segments and the unused clique vertices are chained by clique edges.
pub fn hc_delta1(g: &Graph, p: &SplitPartition) -> Result<HamCycle> {
    premise(g, p, 1)?;
    let mut used = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for &u in p.independent() {
        let mut nb = g.neighbors(u);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        used[a] = true;
        used[b] = true;
        order.extend([a, u, b]);
    }
    order.extend(p.clique().iter().copied().filter(|&w| !used[w]));
    Ok(HamCycle(order))
}

/// Hamiltonian cycle of a 2-connected claw-free split graph.
pub fn hc_claw_free(g: &Graph, p: &SplitPartition) -> Result<HamCycle> {
    premise(g, p, 2)?;
    if !star_free_level(g, p).is_claw_free() {
        return Err(Error::PremiseViolated("graph has an induced claw".into()));
    }
    if p.delta_i() <= 1 {
        return hc_delta1(g, p);
    }
    let k_nbrs = |x: usize| -> Vec<usize> { g.neighbors(x).collect() };
    let rest = |skip: &[usize]| -> Vec<usize> { p.clique().iter().copied().filter(|w| !skip.contains(w)).collect() };
    for &v in p.clique().iter().filter(|&&v| p.d_i(v) == 2) {
        let st: Vec<usize> = p.n_i(g, v).collect();
        let (s, t) = (st[0], st[1]);
        let (ns, nt) = (k_nbrs(s), k_nbrs(t));
        match p.i() {
            2 => {
                let w = ns.iter().copied().find(|x| !nt.contains(x));
                let x = nt.iter().copied().find(|y| !ns.contains(y));
                if let (Some(w), Some(x)) = (w, x) {
                    let mut order = vec![w, s, v, t, x];
                    order.extend(rest(&[w, v, x]));
                    return Ok(HamCycle(order));
                }
            }
            3 => {
                let u = *p.independent().iter().find(|&&y| y != s && y != t).unwrap();
                let nu = k_nbrs(u);
                let x = ns.iter().copied().find(|a| !nt.contains(a) && nu.contains(a));
                let y = nt.iter().copied().find(|b| !ns.contains(b) && nu.contains(b));
                let (Some(x), Some(y)) = (x, y) else { continue };
                let others = rest(&[x, v, y]);
                if others.is_empty() {
                    return Ok(HamCycle(vec![x, s, v, t, y, u]));
                }
                // Thread the leftover clique vertices through one that sees s, t or u.
                for &w in &others {
                    let mid: Vec<usize> = others.iter().copied().filter(|&o| o != w).collect();
                    let order: Option<Vec<usize>> = if g.has_edge(w, s) {
                        Some([&[x][..], &mid, &[w, s, v, t, y, u]].concat())
                    } else if g.has_edge(w, t) {
                        Some([&[x, s, v, t, w][..], &mid, &[y, u]].concat())
                    } else if g.has_edge(w, u) {
                        Some([&[x, s, v, t, y][..], &mid, &[w, u]].concat())
                    } else {
                        None
                    };
                    if let Some(order) = order {
                        return Ok(HamCycle(order));
                    }
                }
            }
            _ => {}
        }
    }
    Err(Error::PremiseViolated(format!(
        "claw-free construction needs |I| in {{2, 3}} when Δ^I = 2, got |I| = {}",
        p.i()
    )))
}
