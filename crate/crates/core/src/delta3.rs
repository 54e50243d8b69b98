//! The `K_{1,4}`-free, `Δ^I = 3` engine.
//!
//! A clique vertex `v` with three independent neighbours is fixed, the
//! graph `G − N^I(v)` is covered by alternating paths, and the path census
//! selects a configuration. Each configuration names the paths that must be
//! threaded together with `v` and `N^I(v)` into a *desired path*: a path with
//! both ends in `K`. The remaining paths then close the cycle along clique
//! edges.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{validate_ham_cycle, Graph, HamCycle, OrientedPath};
use crate::paths::{assemble_paths, find_short_cycle, PathSystem, ShortCycleWitness};
use crate::split::SplitPartition;

/// Structural facts and configurations of the `Δ^I = 3` case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Every clique vertex has a neighbour in `N^I(v)`.
    NeighborCover,
    /// `G − N^I(v)` has `Δ^I ≤ 2`.
    ReducedDegree,
    /// No path with 13 or more vertices.
    LongPaths,
    /// An 11-vertex path excludes paths on 5, 7 and 9 vertices.
    ElevenExclusive,
    /// A 9-vertex path excludes paths on 5, 7 and 11 vertices.
    NineExclusive,
    /// At most two 7-vertex paths, and two exclude 5-vertex paths.
    SevenPair,
    /// One 7-vertex path allows at most one 5-vertex path.
    SevenWithFives,
    /// Without paths of 7 or more vertices, at most two 5-vertex paths.
    FiveTriple,
    /// Some independent vertex is adjacent to all clique vertices of the paths.
    Universal,
    Eleven,
    Nine,
    TwoSevens,
    SevenFive,
    SevenOnly,
    TwoFives,
    FiveThrees,
    SharedEnd,
    ThreesOnly,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::NeighborCover => "neighbor-cover",
            Claim::ReducedDegree => "reduced-degree",
            Claim::LongPaths => "long-paths",
            Claim::ElevenExclusive => "eleven-exclusive",
            Claim::NineExclusive => "nine-exclusive",
            Claim::SevenPair => "seven-pair",
            Claim::SevenWithFives => "seven-with-fives",
            Claim::FiveTriple => "five-triple",
            Claim::Universal => "universal",
            Claim::Eleven => "eleven",
            Claim::Nine => "nine",
            Claim::TwoSevens => "two-sevens",
            Claim::SevenFive => "seven-five",
            Claim::SevenOnly => "seven-only",
            Claim::TwoFives => "two-fives",
            Claim::FiveThrees => "five-threes",
            Claim::SharedEnd => "shared-end",
            Claim::ThreesOnly => "threes-only",
        }
    }

    pub fn from_id(s: &str) -> Option<Claim> {
        ALL_CLAIMS.iter().copied().find(|c| c.id() == s)
    }
}

const ALL_CLAIMS: [Claim; 18] = [
    Claim::NeighborCover,
    Claim::ReducedDegree,
    Claim::LongPaths,
    Claim::ElevenExclusive,
    Claim::NineExclusive,
    Claim::SevenPair,
    Claim::SevenWithFives,
    Claim::FiveTriple,
    Claim::Universal,
    Claim::Eleven,
    Claim::Nine,
    Claim::TwoSevens,
    Claim::SevenFive,
    Claim::SevenOnly,
    Claim::TwoFives,
    Claim::FiveThrees,
    Claim::SharedEnd,
    Claim::ThreesOnly,
];

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta3Context {
    pub v: usize,
    pub niv: [usize; 3],
    /// `G − N^I(v)` and the map from its vertices back to `G`.
    pub reduced: Graph,
    pub reduced_map: Vec<usize>,
    /// Paths of the reduced graph in `G`'s labels, without `v`'s singleton.
    pub system: PathSystem,
    pub census: BTreeMap<usize, usize>,
}

impl Delta3Context {
    pub fn count(&self, j: usize) -> usize {
        self.census.get(&j).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prepared {
    Context(Delta3Context),
    ShortCycle(ShortCycleWitness),
}

/// Builds the context for `v` = smallest clique vertex with `d^I(v) = 3`.
///
/// Short cycles are checked on `g` before anything else. The size premise
/// `|K| ≥ |I| ≥ 8` is left to the caller.
pub fn prepare_context(g: &Graph, p: &SplitPartition) -> Result<Prepared> {
    if p.delta_i() != 3 {
        return Err(Error::PremiseViolated(format!("Δ^I = {} ≠ 3", p.delta_i())));
    }
    let v = *p.clique().iter().find(|&&w| p.d_i(w) == 3).unwrap();
    let ni: Vec<usize> = p.n_i(g, v).collect();
    let niv = [ni[0], ni[1], ni[2]];

    if let Some(&w) = p.clique().iter().find(|&&w| niv.iter().all(|&x| !g.has_edge(w, x))) {
        return Err(Error::PremiseViolated(format!(
            "{}: clique vertex {w} misses N^I({v}) = {niv:?}; K_1,4 at {v} with arms {:?}",
            Claim::NeighborCover,
            [niv[0], niv[1], niv[2], w]
        )));
    }

    if let Some(w) = find_short_cycle(g, p) {
        return Ok(Prepared::ShortCycle(w));
    }

    let keep: Vec<usize> = (0..g.n()).filter(|x| !niv.contains(x)).collect();
    let (reduced, reduced_map) = g.induced_subgraph(&keep)?;
    let mut local = vec![usize::MAX; g.n()];
    for (new, &old) in reduced_map.iter().enumerate() {
        local[old] = new;
    }
    let k_local: Vec<usize> = p.clique().iter().map(|&w| local[w]).collect();
    let rp = SplitPartition::from_clique(&reduced, &k_local)?;
    if rp.delta_i() > 2 {
        return Err(Error::CensusViolation {
            claim: Claim::ReducedDegree,
            detail: format!("reduced Δ^I = {}", rp.delta_i()),
        });
    }
    let local_system = assemble_paths(&reduced, &rp)?;
    let paths: Vec<OrientedPath> = local_system
        .paths
        .iter()
        .map(|path| OrientedPath(path.vertices().iter().map(|&x| reduced_map[x]).collect()))
        .filter(|path| path.vertices() != [v])
        .collect();
    let system = PathSystem { paths };
    let census = system.census();
    let ctx = Delta3Context { v, niv, reduced, reduced_map, system, census };
    check_census(&ctx)?;
    Ok(Prepared::Context(ctx))
}

/// The six census constraints.
pub fn check_census(ctx: &Delta3Context) -> Result<()> {
    let c = |j| ctx.count(j);
    let fail = |claim, detail: String| Err(Error::CensusViolation { claim, detail });
    if let Some((&j, _)) = ctx.census.range(13..).next() {
        return fail(Claim::LongPaths, format!("path on {j} vertices"));
    }
    if c(11) > 0 && c(5) + c(7) + c(9) > 0 {
        return fail(Claim::ElevenExclusive, census_string(ctx));
    }
    if c(9) > 0 && c(5) + c(7) + c(11) > 0 {
        return fail(Claim::NineExclusive, census_string(ctx));
    }
    if c(7) > 2 || (c(7) == 2 && c(5) > 0) {
        return fail(Claim::SevenPair, census_string(ctx));
    }
    if c(7) == 1 && c(5) > 1 {
        return fail(Claim::SevenWithFives, census_string(ctx));
    }
    if c(7) + c(9) + c(11) == 0 && c(5) > 2 {
        return fail(Claim::FiveTriple, census_string(ctx));
    }
    Ok(())
}

fn census_string(ctx: &Delta3Context) -> String {
    ctx.census.iter().map(|(j, n)| format!("P{j}x{n}")).collect::<Vec<_>>().join(" ")
}

/// A vertex of `N^I(v)` adjacent to every internal clique vertex of each
/// listed path, tried in index order.
pub fn find_universal_v1(g: &Graph, ctx: &Delta3Context, paths: &[&OrientedPath]) -> Result<usize> {
    ctx.niv
        .iter()
        .copied()
        .find(|&x| {
            paths.iter().all(|path| {
                let vs = path.vertices();
                vs.iter().enumerate().skip(2).step_by(2).take_while(|(i, _)| *i + 1 < vs.len()).all(|(_, &w)| g.has_edge(x, w))
            })
        })
        .ok_or_else(|| {
            Error::ClaimViolated(format!("{}: none of {:?} covers {paths:?}", Claim::Universal, ctx.niv))
        })
}

/// Configuration selected by the census, and its featured paths.
pub fn classify(g: &Graph, ctx: &Delta3Context) -> (Claim, Vec<usize>) {
    let ids = |j: usize| -> Vec<usize> {
        ctx.system.paths.iter().enumerate().filter(|(_, p)| p.len() == j).map(|(i, _)| i).collect()
    };
    let long: Vec<usize> = ctx.system.paths.iter().enumerate().filter(|(_, p)| p.len() >= 5).map(|(i, _)| i).collect();
    let claim = if ctx.count(11) > 0 {
        Claim::Eleven
    } else if ctx.count(9) > 0 {
        Claim::Nine
    } else if ctx.count(7) >= 2 {
        Claim::TwoSevens
    } else if ctx.count(7) == 1 && ctx.count(5) > 0 {
        Claim::SevenFive
    } else if ctx.count(7) == 1 {
        Claim::SevenOnly
    } else if ctx.count(5) >= 2 {
        Claim::TwoFives
    } else if shared_end(g, ctx, &ids(3)) {
        Claim::SharedEnd
    } else if ctx.count(5) == 1 {
        Claim::FiveThrees
    } else {
        Claim::ThreesOnly
    };
    (claim, long)
}

/// Some vertex of `N^I(v)` is adjacent to ends of two distinct listed paths.
fn shared_end(g: &Graph, ctx: &Delta3Context, ids: &[usize]) -> bool {
    ctx.niv.iter().any(|&x| {
        ids.iter()
            .filter(|&&i| {
                let p = &ctx.system.paths[i];
                g.has_edge(x, p.first()) || g.has_edge(x, p.last())
            })
            .count()
            >= 2
    })
}

/// Node budget of a single desired-path search.
const REGION_BUDGET: u64 = 200_000;
/// Free paths considered for the region.
const MAX_CANDIDATES: usize = 10;
const MAX_FREE: usize = 3;

/// Hamiltonian cycle for a prepared context, tagged with the configuration
/// that produced it.
pub fn construct_cycle(g: &Graph, p: &SplitPartition, ctx: &Delta3Context) -> Result<(HamCycle, Claim)> {
    let (claim, featured) = classify(g, ctx);
    let mut core: Vec<usize> = vec![ctx.v];
    core.extend(ctx.niv);
    for &i in &featured {
        core.extend(ctx.system.paths[i].vertices());
    }
    let candidates = free_candidates(g, ctx, &featured);

    for size in 0..=MAX_FREE.min(candidates.len()) {
        let mut found = None;
        for_each_combination(candidates.len(), size, &mut |combo| {
            let mut region = core.clone();
            for &c in combo {
                region.extend(ctx.system.paths[candidates[c]].vertices());
            }
            let covers = featured.len() + combo.len() == ctx.system.paths.len();
            let hit = if covers && region.len() == g.n() {
                desired_cycle(g, p, &region)
            } else {
                desired_path(g, p, &region)
            };
            if let Some(desired) = hit {
                let chosen: Vec<usize> = featured.iter().copied().chain(combo.iter().map(|&c| candidates[c])).collect();
                found = Some((desired, chosen));
                return true;
            }
            false
        });
        if let Some((desired, chosen)) = found {
            let remaining = PathSystem {
                paths: ctx
                    .system
                    .paths
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !chosen.contains(i))
                    .map(|(_, path)| path.clone())
                    .collect(),
            };
            let cycle = if remaining.paths.is_empty() && desired.len() == g.n() && g.has_edge(desired.first(), desired.last()) {
                HamCycle(desired.vertices().to_vec())
            } else {
                extend_to_hamiltonian(g, p, &desired, &remaining)?
            };
            if !validate_ham_cycle(g, &cycle) {
                break;
            }
            return Ok((cycle, claim));
        }
    }
    log::warn!("{claim}: no desired path found ({})", census_string(ctx));
    Err(Error::CaseFallthrough { claim, state: census_string(ctx) })
}

/// Non-featured paths ordered by usefulness: short paths first, each vertex
/// of `N^I(v)` contributing its first few adjacent paths.
fn free_candidates(g: &Graph, ctx: &Delta3Context, featured: &[usize]) -> Vec<usize> {
    let mut others: Vec<usize> = (0..ctx.system.paths.len()).filter(|i| !featured.contains(i)).collect();
    others.sort_by_key(|&i| (ctx.system.paths[i].len(), i));
    if others.len() <= MAX_CANDIDATES {
        return others;
    }
    let mut out: Vec<usize> = Vec::new();
    let per = MAX_CANDIDATES / 3;
    for &x in &ctx.niv {
        let mut taken = 0;
        for &i in &others {
            if taken == per {
                break;
            }
            if ctx.system.paths[i].vertices().iter().any(|&w| g.has_edge(x, w)) && !out.contains(&i) {
                out.push(i);
                taken += 1;
            }
        }
    }
    for &i in &others {
        if out.len() >= MAX_CANDIDATES {
            break;
        }
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns true.
fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if rec(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Hamiltonian path of `G[region]` with both ends in `K`.
pub fn desired_path(g: &Graph, p: &SplitPartition, region: &[usize]) -> Option<OrientedPath> {
    region_search(g, p, region, false)
}

/// Hamiltonian cycle of `G[region]`, as a path whose ends are adjacent.
pub fn desired_cycle(g: &Graph, p: &SplitPartition, region: &[usize]) -> Option<OrientedPath> {
    region_search(g, p, region, true)
}

fn region_search(g: &Graph, p: &SplitPartition, region: &[usize], closing: bool) -> Option<OrientedPath> {
    let r = region.len();
    if r == 0 || r > 64 {
        return None;
    }
    let is_k: Vec<bool> = region.iter().map(|&x| p.in_clique(x)).collect();
    let adj: Vec<u64> = region
        .iter()
        .map(|&a| region.iter().enumerate().filter(|(_, &b)| g.has_edge(a, b)).fold(0u64, |m, (j, _)| m | 1 << j))
        .collect();
    let k_mask = is_k.iter().enumerate().filter(|(_, &k)| k).fold(0u64, |m, (j, _)| m | 1 << j);
    let full = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };

    struct Search<'a> {
        adj: &'a [u64],
        k_mask: u64,
        full: u64,
        nodes: u64,
        path: Vec<usize>,
        closing: bool,
    }
    impl Search<'_> {
        fn go(&mut self, tail: usize, visited: u64) -> bool {
            self.nodes += 1;
            if self.nodes > REGION_BUDGET {
                return false;
            }
            let tail_k = self.k_mask >> tail & 1 == 1;
            let start = self.path[0];
            if visited == self.full {
                return if self.closing { self.adj[tail] >> start & 1 == 1 } else { tail_k };
            }
            let free = self.full & !visited;
            let r_k = (free & self.k_mask).count_ones();
            let r_i = (free & !self.k_mask).count_ones();
            if r_i + u32::from(!tail_k) > r_k + u32::from(self.closing) {
                return false;
            }
            let mut reach = free | 1 << tail;
            if self.closing {
                reach |= 1 << start;
            }
            let mut m = free & !self.k_mask;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                if (self.adj[u] & reach).count_ones() < 2 {
                    return false;
                }
            }
            let mut next: Vec<(u32, usize)> = Vec::new();
            let mut m = self.adj[tail] & free;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                let i_first = u32::from(self.k_mask >> u & 1 == 1);
                next.push((i_first << 8 | (self.adj[u] & free).count_ones(), u));
            }
            next.sort_unstable();
            for (_, u) in next {
                self.path.push(u);
                if self.go(u, visited | 1 << u) {
                    return true;
                }
                self.path.pop();
                if self.nodes > REGION_BUDGET {
                    return false;
                }
            }
            false
        }
    }

    let mut s = Search { adj: &adj, k_mask, full, nodes: 0, path: Vec::with_capacity(r), closing };
    for start in (0..r).filter(|&j| is_k[j]) {
        s.path.clear();
        s.path.push(start);
        if s.go(start, 1 << start) {
            return Some(OrientedPath(s.path.iter().map(|&j| region[j]).collect()));
        }
        if s.nodes > REGION_BUDGET || closing {
            return None;
        }
    }
    None
}

/// Joins a desired path and the remaining clique-ended paths into a cycle.
pub fn extend_to_hamiltonian(
    g: &Graph,
    p: &SplitPartition,
    desired: &OrientedPath,
    remaining: &PathSystem,
) -> Result<HamCycle> {
    if desired.is_empty() || !p.in_clique(desired.first()) || !p.in_clique(desired.last()) {
        return Err(Error::PremiseViolated(format!("desired path {desired:?} must end in K")));
    }
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for path in std::iter::once(desired).chain(remaining.paths.iter()) {
        if !p.in_clique(path.first()) || !p.in_clique(path.last()) {
            return Err(Error::PremiseViolated(format!("path {path:?} must end in K")));
        }
        for &x in path.vertices() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::CoverageGap(format!("vertex {x} covered twice")));
            }
            order.push(x);
        }
    }
    if let Some(x) = seen.iter().position(|&s| !s) {
        return Err(Error::CoverageGap(format!("vertex {x} uncovered")));
    }
    Ok(HamCycle(order))
}

/// Outcome of the `Δ^I = 3` solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta3Outcome {
    Cycle(HamCycle, Claim),
    ShortCycle(ShortCycleWitness),
}

pub fn hc_delta3(g: &Graph, p: &SplitPartition) -> Result<Delta3Outcome> {
    match prepare_context(g, p)? {
        Prepared::ShortCycle(w) => Ok(Delta3Outcome::ShortCycle(w)),
        Prepared::Context(ctx) => construct_cycle(g, p, &ctx).map(|(c, claim)| Delta3Outcome::Cycle(c, claim)),
    }
}

/// One-line replay record: claim id, tab, the graph file with lines joined by `;`.
pub fn replay_line(claim: Claim, g: &Graph) -> String {
    format!("{}\t{}", claim, crate::io::render_graph(g, None).trim_end().replace('\n', ";"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::recognize_split;

    fn split(k: usize, i_nbrs: &[&[usize]]) -> Graph {
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                edges.push((a, b));
            }
        }
        for (j, nb) in i_nbrs.iter().enumerate() {
            for &a in nb.iter() {
                edges.push((a, k + j));
            }
        }
        Graph::from_edges(k + i_nbrs.len(), &edges).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in ALL_CLAIMS {
            assert_eq!(Claim::from_id(c.id()), Some(c));
        }
    }

    #[test]
    fn uncovered_clique_vertex_is_a_star() {
        // v = 0 with N^I = {4,5,6}; clique vertex 3 sees none of them.
        let g = split(4, &[&[0, 1], &[0, 2], &[0, 1, 2]]);
        let p = recognize_split(&g).unwrap();
        let err = prepare_context(&g, &p).unwrap_err();
        assert!(matches!(err, Error::PremiseViolated(ref s) if s.contains("neighbor-cover")));
        let (c, arms) = g.find_induced_star(4).unwrap();
        assert_eq!(c, 0);
        assert!(arms.contains(&3));
    }

    #[test]
    fn short_cycle_gate_runs_first() {
        // 5, 6 both ~ {1, 2}: a short cycle missing 0, 3 and 4.
        let g = split(5, &[&[1, 2], &[1, 2], &[0, 2, 3, 4]]);
        let p = recognize_split(&g).unwrap();
        assert_eq!(p.delta_i(), 3);
        match prepare_context(&g, &p).unwrap() {
            Prepared::ShortCycle(w) => {
                assert_eq!(w.cycle, vec![2, 5, 1, 6]);
                assert!(w.verify(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_context_and_cycle() {
        let g = split(4, &[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3], &[1, 2]]);
        let p = recognize_split(&g).unwrap();
        let ctx = match prepare_context(&g, &p).unwrap() {
            Prepared::Context(c) => c,
            other => panic!("{other:?}"),
        };
        assert_eq!(ctx.v, 0);
        assert_eq!(ctx.niv, [4, 5, 6]);
        assert!(ctx.system.paths.iter().all(|q| !q.contains(0)));
        let (cycle, _) = construct_cycle(&g, &p, &ctx).unwrap();
        assert!(validate_ham_cycle(&g, &cycle));
    }

    #[test]
    fn universal_vertex_on_a_three_path() {
        let g = split(4, &[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3], &[1, 2]]);
        let p = recognize_split(&g).unwrap();
        let Prepared::Context(ctx) = prepare_context(&g, &p).unwrap() else { panic!() };
        let path = OrientedPath(vec![1, 7, 2]);
        assert_eq!(find_universal_v1(&g, &ctx, &[&path]).unwrap(), 4);
        let five = OrientedPath(vec![3, 6, 1, 7, 2]);
        assert_eq!(find_universal_v1(&g, &ctx, &[&five]).unwrap(), 4);
        let other = OrientedPath(vec![0, 5, 3, 6, 1]);
        assert_eq!(find_universal_v1(&g, &ctx, &[&five, &other]).unwrap(), 6);
    }

    #[test]
    fn extend_examples() {
        let g = split(4, &[&[0, 1], &[1, 2, 3]]);
        let p = recognize_split(&g).unwrap();
        let desired = OrientedPath(vec![0, 4, 1, 5, 2]);
        let rest = PathSystem { paths: vec![OrientedPath(vec![3])] };
        let c = extend_to_hamiltonian(&g, &p, &desired, &rest).unwrap();
        assert!(validate_ham_cycle(&g, &c));
        let none = PathSystem { paths: vec![] };
        assert!(matches!(extend_to_hamiltonian(&g, &p, &desired, &none), Err(Error::CoverageGap(_))));
        let whole = OrientedPath(vec![0, 4, 1, 5, 2, 3]);
        let c = extend_to_hamiltonian(&g, &p, &whole, &none).unwrap();
        assert!(validate_ham_cycle(&g, &c));
    }

    #[test]
    fn census_rules() {
        let base = Delta3Context {
            v: 0,
            niv: [1, 2, 3],
            reduced: Graph::empty(0),
            reduced_map: vec![],
            system: PathSystem { paths: vec![] },
            census: BTreeMap::new(),
        };
        let with = |pairs: &[(usize, usize)]| Delta3Context { census: pairs.iter().copied().collect(), ..base.clone() };
        let claim_of = |c: &Delta3Context| match check_census(c) {
            Err(Error::CensusViolation { claim, .. }) => Some(claim),
            _ => None,
        };
        assert_eq!(claim_of(&with(&[(13, 1)])), Some(Claim::LongPaths));
        assert_eq!(claim_of(&with(&[(11, 1), (5, 1)])), Some(Claim::ElevenExclusive));
        assert_eq!(claim_of(&with(&[(9, 1), (7, 1)])), Some(Claim::NineExclusive));
        assert_eq!(claim_of(&with(&[(7, 3)])), Some(Claim::SevenPair));
        assert_eq!(claim_of(&with(&[(7, 2), (5, 1)])), Some(Claim::SevenPair));
        assert_eq!(claim_of(&with(&[(7, 1), (5, 2)])), Some(Claim::SevenWithFives));
        assert_eq!(claim_of(&with(&[(5, 3)])), Some(Claim::FiveTriple));
        assert_eq!(claim_of(&with(&[(5, 2), (3, 4), (1, 2)])), None);
        assert_eq!(claim_of(&with(&[(11, 1), (3, 1)])), None);
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
