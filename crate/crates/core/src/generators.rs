//! Seeded instance families and exhaustive enumeration of small split graphs.
//!
//! Randomness comes from ChaCha8 seeded with the spec's seed, and every draw
//! goes through 64-bit ranges, so output is identical across platforms.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{is_two_connected, recognize_split, star_free_level, upgrade_to_maximum_clique, SplitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SplitRandom,
    SplitK14Free,
    SplitDelta2,
    SplitDelta3InPremise,
    ClawFreeSplit,
    BipartiteDeg3,
    PlantedHC,
}

const FAMILIES: [(Family, &str); 7] = [
    (Family::SplitRandom, "split-random"),
    (Family::SplitK14Free, "split-k14-free"),
    (Family::SplitDelta2, "split-delta2"),
    (Family::SplitDelta3InPremise, "split-delta3"),
    (Family::ClawFreeSplit, "claw-free-split"),
    (Family::BipartiteDeg3, "bipartite-deg3"),
    (Family::PlantedHC, "planted-hc"),
];

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(FAMILIES.iter().find(|(x, _)| x == self).unwrap().1)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FAMILIES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(f, _)| *f)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

/// Family plus sizes. For split families `k`, `i` are `|K|`, `|I|`; for
/// `BipartiteDeg3` they are the part sizes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub k: usize,
    pub i: usize,
    pub density: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, k: usize, i: usize, seed: u64) -> Self {
        GenSpec { family, k, i, density: 0.5, seed }
    }

    pub fn with_density(self, density: f64) -> Self {
        GenSpec { density, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!("density {} outside [0, 1]", self.density)));
        }
        if self.family == Family::SplitDelta3InPremise && (self.i < 3 || self.k < 2) {
            return Err(Error::InvalidSpec("split-delta3 needs |I| >= 3 and |K| >= 2".into()));
        }
        Ok(())
    }

    /// `family k=.. i=.. p=.. seed=..`
    pub fn render(&self) -> String {
        format!("{} k={} i={} p={} seed={}", self.family, self.k, self.i, self.density, self.seed)
    }

    /// Parses `family` followed by `key=value` words (`k`, `i`, `p`, `seed`).
    pub fn parse_words(words: &[&str]) -> Result<(GenSpec, Vec<(String, String)>)> {
        let (fam, rest) = words.split_first().ok_or_else(|| Error::InvalidSpec("missing family".into()))?;
        let mut spec = GenSpec::new(fam.parse()?, 0, 0, 0);
        let mut extra = Vec::new();
        for w in rest {
            let (key, val) = w.split_once('=').ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got {w:?}")))?;
            let bad = |_| Error::InvalidSpec(format!("bad value in {w:?}"));
            match key {
                "k" | "a" => spec.k = val.parse().map_err(bad)?,
                "i" | "b" => spec.i = val.parse().map_err(bad)?,
                "p" => spec.density = val.parse().map_err(|_| Error::InvalidSpec(format!("bad value in {w:?}")))?,
                "seed" => spec.seed = val.parse().map_err(bad)?,
                _ => extra.push((key.to_string(), val.to_string())),
            }
        }
        spec.validate()?;
        Ok((spec, extra))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    /// Clique of the intended split partition, when the family has one.
    pub clique: Option<Vec<usize>>,
    /// Part `A` for bipartite families.
    pub part_a: Option<Vec<usize>>,
    /// Rejected samples before this one.
    pub rejected: u64,
}

const MAX_ATTEMPTS: u64 = 20_000;

fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    rng.gen_range(0..n as u64) as usize
}

fn shuffle<T>(rng: &mut ChaCha8Rng, v: &mut [T]) {
    for i in (1..v.len()).rev() {
        v.swap(i, below(rng, i + 1));
    }
}

/// `k` clique vertices `0..k`, independent vertex `k + j` adjacent to `nbrs[j]`.
fn build_split(k: usize, nbrs: &[Vec<usize>]) -> Graph {
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    for (j, nb) in nbrs.iter().enumerate() {
        edges.extend(nb.iter().map(|&a| (a, k + j)));
    }
    Graph::from_edges(k + nbrs.len(), &edges).expect("generated indices are in range")
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (k, i, p) = (spec.k, spec.i, spec.density);
    for attempt in 0..MAX_ATTEMPTS {
        let candidate = match spec.family {
            Family::SplitRandom => Some(split_random(&mut rng, k, i, p)),
            Family::SplitK14Free => split_k14_free(&mut rng, k, i, p),
            Family::SplitDelta2 => split_delta2(&mut rng, k, i, p),
            Family::SplitDelta3InPremise => split_delta3(&mut rng, k, i, p),
            Family::ClawFreeSplit => claw_free(&mut rng, k, i, p),
            Family::BipartiteDeg3 => {
                let (g, a) = bipartite_deg3(&mut rng, k, i, p);
                return Ok(Generated { graph: g, clique: None, part_a: Some(a), rejected: 0 });
            }
            Family::PlantedHC => planted(&mut rng, k, i, p),
        };
        if let Some(g) = candidate {
            if accept(spec.family, &g, k, i) {
                let clique = Some((0..k).collect());
                return Ok(Generated { graph: g, clique, part_a: None, rejected: attempt });
            }
        }
    }
    Err(Error::GenerationExhausted(MAX_ATTEMPTS))
}

/// Residual contract checks, done with the analyzers rather than trusted
/// from construction.
fn accept(family: Family, g: &Graph, k: usize, i: usize) -> bool {
    let Ok(p) = recognize_split(g) else { return false };
    let Ok(p) = upgrade_to_maximum_clique(g, p) else { return false };
    let two = || is_two_connected(g).is_two_connected();
    match family {
        Family::SplitRandom | Family::PlantedHC => true,
        Family::SplitK14Free => two() && star_free_level(g, &p).is_k14_free(),
        Family::SplitDelta2 => two() && p.k() == k && p.delta_i() == 2 && star_free_level(g, &p).is_k14_free(),
        Family::SplitDelta3InPremise => {
            two() && p.k() == k
                && p.i() == i
                && p.delta_i() == 3
                && star_free_level(g, &p).is_k14_free()
                && p.k() >= p.i()
                && p.i() >= 8
        }
        Family::ClawFreeSplit => two() && star_free_level(g, &p).is_claw_free(),
        Family::BipartiteDeg3 => true,
    }
}

fn split_random(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Graph {
    let nbrs: Vec<Vec<usize>> = (0..i).map(|_| (0..k).filter(|_| rng.gen_bool(p)).collect()).collect();
    build_split(k, &nbrs)
}

/// `d` distinct clique vertices among those with `load < cap`.
fn pick(rng: &mut ChaCha8Rng, load: &[usize], cap: usize, d: usize) -> Option<Vec<usize>> {
    let mut open: Vec<usize> = (0..load.len()).filter(|&w| load[w] < cap).collect();
    if open.len() < d {
        return None;
    }
    shuffle(rng, &mut open);
    let mut out: Vec<usize> = open[..d].to_vec();
    out.sort_unstable();
    Some(out)
}

/// Independent vertices of degree `2 + Bin(t, p)`, at most `cap` per clique
/// vertex, where `t` spreads the spare clique capacity over `I`.
fn capped_split(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64, cap: usize) -> Option<Graph> {
    if k < 3 || 2 * i > cap * k {
        return None;
    }
    let trials = ((cap * k - 2 * i) / i.max(1)).min(k - 3);
    let mut load = vec![0usize; k];
    let mut nbrs = Vec::with_capacity(i);
    for _ in 0..i {
        let extra = (0..trials).filter(|_| rng.gen_bool(p)).count();
        let nb = pick(rng, &load, cap, 2 + extra).or_else(|| pick(rng, &load, cap, 2))?;
        nb.iter().for_each(|&w| load[w] += 1);
        nbrs.push(nb);
    }
    Some(build_split(k, &nbrs))
}

fn split_k14_free(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Option<Graph> {
    let cap = if rng.gen_bool(0.5) { 2 } else { 3 };
    capped_split(rng, k, i, p, cap)
}

fn split_delta2(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Option<Graph> {
    capped_split(rng, k, i, p, 2)
}

/// `v = 0` with `N^I(v) = {k, k+1, k+2}`. Every other clique vertex gets an
/// independent neighbourhood of size 1 to 3 that meets every triple chosen
/// so far; a new triple must meet every neighbourhood chosen so far.
fn split_delta3(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Option<Graph> {
    let t0 = [0usize, 1, 2];
    let mut sets: Vec<Vec<usize>> = vec![t0.to_vec()];
    let mut deg = vec![0usize; i];
    t0.iter().for_each(|&x| deg[x] += 1);
    let meets = |a: &[usize], b: &[usize]| a.iter().any(|x| b.contains(x));
    for _ in 1..k {
        let mut chosen = None;
        for _ in 0..40 {
            let size = match below(rng, 20) {
                0..=2 => 1,
                3..=13 => 2,
                _ => 3,
            };
            let mut s = vec![t0[below(rng, 3)]];
            while s.len() < size {
                // prefer independent vertices of low degree
                let a = below(rng, i);
                let b = below(rng, i);
                let x = if deg[a] <= deg[b] { a } else { b };
                if !s.contains(&x) {
                    s.push(x);
                }
            }
            if rng.gen_bool(p) && size < 3 {
                // densify: a second vertex of N^I(v) keeps every triple met
                let y = t0[below(rng, 3)];
                if !s.contains(&y) {
                    s.push(y);
                }
            }
            s.sort_unstable();
            let ok_triples = sets.iter().filter(|t| t.len() == 3).all(|t| meets(t, &s));
            let ok_self = s.len() < 3 || sets.iter().all(|t| meets(t, &s));
            if ok_triples && ok_self {
                chosen = Some(s);
                break;
            }
        }
        let s = chosen?;
        s.iter().for_each(|&x| deg[x] += 1);
        sets.push(s);
    }
    if deg.iter().any(|&d| d < 2 || d >= k) {
        return None;
    }
    let mut nbrs = vec![Vec::new(); i];
    for (w, s) in sets.iter().enumerate() {
        for &x in s {
            nbrs[x].push(w);
        }
    }
    Some(build_split(k, &nbrs))
}

/// `Δ^I ≤ 1` for `|I| ≥ 4`; otherwise free neighbourhoods filtered later.
fn claw_free(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Option<Graph> {
    if i >= 4 {
        if k < 2 * i {
            return None;
        }
        let mut order: Vec<usize> = (0..k).collect();
        shuffle(rng, &mut order);
        let mut nbrs: Vec<Vec<usize>> = (0..i).map(|j| vec![order[2 * j], order[2 * j + 1]]).collect();
        for &w in &order[2 * i..] {
            if rng.gen_bool(p) {
                nbrs[below(rng, i)].push(w);
            }
        }
        nbrs.iter_mut().for_each(|nb| nb.sort_unstable());
        return Some(build_split(k, &nbrs));
    }
    let nbrs: Vec<Vec<usize>> = (0..i)
        .map(|_| {
            let mut nb: Vec<usize> = (0..k).filter(|_| rng.gen_bool(p)).collect();
            while nb.len() < 2.min(k) {
                let x = below(rng, k);
                if !nb.contains(&x) {
                    nb.push(x);
                }
            }
            nb.sort_unstable();
            nb
        })
        .collect();
    Some(build_split(k, &nbrs))
}

/// Random bipartite graph with parts `0..a` and `a..a+b`, maximum degree 3.
fn bipartite_deg3(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> (Graph, Vec<usize>) {
    let mut pairs: Vec<(usize, usize)> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    shuffle(rng, &mut pairs);
    let mut deg = vec![0usize; a + b];
    let mut edges = Vec::new();
    for (x, y) in pairs {
        if deg[x] < 3 && deg[y] < 3 && rng.gen_bool(p) {
            deg[x] += 1;
            deg[y] += 1;
            edges.push((x, y));
        }
    }
    (Graph::from_edges(a + b, &edges).unwrap(), (0..a).collect())
}

/// A Hamiltonian cycle through all of `K` with the `i ≤ k` independent
/// vertices in distinct gaps, plus random extra clique neighbours.
fn planted(rng: &mut ChaCha8Rng, k: usize, i: usize, p: f64) -> Option<Graph> {
    if i > k || k + i < 3 {
        return None;
    }
    let mut ring: Vec<usize> = (0..k).collect();
    shuffle(rng, &mut ring);
    let mut gaps: Vec<usize> = (0..k).collect();
    shuffle(rng, &mut gaps);
    let nbrs: Vec<Vec<usize>> = (0..i)
        .map(|j| {
            let g = gaps[j];
            let (a, b) = (ring[g], ring[(g + 1) % k]);
            let mut nb: Vec<usize> = (0..k).filter(|&w| w == a || w == b || rng.gen_bool(p / 2.0)).collect();
            if nb.len() == k && k > 2 {
                // keep K maximum
                let drop = nb.iter().position(|&w| w != a && w != b).unwrap();
                nb.remove(drop);
            }
            nb
        })
        .collect();
    Some(build_split(k, &nbrs))
}

/// Clique `0..big+s`; independent vertices `big+s+j ~ {big+j, big+(j+1) mod s}`
/// close a short cycle on the last `s` clique vertices, and two more hang off
/// `{0, 1}` and `{2, 3}`. Not Hamiltonian, `Δ^I = 2`, and hard for the oracle,
/// which explores the low-index clique first.
pub fn hidden_short_cycle(big: usize, s: usize) -> Graph {
    assert!(big >= 4 && s >= 2, "need big >= 4 and s >= 2");
    let k = big + s;
    let mut nbrs: Vec<Vec<usize>> = (0..s).map(|j| vec![big + j, big + (j + 1) % s]).collect();
    nbrs.push(vec![0, 1]);
    nbrs.push(vec![2, 3]);
    build_split(k, &nbrs)
}

/// Every split graph on `n ≤ 8` vertices, once per isomorphism class, in a
/// fixed order.
pub fn enumerate_small_split(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "enumeration is limited to n <= 8");
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let i = n - k;
        let masks = 1usize << k;
        let mut choice = vec![0usize; i];
        loop {
            let nbrs: Vec<Vec<usize>> =
                choice.iter().map(|&m| (0..k).filter(|&b| m >> b & 1 == 1).collect()).collect();
            let g = build_split(k, &nbrs);
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
            // next non-decreasing sequence of masks
            let mut pos = i;
            while pos > 0 && choice[pos - 1] + 1 == masks {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            let v = choice[pos - 1] + 1;
            choice[pos - 1..].iter_mut().for_each(|c| *c = v);
        }
    }
    out
}

/// Isomorphism-invariant code of a graph on at most 8 vertices: colour
/// refinement, then the least adjacency bitstring over orderings that
/// respect the colour classes.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8);
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes_before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        color = next;
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<(usize, usize)> = (0..n).map(|v| (color[v], v)).collect();
    by_color.sort_unstable();
    for (c, v) in by_color {
        match cells.last_mut() {
            Some(cell) if color[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    permute_cells(g, &mut cells, 0, 0, &mut order, &mut best);
    // colour multiset is part of the invariant; n fits in the top bits
    best | (n as u64) << 60
}

fn permute_cells(g: &Graph, cells: &mut [Vec<usize>], ci: usize, k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        let n = order.len();
        let mut code = 0u64;
        let mut bit = 0;
        for a in 0..n {
            for b in a + 1..n {
                if g.has_edge(order[a], order[b]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    if k == cells[ci].len() {
        permute_cells(g, cells, ci + 1, 0, order, best);
        return;
    }
    for j in k..cells[ci].len() {
        cells[ci].swap(k, j);
        order.push(cells[ci][k]);
        permute_cells(g, cells, ci, k + 1, order, best);
        order.pop();
        cells[ci].swap(k, j);
    }
}

/// The partition of a generated split instance, recomputed and upgraded.
pub fn partition_of(g: &Graph) -> Result<SplitPartition> {
    let p = recognize_split(g)?;
    upgrade_to_maximum_clique(g, p)
}
