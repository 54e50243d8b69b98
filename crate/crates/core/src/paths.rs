//! The `Δ^I = 2` machinery: the bipartite subgraph of degree-2 independent
//! vertices, short cycles, and the constructive assembly of alternating
//! paths with clique endpoints.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, HamCycle, OrientedPath};
use crate::split::{components_without, SplitPartition};

/// Bipartite subgraph between `Va = {u ∈ I : d(u) = 2}` and `Vb = N(Va)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTwoSubgraph {
    pub va: Vec<usize>,
    pub vb: Vec<usize>,
    /// `(u, w)` with `u ∈ Va`, `w ∈ Vb`.
    pub edges: Vec<(usize, usize)>,
}

pub fn build_degree_two_subgraph(g: &Graph, p: &SplitPartition) -> DegreeTwoSubgraph {
    let va: Vec<usize> = p.independent().iter().copied().filter(|&u| g.degree(u) == 2).collect();
    let mut vb: Vec<usize> = va.iter().flat_map(|&u| g.neighbors(u)).collect();
    vb.sort_unstable();
    vb.dedup();
    let edges = va.iter().flat_map(|&u| g.neighbors(u).map(move |w| (u, w))).collect();
    DegreeTwoSubgraph { va, vb, edges }
}

/// Induced cycle of the degree-two subgraph missing at least one clique vertex.
///
/// `cycle` alternates clique and independent vertices, starting with a
/// clique vertex; `excluded` is a clique vertex off the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortCycleWitness {
    pub cycle: Vec<usize>,
    pub excluded: usize,
}

impl ShortCycleWitness {
    /// Clique vertices of the cycle (the separator `S`).
    pub fn separator(&self) -> Vec<usize> {
        self.cycle.iter().step_by(2).copied().collect()
    }

    /// Checks the witness without a partition: a closed walk of `g` whose odd
    /// positions have degree 2, whose even positions plus `excluded` are
    /// pairwise adjacent, and whose even positions separate `g` into more
    /// than `|S|` components.
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let len = c.len();
        if len < 4 || len % 2 == 1 || c.iter().any(|&v| v >= g.n()) || self.excluded >= g.n() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !c.iter().all(|&v| seen.insert(v)) || seen.contains(&self.excluded) {
            return false;
        }
        if !(0..len).all(|i| g.has_edge(c[i], c[(i + 1) % len])) {
            return false;
        }
        if !c.iter().skip(1).step_by(2).all(|&u| g.degree(u) == 2) {
            return false;
        }
        let mut s = self.separator();
        s.push(self.excluded);
        if !s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
            return false;
        }
        s.pop();
        components_without(g, &s) > s.len()
    }
}

/// Finds a short cycle, if any. Every cycle of the degree-two subgraph is
/// chordless there, so it suffices to find cycles of the multigraph on `Vb`
/// whose edges are the degree-2 independent vertices.
pub fn find_short_cycle(g: &Graph, p: &SplitPartition) -> Option<ShortCycleWitness> {
    let h = build_degree_two_subgraph(g, p);
    let cycle = find_h_cycle(g, &h)?;
    let on: std::collections::HashSet<usize> = cycle.iter().copied().collect();
    if let Some(&excluded) = p.clique().iter().find(|v| !on.contains(v)) {
        return Some(ShortCycleWitness { cycle, excluded });
    }
    // The cycle covers K; any further Va vertex is a chord of the contracted
    // cycle and closes a strictly shorter one.
    let ks: Vec<usize> = cycle.iter().step_by(2).copied().collect();
    let used: std::collections::HashSet<usize> = cycle.iter().skip(1).step_by(2).copied().collect();
    let chord = h.va.iter().copied().find(|u| !used.contains(u))?;
    let ends: Vec<usize> = g.neighbors(chord).collect();
    let pos = |v: usize| ks.iter().position(|&k| k == v).unwrap();
    let (i, j) = (pos(ends[0]), pos(ends[1]));
    let (lo, hi) = (i.min(j), i.max(j));
    // walk lo..=hi along the cycle, then back through the chord
    let short: Vec<usize> = cycle[2 * lo..=2 * hi].iter().copied().chain(std::iter::once(chord)).collect();
    let on: std::collections::HashSet<usize> = short.iter().copied().collect();
    let excluded = *p.clique().iter().find(|v| !on.contains(v))?;
    Some(ShortCycleWitness { cycle: short, excluded })
}

/// Any cycle of the degree-two subgraph, as an alternating sequence
/// starting at a clique vertex.
fn find_h_cycle(g: &Graph, h: &DegreeTwoSubgraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // forest adjacency on Vb: (neighbor, via independent vertex)
    let mut forest: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &u in &h.va {
        let mut nb = g.neighbors(u);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            // tree path b -> a, then back to b through u
            let path = forest_path(&forest, b, a);
            let mut cyc = path;
            cyc.push(u);
            return Some(cyc);
        }
        parent[ra] = rb;
        forest.entry(a).or_default().push((b, u));
        forest.entry(b).or_default().push((a, u));
    }
    None
}

/// Alternating vertex sequence of the forest path from `from` to `to`.
fn forest_path(forest: &BTreeMap<usize, Vec<(usize, usize)>>, from: usize, to: usize) -> Vec<usize> {
    let mut prev: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::from([from]);
    prev.insert(from, (from, usize::MAX));
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, via) in forest.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(y) {
                e.insert((x, via));
                queue.push_back(y);
            }
        }
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        let (p, via) = prev[&cur];
        out.push(via);
        out.push(p);
        cur = p;
    }
    out.reverse();
    out
}

/// Vertex-disjoint alternating paths with clique endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<OrientedPath>,
}

impl PathSystem {
    /// Paths with exactly `j` vertices.
    pub fn bucket(&self, j: usize) -> impl Iterator<Item = &OrientedPath> {
        self.paths.iter().filter(move |p| p.len() == j)
    }

    /// `j -> |ℙ_j|`.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for p in &self.paths {
            *c.entry(p.len()).or_insert(0) += 1;
        }
        c
    }

    pub fn count(&self, j: usize) -> usize {
        self.bucket(j).count()
    }

    /// Checks the structural invariants against `g` and `p`: vertex-disjoint
    /// simple paths, alternating clique/independent with clique endpoints.
    pub fn check(&self, g: &Graph, p: &SplitPartition) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for path in &self.paths {
            if !path.is_path_of(g) {
                return Err(Error::PremiseViolated(format!("{path:?} is not a path")));
            }
            for (i, &v) in path.vertices().iter().enumerate() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::PremiseViolated(format!("vertex {v} on two paths")));
                }
                if p.in_clique(v) != (i % 2 == 0) {
                    return Err(Error::PremiseViolated(format!("{path:?} does not alternate")));
                }
            }
            if path.len() % 2 == 0 {
                return Err(Error::PremiseViolated(format!("{path:?} ends in I")));
            }
        }
        Ok(())
    }
}

/// Which class a vertex was drawn from when inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionKind {
    /// Adjacent to endpoints of at least two paths; joins two of them.
    Joins,
    /// Adjacent to endpoints of exactly one path; extends it.
    Extends,
    /// Adjacent to no endpoint; starts a new 3-vertex path.
    Starts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    pub vertex: usize,
    pub kind: InsertionKind,
    pub paths_before: usize,
    pub paths_after: usize,
}

/// Paths built from the degree-two subgraph, then grown by inserting every
/// remaining independent vertex (joins before extensions before new paths,
/// classes recomputed after each insertion). Requires `Δ^I ≤ 2` and an
/// acyclic degree-two subgraph.
pub fn assemble_paths(g: &Graph, p: &SplitPartition) -> Result<PathSystem> {
    assemble_paths_traced(g, p).map(|(s, _)| s)
}

pub fn assemble_paths_traced(g: &Graph, p: &SplitPartition) -> Result<(PathSystem, Vec<InsertionStep>)> {
    if p.delta_i() > 2 {
        return Err(Error::PremiseViolated(format!("Δ^I = {} > 2", p.delta_i())));
    }
    let n = g.n();
    let h = build_degree_two_subgraph(g, p);
    if find_h_cycle(g, &h).is_some() {
        return Err(Error::PremiseViolated("degree-two subgraph has a cycle".into()));
    }

    // Chains of the (acyclic, max degree 2) degree-two subgraph.
    let mut h_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, w) in &h.edges {
        h_adj[u].push(w);
        h_adj[w].push(u);
    }
    let mut paths: Vec<Option<Vec<usize>>> = Vec::new();
    let mut on_path = vec![false; n];
    for &start in &h.vb {
        if on_path[start] || h_adj[start].len() != 1 {
            continue;
        }
        let mut path = vec![start];
        on_path[start] = true;
        let mut cur = start;
        loop {
            let next = h_adj[cur].iter().copied().find(|&x| !on_path[x]);
            match next {
                Some(x) => {
                    on_path[x] = true;
                    path.push(x);
                    cur = x;
                }
                None => break,
            }
        }
        paths.push(Some(path));
    }

    let mut end_of: Vec<Option<usize>> = vec![None; n];
    for (id, path) in paths.iter().enumerate() {
        let path = path.as_ref().unwrap();
        end_of[path[0]] = Some(id);
        end_of[*path.last().unwrap()] = Some(id);
    }

    let mut pending: Vec<usize> = p.independent().iter().copied().filter(|&u| !on_path[u]).collect();
    let mut steps = Vec::with_capacity(pending.len());
    let mut live = paths.len();
    while !pending.is_empty() {
        // (class rank, position in pending)
        let mut pick: Option<(u8, usize)> = None;
        for (idx, &u) in pending.iter().enumerate() {
            let mut first: Option<usize> = None;
            let mut two = false;
            for w in g.neighbors(u) {
                if let Some(id) = end_of[w] {
                    match first {
                        None => first = Some(id),
                        Some(f) if f != id => {
                            two = true;
                            break;
                        }
                        _ => {}
                    }
                }
            }
            let rank = if two { 0 } else if first.is_some() { 1 } else { 2 };
            if pick.is_none_or(|(r, _)| rank < r) {
                pick = Some((rank, idx));
                if rank == 0 {
                    break;
                }
            }
        }
        let (rank, idx) = pick.unwrap();
        let u = pending.remove(idx);
        let before = live;
        let kind = match rank {
            0 => {
                let mut nb = g.neighbors(u).filter(|&w| end_of[w].is_some());
                let e1 = nb.next().unwrap();
                let p1 = end_of[e1].unwrap();
                let e2 = nb.find(|&w| end_of[w] != Some(p1)).unwrap();
                let p2 = end_of[e2].unwrap();
                let mut a = paths[p1].take().unwrap();
                let mut b = paths[p2].take().unwrap();
                if a[0] == e1 {
                    a.reverse();
                }
                if *b.last().unwrap() == e2 && b[0] != e2 {
                    b.reverse();
                }
                for &x in [a[0], *a.last().unwrap(), b[0], *b.last().unwrap()].iter() {
                    end_of[x] = None;
                }
                a.push(u);
                a.extend(b);
                end_of[a[0]] = Some(p1);
                end_of[*a.last().unwrap()] = Some(p1);
                on_path[u] = true;
                paths[p1] = Some(a);
                live -= 1;
                InsertionKind::Joins
            }
            1 => {
                let e_any = g.neighbors(u).find(|&w| end_of[w].is_some()).unwrap();
                let pid = end_of[e_any].unwrap();
                let free = g.neighbors(u).find(|&w| !on_path[w]).ok_or_else(|| {
                    Error::PremiseViolated(format!("vertex {u} has no neighbor off the paths"))
                })?;
                let mut a = paths[pid].take().unwrap();
                let tail = *a.last().unwrap();
                if !g.has_edge(u, tail) {
                    a.reverse();
                }
                end_of[*a.last().unwrap()] = None;
                a.push(u);
                a.push(free);
                on_path[u] = true;
                on_path[free] = true;
                end_of[a[0]] = Some(pid);
                end_of[free] = Some(pid);
                paths[pid] = Some(a);
                InsertionKind::Extends
            }
            _ => {
                let mut free = g.neighbors(u).filter(|&w| !on_path[w]);
                let (a, b) = match (free.next(), free.next()) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Err(Error::PremiseViolated(format!(
                            "vertex {u} has fewer than two free neighbors"
                        )))
                    }
                };
                for x in [a, u, b] {
                    on_path[x] = true;
                }
                let id = paths.len();
                paths.push(Some(vec![a, u, b]));
                end_of[a] = Some(id);
                end_of[b] = Some(id);
                live += 1;
                InsertionKind::Starts
            }
        };
        steps.push(InsertionStep { vertex: u, kind, paths_before: before, paths_after: live });
        #[cfg(debug_assertions)]
        for path in paths.iter().flatten() {
            debug_assert!(p.in_clique(path[0]) && p.in_clique(*path.last().unwrap()));
        }
    }

    let mut out: Vec<OrientedPath> = paths.into_iter().flatten().map(OrientedPath::new).collect();
    out.extend(p.clique().iter().copied().filter(|&v| !on_path[v]).map(OrientedPath::single));
    Ok((PathSystem { paths: out }, steps))
}

/// Concatenates paths with clique endpoints through clique edges and closes
/// the cycle.
pub fn join_paths(paths: &[OrientedPath]) -> HamCycle {
    HamCycle(paths.iter().flat_map(|p| p.vertices().iter().copied()).collect())
}

/// Outcome of the `Δ^I = 2` solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta2Outcome {
    Cycle(HamCycle),
    ShortCycle(ShortCycleWitness),
}

/// Hamiltonian cycle or short-cycle certificate for a 2-connected split
/// graph with `Δ^I = 2`.
pub fn hc_delta2(g: &Graph, p: &SplitPartition) -> Result<Delta2Outcome> {
    if p.delta_i() != 2 {
        return Err(Error::PremiseViolated(format!("Δ^I = {} ≠ 2", p.delta_i())));
    }
    if let Some(w) = find_short_cycle(g, p) {
        return Ok(Delta2Outcome::ShortCycle(w));
    }
    let h = build_degree_two_subgraph(g, p);
    if let Some(cyc) = find_h_cycle(g, &h) {
        // A cycle through all of K saturates every clique vertex.
        if cyc.len() == g.n() {
            return Ok(Delta2Outcome::Cycle(HamCycle(cyc)));
        }
        return Err(Error::PremiseViolated("spanning cycle of H leaves vertices uncovered".into()));
    }
    let system = assemble_paths(g, p)?;
    Ok(Delta2Outcome::Cycle(join_paths(&system.paths)))
}
