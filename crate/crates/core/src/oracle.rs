//! Exact Hamiltonian-cycle search by pruned backtracking.
//!
//! The search starts at vertex 0 and tries neighbours in index order, so
//! node counts (and the point where a budget runs out) are reproducible.

use std::time::{Duration, Instant};

use crate::graph::{Graph, HamCycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub nodes: u64,
    pub time: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { nodes: 100_000_000, time: Duration::from_secs(60) }
    }
}

impl OracleBudget {
    pub fn nodes(nodes: u64) -> Self {
        OracleBudget { nodes, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Cycle(HamCycle),
    /// Exhaustive search finished without a cycle.
    NoCycle { nodes: u64 },
    Exhausted { nodes: u64 },
}

impl OracleVerdict {
    pub fn has_cycle(&self) -> Option<bool> {
        match self {
            OracleVerdict::Cycle(_) => Some(true),
            OracleVerdict::NoCycle { .. } => Some(false),
            OracleVerdict::Exhausted { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleCount {
    /// Distinct cycles up to rotation and reflection.
    Count(u64),
    Exhausted { nodes: u64 },
}

pub fn oracle_solve(g: &Graph, budget: OracleBudget) -> OracleVerdict {
    let mut s = Search::new(g, budget, false);
    match s.run() {
        Stop::Done if s.found.is_some() => OracleVerdict::Cycle(HamCycle(s.found.take().unwrap())),
        Stop::Done => OracleVerdict::NoCycle { nodes: s.nodes },
        Stop::Budget => OracleVerdict::Exhausted { nodes: s.nodes },
    }
}

pub fn oracle_count(g: &Graph, budget: OracleBudget) -> OracleCount {
    let mut s = Search::new(g, budget, true);
    match s.run() {
        Stop::Done => OracleCount::Count(s.count / 2),
        Stop::Budget => OracleCount::Exhausted { nodes: s.nodes },
    }
}

enum Stop {
    Done,
    Budget,
}

struct Search<'a> {
    g: &'a Graph,
    budget: OracleBudget,
    count_all: bool,
    started: Instant,
    nodes: u64,
    count: u64,
    found: Option<Vec<usize>>,
    in_set: Vec<bool>,
    visited: Vec<bool>,
    path: Vec<usize>,
    // scratch
    mark: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

/// Greedy independent set, smallest degree first.
fn greedy_independent(g: &Graph) -> Vec<bool> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut in_set = vec![false; g.n()];
    for v in order {
        if g.neighbors(v).all(|u| !in_set[u]) {
            in_set[v] = true;
        }
    }
    in_set
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, budget: OracleBudget, count_all: bool) -> Self {
        let n = g.n();
        Search {
            g,
            budget,
            count_all,
            started: Instant::now(),
            nodes: 0,
            count: 0,
            found: None,
            in_set: greedy_independent(g),
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            mark: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
        }
    }

    fn run(&mut self) -> Stop {
        let g = self.g;
        let n = g.n();
        if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
            return Stop::Done;
        }
        self.visited[0] = true;
        self.path.push(0);
        // frames: candidate list and the next index to try
        let mut frames: Vec<(Vec<usize>, usize)> = Vec::with_capacity(n);
        let first = self.expand();
        frames.push((first, 0));
        while let Some((cands, idx)) = frames.last_mut() {
            if *idx >= cands.len() {
                frames.pop();
                let v = self.path.pop().unwrap();
                self.visited[v] = false;
                continue;
            }
            let u = cands[*idx];
            *idx += 1;
            self.nodes += 1;
            if self.nodes > self.budget.nodes
                || (self.nodes & 1023 == 0 && self.started.elapsed() > self.budget.time)
            {
                return Stop::Budget;
            }
            self.visited[u] = true;
            self.path.push(u);
            if self.path.len() == n {
                if g.has_edge(u, 0) {
                    if self.count_all {
                        self.count += 1;
                    } else {
                        self.found = Some(self.path.clone());
                        return Stop::Done;
                    }
                }
                self.path.pop();
                self.visited[u] = false;
                continue;
            }
            let next = self.expand();
            frames.push((next, 0));
        }
        Stop::Done
    }

    /// Candidates for the vertex after the current tail; empty when pruned.
    fn expand(&mut self) -> Vec<usize> {
        let g = self.g;
        let tail = *self.path.last().unwrap();
        let start = self.path[0];
        let mut forced: Option<usize> = None;
        let mut free_i = 0usize;
        let mut free_other = 0usize;
        for u in 0..g.n() {
            if self.visited[u] {
                continue;
            }
            if self.in_set[u] {
                free_i += 1;
            } else {
                free_other += 1;
            }
            let mut avail = 0;
            let mut sees_tail = false;
            for w in g.neighbors(u) {
                if !self.visited[w] || w == start {
                    avail += 1;
                } else if w == tail {
                    avail += 1;
                    sees_tail = true;
                }
            }
            if avail < 2 {
                return Vec::new();
            }
            if avail == 2 && sees_tail && tail != start {
                if forced.is_some() {
                    return Vec::new();
                }
                forced = Some(u);
            }
        }
        let slots = free_other + 1;
        let blocked = usize::from(self.in_set[tail]) + usize::from(self.in_set[start] && tail != start);
        if free_i + blocked > slots {
            return Vec::new();
        }
        if !self.remainder_connected() {
            return Vec::new();
        }
        match forced {
            Some(u) => vec![u],
            None => g.neighbors(tail).filter(|&u| !self.visited[u]).collect(),
        }
    }

    fn remainder_connected(&mut self) -> bool {
        let g = self.g;
        let Some(root) = (0..g.n()).find(|&v| !self.visited[v]) else {
            return true;
        };
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(root);
        self.mark[root] = stamp;
        let mut seen = 1;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for y in g.neighbors(x) {
                if !self.visited[y] && self.mark[y] != stamp {
                    self.mark[y] = stamp;
                    seen += 1;
                    self.queue.push(y);
                }
            }
        }
        seen == self.visited.iter().filter(|&&v| !v).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_ham_cycle;
    use proptest::prelude::*;

    fn solve(g: &Graph) -> OracleVerdict {
        oracle_solve(g, OracleBudget::nodes(10_000_000))
    }

    fn count(g: &Graph) -> u64 {
        match oracle_count(g, OracleBudget::nodes(10_000_000)) {
            OracleCount::Count(c) => c,
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn small_examples() {
        assert!(matches!(solve(&Graph::complete(3)), OracleVerdict::Cycle(_)));
        assert!(matches!(solve(&Graph::path(3)), OracleVerdict::NoCycle { .. }));
        assert!(matches!(solve(&Graph::petersen()), OracleVerdict::NoCycle { .. }));
        assert!(matches!(solve(&Graph::empty(0)), OracleVerdict::NoCycle { .. }));
        assert!(matches!(solve(&Graph::complete(2)), OracleVerdict::NoCycle { .. }));
    }

    #[test]
    fn counts() {
        assert_eq!(count(&Graph::cycle(5)), 1);
        assert_eq!(count(&Graph::complete(3)), 1);
        assert_eq!(count(&Graph::complete(4)), 3);
        assert_eq!(count(&Graph::complete(5)), 12);
        assert_eq!(count(&Graph::complete(6)), 60);
        assert_eq!(count(&Graph::petersen()), 0);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::petersen();
        assert!(matches!(oracle_solve(&g, OracleBudget::nodes(3)), OracleVerdict::Exhausted { .. }));
    }

    /// Brute force over permutations fixing vertex 0.
    fn brute_count(g: &Graph) -> u64 {
        let n = g.n();
        if n < 3 {
            return 0;
        }
        let mut rest: Vec<usize> = (1..n).collect();
        let mut total = 0;
        fn permute(g: &Graph, k: usize, rest: &mut Vec<usize>, total: &mut u64) {
            if k == rest.len() {
                let mut prev = 0;
                for &v in rest.iter() {
                    if !g.has_edge(prev, v) {
                        return;
                    }
                    prev = v;
                }
                if g.has_edge(prev, 0) {
                    *total += 1;
                }
                return;
            }
            for i in k..rest.len() {
                rest.swap(k, i);
                permute(g, k + 1, rest, total);
                rest.swap(k, i);
            }
        }
        permute(g, 0, &mut rest, &mut total);
        total / 2
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (3..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[k] {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(g in arb_graph(8)) {
            let c = count(&g);
            prop_assert_eq!(c, brute_count(&g));
            match solve(&g) {
                OracleVerdict::Cycle(cyc) => {
                    prop_assert!(validate_ham_cycle(&g, &cyc));
                    prop_assert!(c > 0);
                }
                OracleVerdict::NoCycle { .. } => prop_assert_eq!(c, 0),
                OracleVerdict::Exhausted { .. } => prop_assert!(false),
            }
        }

        #[test]
        fn verdict_is_label_invariant(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.permuted(&perm);
            prop_assert_eq!(solve(&g).has_cycle(), solve(&h).has_cycle());
        }
    }
}
