//! Simple undirected graphs on dense vertex indices, cycle/path certificates
//! and the independent Hamiltonian-cycle checker.

use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` with sorted neighbor lists.
///
/// Immutable once built; every "pick an arbitrary vertex" in the algorithms
/// resolves to the smallest index because neighbor lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<u32>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in edges {
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_raw(adj))
    }

    /// Builds a graph from (possibly unsorted, possibly one-sided) adjacency
    /// lists; the result is symmetrised and deduplicated.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut out: Vec<Vec<u32>> = adj
            .iter()
            .map(|l| Vec::with_capacity(l.len()))
            .collect();
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::IndexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                out[u].push(v as u32);
                out[v].push(u as u32);
            }
        }
        Ok(Self::from_raw(out))
    }

    fn from_raw(mut adj: Vec<Vec<u32>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n as u32).filter(|&v| v as usize != u).collect())
            .collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Star with hub 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("petersen edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.adj[v].iter().map(|&u| u as usize)
    }

    #[inline]
    pub(crate) fn raw_neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced on `vertices`. The returned map sends new indices
    /// to old ones (position `i` holds the original vertex of new vertex `i`).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut new_index = vec![u32::MAX; n];
        let mut map = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if new_index[v] == u32::MAX {
                new_index[v] = map.len() as u32;
                map.push(v);
            }
        }
        let adj = map
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| {
                        let i = new_index[w as usize];
                        (i != u32::MAX).then_some(i)
                    })
                    .collect()
            })
            .collect();
        Ok((Self::from_raw(adj), map))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v as usize] as u32).collect();
        }
        Self::from_raw(adj)
    }

    /// Graph with the extra edges added (used by the reduction).
    pub fn with_extra_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut adj = self.adj.clone();
        let n = self.n();
        for (u, v) in extra {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_raw(adj))
    }

    /// Smallest-index induced `K_{1,s}` (center, arms), by enumeration over
    /// centers and independent `s`-subsets of their neighborhoods.
    pub fn find_induced_star(&self, s: usize) -> Option<(usize, Vec<usize>)> {
        assert!(s >= 1, "a star needs at least one arm");
        let mut arms = Vec::with_capacity(s);
        for c in 0..self.n() {
            if self.degree(c) < s {
                continue;
            }
            let nbrs: Vec<usize> = self.neighbors(c).collect();
            if self.extend_independent(&nbrs, 0, s, &mut arms) {
                return Some((c, arms));
            }
        }
        None
    }

    fn extend_independent(&self, pool: &[usize], from: usize, s: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == s {
            return true;
        }
        for i in from..pool.len() {
            if pool.len() - i < s - chosen.len() {
                return false;
            }
            let u = pool[i];
            if chosen.iter().all(|&w| !self.has_edge(u, w)) {
                chosen.push(u);
                if self.extend_independent(pool, i + 1, s, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Convenience wrapper matching the edge-list constructor.
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

/// Cyclic vertex ordering; the positive certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HamCycle(pub Vec<usize>);

impl HamCycle {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rotation starting at the smallest vertex, oriented so that the second
    /// entry is the smaller of its two cycle neighbors.
    pub fn canonical(&self) -> HamCycle {
        let n = self.0.len();
        if n < 3 {
            return self.clone();
        }
        let start = (0..n).min_by_key(|&i| self.0[i]).unwrap();
        let next = self.0[(start + 1) % n];
        let prev = self.0[(start + n - 1) % n];
        let order = if next <= prev {
            (0..n).map(|k| self.0[(start + k) % n]).collect()
        } else {
            (0..n).map(|k| self.0[(start + n - k) % n]).collect()
        };
        HamCycle(order)
    }

    /// Equality up to rotation and reflection.
    pub fn same_cycle(&self, other: &HamCycle) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Independent certificate checker; shares no code with any solver.
pub fn validate_ham_cycle(g: &Graph, c: &HamCycle) -> bool {
    first_cycle_violation(g, c).is_none()
}

/// What is wrong with a claimed Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleViolation {
    WrongLength { expected: usize, found: usize },
    OutOfRange(usize),
    Repeated(usize),
    MissingEdge(usize, usize),
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::WrongLength { expected, found } => {
                write!(f, "cycle has {found} vertices, graph has {expected}")
            }
            CycleViolation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            CycleViolation::Repeated(v) => write!(f, "vertex {v} repeated"),
            CycleViolation::MissingEdge(u, v) => write!(f, "missing edge {u}-{v}"),
        }
    }
}

pub fn first_cycle_violation(g: &Graph, c: &HamCycle) -> Option<CycleViolation> {
    let n = g.n();
    let order = &c.0;
    if order.len() != n || n < 3 {
        return Some(CycleViolation::WrongLength { expected: n, found: order.len() });
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Some(CycleViolation::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Some(CycleViolation::Repeated(v));
        }
    }
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if !g.has_edge(u, v) {
            return Some(CycleViolation::MissingEdge(u, v));
        }
    }
    None
}

/// A simple path given as an ordered vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedPath(pub Vec<usize>);

impl OrientedPath {
    pub fn new(order: Vec<usize>) -> Self {
        assert!(!order.is_empty(), "a path has at least one vertex");
        OrientedPath(order)
    }

    pub fn single(v: usize) -> Self {
        OrientedPath(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn reversed(&self) -> OrientedPath {
        OrientedPath(self.0.iter().rev().copied().collect())
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Vertices from `a` to `b` inclusive, walking forward or backward.
    pub fn subpath(&self, a: usize, b: usize) -> Option<OrientedPath> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        Some(if i <= j {
            OrientedPath(self.0[i..=j].to_vec())
        } else {
            OrientedPath(self.0[j..=i].iter().rev().copied().collect())
        })
    }

    /// True when the sequence is a simple path of `g`.
    pub fn is_path_of(&self, g: &Graph) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.0.len());
        self.0.iter().all(|&v| v < g.n() && seen.insert(v))
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_star(g: &Graph, s: usize) -> bool {
        for c in 0..g.n() {
            let nb: Vec<usize> = g.neighbors(c).collect();
            let k = nb.len();
            if k < s {
                continue;
            }
            for mask in 0u32..(1 << k) {
                if mask.count_ones() as usize != s {
                    continue;
                }
                let sel: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| nb[i]).collect();
                let indep = sel
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| sel[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
                if indep {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn builds_triangle_and_square() {
        let k3 = graph_from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let c4 = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, Graph::cycle(4));
        assert_eq!(c4.m(), 4);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(graph_from_edges(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            graph_from_edges(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn deduplicates_and_symmetrises() {
        let g = graph_from_edges(3, &[(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(1, 0) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraphs() {
        let (e, map) = Graph::complete(3).induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(e, Graph::path(2));
        assert_eq!(map, vec![0, 1]);

        let (p3, _) = Graph::cycle(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));

        // C_5 minus any vertex is P_4 (checked for every choice).
        let c5 = Graph::cycle(5);
        for drop in 0..5 {
            let keep: Vec<usize> = (0..5).map(|i| (drop + 1 + i) % 5).take(4).collect();
            let (h, _) = c5.induced_subgraph(&keep).unwrap();
            assert_eq!(h, Graph::path(4));
        }

        assert!(matches!(
            Graph::path(3).induced_subgraph(&[5]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = Graph::petersen();
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
    }

    #[test]
    fn validates_cycles() {
        assert!(validate_ham_cycle(&Graph::complete(3), &HamCycle(vec![0, 1, 2])));
        assert!(!validate_ham_cycle(&Graph::cycle(4), &HamCycle(vec![0, 1, 3, 2])));
        assert!(validate_ham_cycle(&Graph::complete(4), &HamCycle(vec![0, 2, 1, 3])));
        assert!(!validate_ham_cycle(&Graph::complete(4), &HamCycle(vec![0, 2, 1])));
        assert!(!validate_ham_cycle(&Graph::complete(4), &HamCycle(vec![0, 2, 1, 1])));
        assert!(!validate_ham_cycle(&Graph::complete(4), &HamCycle(vec![0, 2, 1, 9])));
        assert!(!validate_ham_cycle(&Graph::complete(2), &HamCycle(vec![0, 1])));
        assert_eq!(
            first_cycle_violation(&Graph::cycle(4), &HamCycle(vec![0, 1, 3, 2])),
            Some(CycleViolation::MissingEdge(1, 3))
        );
    }

    #[test]
    fn canonical_rotation() {
        let c = HamCycle(vec![3, 0, 2, 1]);
        assert_eq!(c.canonical(), HamCycle(vec![0, 2, 1, 3]));
        assert!(c.same_cycle(&HamCycle(vec![1, 3, 0, 2])));
    }

    #[test]
    fn stars() {
        let (c, arms) = Graph::star(3).find_induced_star(3).unwrap();
        assert_eq!((c, arms), (0, vec![1, 2, 3]));
        assert_eq!(Graph::complete(4).find_induced_star(2), None);

        // 4-book: u=0, v=1, pages 2 and 3.
        let book = graph_from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert!(brute_force_star(&book, 2));
        assert_eq!(book.find_induced_star(2), Some((0, vec![2, 3])));
        assert_eq!(book.find_induced_star(3), None);
    }

    #[test]
    fn subpaths() {
        let p = OrientedPath::new(vec![4, 7, 1, 9]);
        assert_eq!(p.subpath(1, 7).unwrap(), OrientedPath(vec![1, 7]));
        assert_eq!(p.subpath(7, 9).unwrap(), OrientedPath(vec![7, 1, 9]));
        assert_eq!(p.reversed().first(), 9);
        assert!(p.subpath(4, 5).is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                edges.push((u, v));
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
            fn star_finder_matches_enumeration(g in arb_graph(9), s in 1usize..5) {
                let found = g.find_induced_star(s);
                prop_assert_eq!(found.is_some(), brute_force_star(&g, s));
                if let Some((c, arms)) = found {
                    prop_assert_eq!(arms.len(), s);
                    for (i, &a) in arms.iter().enumerate() {
                        prop_assert!(g.has_edge(c, a));
                        for &b in &arms[i + 1..] {
                            prop_assert!(!g.has_edge(a, b));
                        }
                    }
                }
            }

            #[test]
            fn validation_is_relabeling_invariant(
                n in 3usize..8,
                bits in proptest::collection::vec(any::<bool>(), 28),
                seed in any::<u64>(),
            ) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n { for v in u + 1..n { if bits[k] { edges.push((u, v)); } k += 1; } }
                let g = Graph::from_edges(n, &edges).unwrap();
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                let c = HamCycle(order.clone());
                let pc = HamCycle(order.iter().map(|&v| perm[v]).collect());
                prop_assert_eq!(validate_ham_cycle(&g, &c), validate_ham_cycle(&g.permuted(&perm), &pc));
            }
        }
    }
}
