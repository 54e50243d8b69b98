//! Split-graph recognition, the clique/independent partition with a maximum
//! clique, `d^I` statistics, 2-connectivity and induced-star levels.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::ShortCycleWitness;

/// Partition `(K, I)` with `K` a maximum clique and `I` independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    clique: Vec<usize>,
    independent: Vec<usize>,
    in_clique: Vec<bool>,
    d_i: Vec<usize>,
    delta_i: usize,
}

impl SplitPartition {
    /// Checks that `clique` is a clique, its complement is independent, and
    /// computes `d^I`. Does not check maximality.
    pub fn from_clique(g: &Graph, clique: &[usize]) -> Result<Self> {
        let n = g.n();
        let mut in_clique = vec![false; n];
        for &v in clique {
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut in_clique[v], true) {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
        }
        let k = clique.len();
        let mut d_i = vec![0usize; n];
        for v in 0..n {
            let inside = g.neighbors(v).filter(|&u| in_clique[u]).count();
            if in_clique[v] {
                if inside != k - 1 {
                    return Err(Error::InvalidPartition(format!(
                        "clique vertex {v} misses {} clique neighbors",
                        k - 1 - inside
                    )));
                }
                d_i[v] = g.degree(v) - inside;
            } else if inside != g.degree(v) {
                return Err(Error::InvalidPartition(format!(
                    "independent vertex {v} has an independent neighbor"
                )));
            }
        }
        let mut clique: Vec<usize> = clique.to_vec();
        clique.sort_unstable();
        let independent = (0..n).filter(|&v| !in_clique[v]).collect();
        let delta_i = clique.iter().map(|&v| d_i[v]).max().unwrap_or(0);
        Ok(SplitPartition { clique, independent, in_clique, d_i, delta_i })
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    #[inline]
    pub fn in_clique(&self, v: usize) -> bool {
        self.in_clique[v]
    }

    /// `|N(v) ∩ I|` for a clique vertex `v` (0 for independent vertices).
    #[inline]
    pub fn d_i(&self, v: usize) -> usize {
        self.d_i[v]
    }

    pub fn delta_i(&self) -> usize {
        self.delta_i
    }

    pub fn k(&self) -> usize {
        self.clique.len()
    }

    pub fn i(&self) -> usize {
        self.independent.len()
    }

    /// Independent neighbors of a clique vertex.
    pub fn n_i<'a>(&'a self, g: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        g.neighbors(v).filter(move |&u| !self.in_clique[u])
    }
}

/// Induced forbidden subgraph proving a graph is not split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSplit {
    /// `"C4"`, `"C5"` or `"2K2"`.
    pub kind: &'static str,
    /// For cycles, the vertices in cyclic order; for `2K2`, the two edges.
    pub vertices: Vec<usize>,
}

impl From<NotSplit> for Error {
    fn from(w: NotSplit) -> Self {
        Error::NotSplit { kind: w.kind, vertices: w.vertices }
    }
}

/// Recognizes split graphs by the degree-sequence criterion; on failure
/// searches for an induced `C4`, `C5` or `2K2`.
pub fn recognize_split(g: &Graph) -> std::result::Result<SplitPartition, NotSplit> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut m = 0;
    for (i, &v) in order.iter().enumerate() {
        if g.degree(v) >= i {
            m = i + 1;
        }
    }
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head == m * m.saturating_sub(1) + tail {
        if let Ok(p) = SplitPartition::from_clique(g, &order[..m]) {
            return Ok(upgrade_to_maximum_clique(g, p).expect("valid partition stays valid"));
        }
    }
    Err(find_split_obstruction(g).expect("a non-split graph has an induced C4, C5 or 2K2"))
}

/// Moves independent vertices adjacent to all of `K` into `K` until none
/// remains, so that `K` becomes a maximum clique.
pub fn upgrade_to_maximum_clique(g: &Graph, p: SplitPartition) -> Result<SplitPartition> {
    let mut clique = p.clique.clone();
    let check = SplitPartition::from_clique(g, &clique)?;
    if check != p {
        return Err(Error::InvalidPartition("stale d^I statistics".into()));
    }
    loop {
        // Independent vertices only see clique vertices, so full adjacency
        // to K is a degree test.
        let k = clique.len();
        let in_k = {
            let mut b = vec![false; g.n()];
            clique.iter().for_each(|&v| b[v] = true);
            b
        };
        let mover = (0..g.n()).find(|&u| !in_k[u] && g.degree(u) == k);
        match mover {
            Some(u) => clique.push(u),
            None => break,
        }
    }
    if clique.len() == p.clique.len() {
        return Ok(p);
    }
    SplitPartition::from_clique(g, &clique)
}

fn find_split_obstruction(g: &Graph) -> Option<NotSplit> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (ac, ad, bc, bd) = (g.has_edge(a, c), g.has_edge(a, d), g.has_edge(b, c), g.has_edge(b, d));
            match (ac, ad, bc, bd) {
                (false, false, false, false) => {
                    return Some(NotSplit { kind: "2K2", vertices: vec![a, b, c, d] })
                }
                (true, false, false, true) => {
                    return Some(NotSplit { kind: "C4", vertices: vec![a, b, d, c] })
                }
                (false, true, true, false) => {
                    return Some(NotSplit { kind: "C4", vertices: vec![a, b, c, d] })
                }
                _ => {}
            }
        }
    }
    for a in 0..g.n() {
        for b in g.neighbors(a) {
            for c in g.neighbors(b).filter(|&c| c != a && !g.has_edge(a, c)) {
                for d in g.neighbors(c).filter(|&d| d != b && !g.has_edge(a, d) && !g.has_edge(b, d)) {
                    for e in g.neighbors(d) {
                        if e != c && e != a && g.has_edge(a, e) && !g.has_edge(b, e) && !g.has_edge(c, e) {
                            return Some(NotSplit { kind: "C5", vertices: vec![a, b, c, d, e] });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Outcome of the 2-connectivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoConnectivity {
    TwoConnected,
    /// Smallest-index articulation vertex.
    CutVertex(usize),
    /// A vertex not reachable from vertex 0.
    Disconnected(usize),
    /// Fewer than three vertices.
    TooSmall,
}

impl TwoConnectivity {
    pub fn is_two_connected(&self) -> bool {
        matches!(self, TwoConnectivity::TwoConnected)
    }
}

/// Connected, at least 3 vertices, no articulation vertex.
pub fn is_two_connected(g: &Graph) -> TwoConnectivity {
    let n = g.n();
    if n < 3 {
        return TwoConnectivity::TooSmall;
    }
    const UNSEEN: u32 = u32::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut is_cut = vec![false; n];
    let mut time = 0u32;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        let nbrs = g.raw_neighbors(v);
        if *idx < nbrs.len() {
            let w = nbrs[*idx] as usize;
            *idx += 1;
            if disc[w] == UNSEEN {
                time += 1;
                disc[w] = time;
                low[w] = time;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if let Some(u) = (0..n).find(|&u| disc[u] == UNSEEN) {
        return TwoConnectivity::Disconnected(u);
    }
    is_cut[0] = root_children > 1;
    match (0..n).find(|&v| is_cut[v]) {
        Some(v) => TwoConnectivity::CutVertex(v),
        None => TwoConnectivity::TwoConnected,
    }
}

/// Number of connected components of `g` after deleting `removed`.
pub fn components_without(g: &Graph, removed: &[usize]) -> usize {
    let n = g.n();
    let mut gone = vec![false; n];
    removed.iter().for_each(|&v| gone[v] = true);
    let mut seen = gone.clone();
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Induced star `K_{1,s}` given by its center and pairwise non-adjacent arms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedStar {
    pub center: usize,
    pub arms: Vec<usize>,
}

impl InducedStar {
    pub fn size(&self) -> usize {
        self.arms.len()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.arms.iter().enumerate().all(|(i, &a)| {
            a != self.center
                && g.has_edge(self.center, a)
                && self.arms[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b))
        })
    }
}

/// Induced-star classification of a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarFreeLevel {
    /// Smallest `s ≤ 5` such that the graph is `K_{1,s}`-free; `None` when
    /// it contains an induced `K_{1,5}`.
    pub level: Option<usize>,
    /// A largest induced star (size capped at 5), if the graph has an edge.
    pub witness: Option<InducedStar>,
}

impl StarFreeLevel {
    pub fn is_free_of(&self, s: usize) -> bool {
        self.level.is_some_and(|l| l <= s)
    }

    pub fn is_claw_free(&self) -> bool {
        self.is_free_of(3)
    }

    pub fn is_k14_free(&self) -> bool {
        self.is_free_of(4)
    }
}

impl fmt::Display for StarFreeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            Some(s) => write!(f, "K1,{s}-free"),
            None => write!(f, "contains K1,5"),
        }
    }
}

/// Largest induced star at clique vertex `c`, capped at 5. In a split graph
/// at most one arm is a clique vertex, so the search only has to choose that
/// vertex (or none).
fn best_star_at(g: &Graph, p: &SplitPartition, c: usize, hits: &mut [u32], touched: &mut Vec<usize>) -> (usize, Option<usize>) {
    let arms: Vec<usize> = p.n_i(g, c).collect();
    if arms.len() >= 5 {
        return (5, None);
    }
    let others = p.k() - 1;
    if others == 0 {
        return (arms.len(), None);
    }
    for &a in &arms {
        for w in g.neighbors(a) {
            if w != c {
                if hits[w] == 0 {
                    touched.push(w);
                }
                hits[w] += 1;
            }
        }
    }
    let min_hits = if touched.len() < others {
        0
    } else {
        touched.iter().map(|&w| hits[w] as usize).min().unwrap_or(0)
    };
    for &w in touched.iter() {
        hits[w] = 0;
    }
    touched.clear();
    let with_k_arm = 1 + arms.len() - min_hits;
    if with_k_arm > arms.len() {
        (with_k_arm.min(5), Some(min_hits))
    } else {
        (arms.len(), None)
    }
}

fn star_witness(g: &Graph, p: &SplitPartition, c: usize, k_arm_hits: Option<usize>) -> InducedStar {
    let i_arms: Vec<usize> = p.n_i(g, c).collect();
    match k_arm_hits {
        None => InducedStar { center: c, arms: i_arms.into_iter().take(5).collect() },
        Some(h) => {
            let w = p
                .clique()
                .iter()
                .copied()
                .find(|&w| w != c && i_arms.iter().filter(|&&a| g.has_edge(a, w)).count() == h)
                .expect("clique arm exists");
            let mut arms: Vec<usize> = i_arms.into_iter().filter(|&a| !g.has_edge(a, w)).collect();
            arms.push(w);
            arms.sort_unstable();
            arms.truncate(5);
            InducedStar { center: c, arms }
        }
    }
}

/// Largest induced star (capped at 5) and the resulting `K_{1,s}`-freeness.
pub fn star_free_level(g: &Graph, p: &SplitPartition) -> StarFreeLevel {
    let mut hits = vec![0u32; g.n()];
    let mut touched = Vec::new();
    let mut best: Option<(usize, usize, Option<usize>)> = None;
    for &c in p.clique() {
        let (size, k_arm) = best_star_at(g, p, c, &mut hits, &mut touched);
        if best.is_none_or(|(s, _, _)| size > s) {
            best = Some((size, c, k_arm));
            if size == 5 {
                break;
            }
        }
    }
    match best {
        Some((size, c, k_arm)) if size >= 1 => {
            let witness = star_witness(g, p, c, k_arm);
            debug_assert_eq!(witness.size(), size);
            StarFreeLevel { level: (size < 5).then_some(size + 1), witness: Some(witness) }
        }
        _ => StarFreeLevel { level: Some(1), witness: None },
    }
}

/// Proof that a graph has no Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoCycleCertificate {
    NotTwoConnected(TwoConnectivity),
    ShortCycle(ShortCycleWitness),
    /// Exhaustive search by the oracle visited this many nodes.
    ExhaustiveSearch { nodes: u64 },
}

impl NoCycleCertificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::TooSmall) => g.n() < 3,
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::Disconnected(_)) => {
                components_without(g, &[]) > 1
            }
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::CutVertex(v)) => {
                *v < g.n() && components_without(g, &[*v]) > 1
            }
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::TwoConnected) => false,
            NoCycleCertificate::ShortCycle(w) => w.verify(g),
            NoCycleCertificate::ExhaustiveSearch { .. } => true,
        }
    }
}

impl fmt::Display for NoCycleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::CutVertex(v)) => write!(f, "cut-vertex {v}"),
            NoCycleCertificate::NotTwoConnected(TwoConnectivity::Disconnected(v)) => {
                write!(f, "disconnected {v}")
            }
            NoCycleCertificate::NotTwoConnected(_) => write!(f, "too-small"),
            NoCycleCertificate::ShortCycle(w) => {
                write!(f, "short-cycle ")?;
                for (i, v) in w.cycle.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, " excluded {}", w.excluded)
            }
            NoCycleCertificate::ExhaustiveSearch { nodes } => write!(f, "exhaustive {nodes}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_from_edges;

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
    fn c4_is_not_split() {
        let w = recognize_split(&Graph::cycle(4)).unwrap_err();
        assert_eq!(w.kind, "C4");
        let mut vs = w.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn c5_and_2k2_witnesses() {
        assert_eq!(recognize_split(&Graph::cycle(5)).unwrap_err().kind, "C5");
        let two = graph_from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(recognize_split(&two).unwrap_err().kind, "2K2");
    }

    #[test]
    fn complete_graph_partition() {
        let p = recognize_split(&Graph::complete(4)).unwrap();
        assert_eq!(p.clique(), &[0, 1, 2, 3]);
        assert!(p.independent().is_empty());
        assert_eq!(p.delta_i(), 0);
    }

    #[test]
    fn star_partition() {
        // All clique/independent partitions of K_{1,3} have |K| <= 2.
        let g = Graph::star(3);
        let p = recognize_split(&g).unwrap();
        assert_eq!(p.clique(), &[0, 1]);
        assert_eq!(p.independent(), &[2, 3]);
        assert_eq!(p.d_i(0), 2);
        assert_eq!(p.d_i(1), 0);
        assert_eq!(p.delta_i(), 2);
    }

    #[test]
    fn upgrade_examples() {
        let e = Graph::path(2);
        let p = SplitPartition::from_clique(&e, &[0]).unwrap();
        assert_eq!(upgrade_to_maximum_clique(&e, p).unwrap().clique(), &[0, 1]);

        let s = Graph::star(3);
        let p = SplitPartition::from_clique(&s, &[0]).unwrap();
        let up = upgrade_to_maximum_clique(&s, p).unwrap();
        assert_eq!(up.clique(), &[0, 1]);

        let k4 = Graph::complete(4);
        let p = SplitPartition::from_clique(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(upgrade_to_maximum_clique(&k4, p.clone()).unwrap(), p);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(matches!(
            SplitPartition::from_clique(&Graph::path(3), &[0, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            SplitPartition::from_clique(&Graph::path(3), &[0]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn two_connectivity() {
        assert_eq!(is_two_connected(&Graph::cycle(4)), TwoConnectivity::TwoConnected);
        assert_eq!(is_two_connected(&Graph::path(3)), TwoConnectivity::CutVertex(1));
        let two = graph_from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_two_connected(&two), TwoConnectivity::Disconnected(2));
        assert_eq!(is_two_connected(&Graph::complete(2)), TwoConnectivity::TooSmall);
        // Bowtie: two triangles sharing vertex 0.
        let bow = graph_from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(is_two_connected(&bow), TwoConnectivity::CutVertex(0));
        let bow2 = graph_from_edges(5, &[(2, 1), (1, 0), (0, 2), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(is_two_connected(&bow2), TwoConnectivity::CutVertex(2));
    }

    #[test]
    fn star_levels() {
        let k4 = Graph::complete(4);
        let l = star_free_level(&k4, &recognize_split(&k4).unwrap());
        assert_eq!(l.level, Some(2));
        assert!(l.is_claw_free());

        let s = Graph::star(3);
        let l = star_free_level(&s, &recognize_split(&s).unwrap());
        assert_eq!(l.level, Some(4));
        let w = l.witness.unwrap();
        assert_eq!(w.center, 0);
        assert_eq!(w.arms, vec![1, 2, 3]);

        let g = split(3, &[&[0], &[0], &[0]]);
        let p = recognize_split(&g).unwrap();
        assert_eq!(p.clique(), &[0, 1, 2]);
        let l = star_free_level(&g, &p);
        assert!(!l.is_k14_free());
        let w = l.witness.unwrap();
        assert!(w.is_valid_in(&g));
        assert_eq!((w.center, w.arms.clone()), (0, vec![1, 3, 4, 5]));
        assert!(g.find_induced_star(4).is_some());
    }

    #[test]
    fn certificates_verify() {
        let p3 = Graph::path(3);
        assert!(NoCycleCertificate::NotTwoConnected(TwoConnectivity::CutVertex(1)).verify(&p3));
        assert!(!NoCycleCertificate::NotTwoConnected(TwoConnectivity::CutVertex(0)).verify(&p3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn brute_split(g: &Graph) -> bool {
            let n = g.n();
            (0u32..(1 << n)).any(|mask| {
                let ks: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let is: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
                ks.iter().enumerate().all(|(i, &a)| ks[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                    && is.iter().enumerate().all(|(i, &a)| is[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
            })
        }

        fn clique_number(g: &Graph) -> usize {
            let n = g.n();
            (0u32..(1 << n))
                .filter(|&mask| {
                    let ks: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    ks.iter().enumerate().all(|(i, &a)| ks[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                })
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap_or(0)
        }

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

        fn arb_split(max_k: usize, max_i: usize) -> impl Strategy<Value = Graph> {
            (1..=max_k, 0..=max_i).prop_flat_map(|(k, i)| {
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), k), i).prop_map(move |rows| {
                    let nb: Vec<Vec<usize>> =
                        rows.iter().map(|r| (0..k).filter(|&a| r[a]).collect()).collect();
                    let refs: Vec<&[usize]> = nb.iter().map(|v| v.as_slice()).collect();
                    split(k, &refs)
                })
            })
        }

        proptest! {
            #[test]
            fn recognition_matches_brute_force(g in arb_graph(9)) {
                match recognize_split(&g) {
                    Ok(p) => {
                        prop_assert!(brute_split(&g));
                        prop_assert_eq!(p.k(), clique_number(&g));
                    }
                    Err(w) => {
                        prop_assert!(!brute_split(&g));
                        let (h, _) = g.induced_subgraph(&w.vertices).unwrap();
                        let expect = match w.kind {
                            "C4" => Graph::cycle(4),
                            "C5" => Graph::cycle(5),
                            _ => graph_from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
                        };
                        prop_assert_eq!(h, expect);
                    }
                }
            }

            #[test]
            fn partition_is_maximum_on_split_inputs(g in arb_split(7, 5)) {
                let p = recognize_split(&g).unwrap();
                prop_assert_eq!(p.k(), clique_number(&g));
                let recomputed = SplitPartition::from_clique(&g, p.clique()).unwrap();
                prop_assert_eq!(&recomputed, &p);
            }

            #[test]
            fn star_level_matches_generic_search(g in arb_split(6, 6)) {
                let p = recognize_split(&g).unwrap();
                let lvl = star_free_level(&g, &p);
                for s in 1..=5 {
                    prop_assert_eq!(lvl.is_free_of(s), g.find_induced_star(s).is_none(), "s = {}", s);
                }
                if let Some(w) = &lvl.witness {
                    prop_assert!(w.is_valid_in(&g));
                }
                if lvl.is_k14_free() {
                    prop_assert!(p.delta_i() <= 3);
                }
            }

            #[test]
            fn articulation_matches_removal(g in arb_graph(8)) {
                match is_two_connected(&g) {
                    TwoConnectivity::TwoConnected => {
                        prop_assert!(g.n() >= 3);
                        prop_assert_eq!(components_without(&g, &[]), 1);
                        for v in 0..g.n() {
                            prop_assert_eq!(components_without(&g, &[v]), 1);
                        }
                    }
                    TwoConnectivity::CutVertex(v) => {
                        prop_assert_eq!(components_without(&g, &[]), 1);
                        prop_assert!(components_without(&g, &[v]) > 1);
                        for u in 0..v {
                            prop_assert_eq!(components_without(&g, &[u]), 1);
                        }
                    }
                    TwoConnectivity::Disconnected(_) => prop_assert!(components_without(&g, &[]) > 1),
                    TwoConnectivity::TooSmall => prop_assert!(g.n() < 3),
                }
            }
        }
    }
}
