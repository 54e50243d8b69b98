//! From Hamiltonian cycle on bipartite graphs of maximum degree 3 to
//! Hamiltonian cycle on `K_{1,5}`-free split graphs.
//!
//! `g` with parts `A`, `B` maps to `h1 = g + clique(A)` and
//! `h2 = g + clique(B)`; `g` is Hamiltonian iff both are. Planarity of the
//! source is irrelevant to the map and is not checked.

use crate::error::{Error, Result};
use crate::graph::{validate_ham_cycle, Graph, HamCycle};
use crate::split::{star_free_level, InducedStar, SplitPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub graph: Graph,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

impl BipartiteInstance {
    /// `part_a` is sorted and deduplicated; `B` is the complement.
    pub fn new(graph: Graph, part_a: &[usize]) -> Result<Self> {
        let n = graph.n();
        let mut in_a = vec![false; n];
        for &v in part_a {
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            in_a[v] = true;
        }
        let part_a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
        let part_b: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
        let b = BipartiteInstance { graph, part_a, part_b };
        b.validate()?;
        Ok(b)
    }

    /// Two-colours each component, its smallest vertex going to `A`.
    pub fn from_two_coloring(graph: Graph) -> Result<Self> {
        let n = graph.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in graph.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!side[x].unwrap());
                            stack.push(y);
                        }
                        Some(c) if c == side[x].unwrap() => return Err(Error::NotBipartite(x.min(y), x.max(y))),
                        _ => {}
                    }
                }
            }
        }
        let a: Vec<usize> = (0..n).filter(|&v| side[v] == Some(true)).collect();
        BipartiteInstance::new(graph, &a)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
            return Err(Error::DegreeTooHigh { vertex: v, degree: g.degree(v) });
        }
        let mut in_a = vec![false; g.n()];
        self.part_a.iter().for_each(|&v| in_a[v] = true);
        if let Some((u, v)) = g.edges().find(|&(u, v)| in_a[u] == in_a[v]) {
            return Err(Error::NotBipartite(u, v));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub h1: Graph,
    pub h2: Graph,
    /// Clique `A` in `h1`.
    pub p1: SplitPartition,
    /// Clique `B` in `h2`.
    pub p2: SplitPartition,
}

fn clique_on(part: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    part.iter().enumerate().flat_map(move |(i, &u)| part[i + 1..].iter().map(move |&v| (u, v)))
}

pub fn reduce(b: &BipartiteInstance) -> Result<ReductionOutput> {
    b.validate()?;
    let h1 = b.graph.with_extra_edges(clique_on(&b.part_a))?;
    let h2 = b.graph.with_extra_edges(clique_on(&b.part_b))?;
    let p1 = SplitPartition::from_clique(&h1, &b.part_a)?;
    let p2 = SplitPartition::from_clique(&h2, &b.part_b)?;
    for (h, p) in [(&h1, &p1), (&h2, &p2)] {
        if let Err(star) = verify_k15_free(h, p) {
            return Err(Error::PremiseViolated(format!("reduction produced {star:?}")));
        }
    }
    Ok(ReductionOutput { h1, h2, p1, p2 })
}

/// `Ok` when `g` has no induced `K_{1,5}`, otherwise a witness.
pub fn verify_k15_free(g: &Graph, p: &SplitPartition) -> std::result::Result<(), InducedStar> {
    let level = star_free_level(g, p);
    if level.is_free_of(5) {
        Ok(())
    } else {
        Err(level.witness.expect("a star of size five or more comes with a witness"))
    }
}

/// A Hamiltonian cycle of `h1` read back on `g`. Valid inputs for both `h1`
/// and `h2` force `|A| = |B|`, and then `c1` cannot use an `A`–`A` edge.
pub fn map_solution_back(b: &BipartiteInstance, c1: &HamCycle, c2: &HamCycle) -> Result<HamCycle> {
    let out = reduce(b)?;
    if !validate_ham_cycle(&out.h1, c1) || !validate_ham_cycle(&out.h2, c2) {
        return Err(Error::PremiseViolated("certificates do not validate on h1/h2".into()));
    }
    let mut in_a = vec![false; b.graph.n()];
    b.part_a.iter().for_each(|&v| in_a[v] = true);
    let o = c1.order();
    for i in 0..o.len() {
        let (u, v) = (o[i], o[(i + 1) % o.len()]);
        if in_a[u] && in_a[v] {
            return Err(Error::UsesCliqueEdge(u.min(v), u.max(v)));
        }
    }
    debug_assert!(validate_ham_cycle(&b.graph, c1));
    Ok(c1.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_solve, OracleBudget};
    use crate::split::recognize_split;

    fn has_hc(g: &Graph) -> bool {
        oracle_solve(g, OracleBudget::nodes(10_000_000)).has_cycle().unwrap()
    }

    #[test]
    fn six_cycle() {
        let b = BipartiteInstance::new(Graph::cycle(6), &[0, 2, 4]).unwrap();
        let out = reduce(&b).unwrap();
        assert_eq!(out.h1.m(), 9);
        assert!(out.h1.has_edge(0, 2) && out.h1.has_edge(2, 4) && out.h1.has_edge(0, 4));
        assert!(has_hc(&b.graph) && has_hc(&out.h1) && has_hc(&out.h2));
        let c = HamCycle(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(map_solution_back(&b, &c, &c).unwrap(), c);
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let b = BipartiteInstance::new(g.clone(), &[0]).unwrap();
        let out = reduce(&b).unwrap();
        assert_eq!(out.h1, g);
        assert_eq!(out.h2, g);
        assert!(!has_hc(&g) && !has_hc(&out.h1) && !has_hc(&out.h2));
    }

    #[test]
    fn claw_needs_both_graphs() {
        let b = BipartiteInstance::new(Graph::star(3), &[0]).unwrap();
        let out = reduce(&b).unwrap();
        assert_eq!(out.h2, Graph::complete(4));
        assert!(has_hc(&out.h2));
        assert!(!has_hc(&out.h1));
        assert!(!has_hc(&b.graph));
    }

    #[test]
    fn rejects_bad_sources() {
        let g = Graph::star(4);
        assert!(matches!(BipartiteInstance::new(g, &[0]), Err(Error::DegreeTooHigh { vertex: 0, degree: 4 })));
        assert!(matches!(BipartiteInstance::new(Graph::cycle(4), &[0, 1]), Err(Error::NotBipartite(0, 1))));
        assert!(matches!(BipartiteInstance::from_two_coloring(Graph::cycle(5)), Err(Error::NotBipartite(..))));
    }

    #[test]
    fn clique_edges_unreachable_with_both_certificates() {
        let b = BipartiteInstance::new(Graph::cycle(6), &[0, 2, 4]).unwrap();
        let out = reduce(&b).unwrap();
        let c2 = HamCycle(vec![0, 1, 2, 3, 4, 5]);
        let mut rest = vec![1, 2, 3, 4, 5];
        let mut checked = 0;
        permute(&mut rest, 0, &mut |perm| {
            let c1 = HamCycle([&[0][..], perm].concat());
            if validate_ham_cycle(&out.h1, &c1) {
                checked += 1;
                assert!(map_solution_back(&b, &c1, &c2).is_ok());
            }
        });
        assert!(checked > 0);
        let lopsided = BipartiteInstance::new(Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(), &[0, 2]).unwrap();
        let out = reduce(&lopsided).unwrap();
        let c1 = HamCycle(vec![0, 1, 2]);
        assert!(validate_ham_cycle(&out.h1, &c1));
        assert!(matches!(map_solution_back(&lopsided, &c1, &c1), Err(Error::PremiseViolated(_))));
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn star_witnesses() {
        assert!(verify_k15_free(&Graph::complete(4), &recognize_split(&Graph::complete(4)).unwrap()).is_ok());
        // clique {0,1}: 0 sees 2..=5, vertex 1 sees none of them
        let mut edges = vec![(0, 1)];
        edges.extend((2..6).map(|x| (0, x)));
        let g = Graph::from_edges(6, &edges).unwrap();
        let p = SplitPartition::from_clique(&g, &[0, 1]).unwrap();
        let star = verify_k15_free(&g, &p).unwrap_err();
        assert_eq!(star.center, 0);
        assert_eq!(star.size(), 5);
        assert!(star.is_valid_in(&g));
    }
}
