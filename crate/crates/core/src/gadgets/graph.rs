//! Simple undirected graphs and the small brute-force set oracles used to
//! verify gadget claims.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Largest vertex count the brute-force graph oracles accept.
pub const GRAPH_ORACLE_LIMIT: usize = 20;

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>, // normalized a < b
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::Range { index: a, m: n });
            }
            if b >= n {
                return Err(Error::Range { index: b, m: n });
            }
            if a == b {
                return Err(Error::Cycle { candidate: a });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.insert((a, b));
            }
        }
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for a in 0..n {
            let b = (a + 1) % n;
            edges.insert((a.min(b), a.max(b)));
        }
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (0..n.saturating_sub(1)).map(|a| (a, a + 1)).collect() }
    }

    /// The triangular prism: two triangles joined by a perfect matching,
    /// 3-regular on 6 vertices.
    pub fn prism() -> Self {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u == v || self.has_edge(u, v)).collect()
    }

    /// The complement graph; turns clique questions into independent-set
    /// questions.
    pub fn complement(&self) -> Self {
        let mut edges = BTreeSet::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.edges.contains(&(a, b)) {
                    edges.insert((a, b));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    fn check_size(&self) -> Result<()> {
        if self.n > GRAPH_ORACLE_LIMIT {
            return Err(Error::Limit {
                what: "graph oracle vertex count",
                cap: GRAPH_ORACLE_LIMIT as u64,
            });
        }
        Ok(())
    }

    fn subset_covers(&self, mask: u32) -> bool {
        self.edges.iter().all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0)
    }

    fn subset_independent(&self, mask: u32) -> bool {
        self.edges.iter().all(|&(a, b)| mask & (1 << a) == 0 || mask & (1 << b) == 0)
    }

    fn subset_dominates(&self, mask: u32) -> bool {
        (0..self.n).all(|v| {
            mask & (1 << v) != 0
                || self.closed_neighborhood(v).iter().any(|&u| mask & (1 << u) != 0)
        })
    }

    /// Exact minimum vertex-cover size.
    pub fn min_vertex_cover(&self) -> Result<usize> {
        self.check_size()?;
        Ok((0u32..1 << self.n)
            .filter(|&mask| self.subset_covers(mask))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap_or(0))
    }

    /// Exact maximum independent-set size.
    pub fn max_independent_set(&self) -> Result<usize> {
        self.check_size()?;
        Ok((0u32..1 << self.n)
            .filter(|&mask| self.subset_independent(mask))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Exact minimum dominating-set size.
    pub fn min_dominating_set(&self) -> Result<usize> {
        self.check_size()?;
        Ok((0u32..1 << self.n)
            .filter(|&mask| self.subset_dominates(mask))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap_or(0))
    }
}

/// Exact-cover-by-3-sets: can `q = universe / 3` pairwise disjoint triples
/// from `triples` cover `0..universe`?
pub fn x3c_exists(universe: usize, triples: &[[usize; 3]]) -> Result<bool> {
    if universe % 3 != 0 {
        return Err(Error::Parse { context: format!("universe size {universe} not divisible by 3") });
    }
    if universe > GRAPH_ORACLE_LIMIT {
        return Err(Error::Limit { what: "x3c universe", cap: GRAPH_ORACLE_LIMIT as u64 });
    }
    for t in triples {
        for &x in t {
            if x >= universe {
                return Err(Error::Range { index: x, m: universe });
            }
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::DuplicateCandidate { index: t[0] });
        }
    }
    fn rec(universe: usize, triples: &[[usize; 3]], covered: u32) -> bool {
        let first_uncovered = (0..universe).find(|&x| covered & (1 << x) == 0);
        let Some(x) = first_uncovered else { return true };
        triples.iter().any(|t| {
            t.contains(&x)
                && t.iter().all(|&y| covered & (1 << y) == 0)
                && rec(universe, triples, covered | t.iter().map(|&y| 1 << y).sum::<u32>())
        })
    }
    Ok(rec(universe, triples, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_cover_and_independence() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.min_vertex_cover().unwrap(), 2);
        assert_eq!(k3.max_independent_set().unwrap(), 1);
    }

    #[test]
    fn path_domination() {
        let p3 = Graph::path(3);
        assert_eq!(p3.min_dominating_set().unwrap(), 1);
    }

    #[test]
    fn x3c_single_triple() {
        assert!(x3c_exists(3, &[[0, 1, 2]]).unwrap());
        assert!(!x3c_exists(6, &[[0, 1, 2], [2, 3, 4]]).unwrap());
        assert!(x3c_exists(6, &[[0, 1, 2], [1, 2, 3], [3, 4, 5]]).unwrap());
    }

    #[test]
    fn complement_swaps_cover_and_clique() {
        let c4 = Graph::cycle(4);
        let comp = c4.complement();
        // C4 complement is a perfect matching: independent set of size 2
        assert_eq!(comp.max_independent_set().unwrap(), 2);
        assert_eq!(c4.max_independent_set().unwrap(), 2);
        assert!(comp.has_edge(0, 2) && comp.has_edge(1, 3));
        assert_eq!(comp.edge_count(), 2);
    }

    #[test]
    fn regularity_detection() {
        assert_eq!(Graph::complete(4).regular_degree(), Some(3));
        assert_eq!(Graph::cycle(5).regular_degree(), Some(2));
        assert_eq!(Graph::prism().regular_degree(), Some(3));
        assert_eq!(Graph::path(3).regular_degree(), None);
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 5)]).is_err());
    }

    #[test]
    fn oracle_size_cap() {
        let big = Graph::complete(GRAPH_ORACLE_LIMIT + 1);
        assert!(matches!(big.min_vertex_cover(), Err(Error::Limit { .. })));
    }
}
