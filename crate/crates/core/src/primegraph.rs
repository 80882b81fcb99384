//! Gruenberg–Kegel prime graphs and their cocliques.

use std::fmt::Write as _;

use thiserror::Error;

use crate::orderset::OrderSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} is not a vertex of the graph")]
    UnknownVertex(u64),
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
}

/// An undirected loop-free graph on at most 64 labelled vertices.
///
/// Labels are primes for graphs built by [`PrimeGraph::from_spectrum`], but
/// [`PrimeGraph::from_edges`] accepts any distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    adjacency: Vec<u64>,
}

impl PrimeGraph {
    /// `p ~ q` iff `pq` belongs to the spectrum.
    pub fn from_spectrum(spectrum: &OrderSet) -> Self {
        let vertices = spectrum.pi();
        let n = vertices.len();
        let mut adjacency = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                let joined = vertices[i]
                    .checked_mul(vertices[j])
                    .is_some_and(|pq| spectrum.contains(pq));
                if joined {
                    adjacency[i] |= 1 << j;
                    adjacency[j] |= 1 << i;
                }
            }
        }
        Self {
            vertices,
            adjacency,
        }
    }

    /// Builds a graph from labels and edges; loops and unknown labels are rejected.
    pub fn from_edges(vertices: &[u64], edges: &[(u64, u64)]) -> Result<Self, GraphError> {
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > 64 {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut g = Self {
            adjacency: vec![0; vertices.len()],
            vertices,
        };
        for &(a, b) in edges {
            let i = g.index_of(a)?;
            let j = g.index_of(b)?;
            if i != j {
                g.adjacency[i] |= 1 << j;
                g.adjacency[j] |= 1 << i;
            }
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    fn index_of(&self, v: u64) -> Result<usize, GraphError> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| GraphError::UnknownVertex(v))
    }

    pub fn adjacent(&self, a: u64, b: u64) -> Result<bool, GraphError> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        Ok(self.adjacency[i] >> j & 1 == 1)
    }

    /// Edges with the smaller endpoint first, in lexicographic order.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacency[i] >> j & 1 == 1 {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| self.adjacency[i].count_ones() as usize == n - 1)
    }

    fn mask_of(&self, set: &[u64]) -> Result<u64, GraphError> {
        set.iter()
            .try_fold(0u64, |m, &v| Ok(m | 1 << self.index_of(v)?))
    }

    fn labels(&self, mut mask: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            out.push(self.vertices[i]);
            mask &= mask - 1;
        }
        out
    }

    pub fn is_coclique(&self, set: &[u64]) -> Result<bool, GraphError> {
        let mask = self.mask_of(set)?;
        Ok(self.mask_is_independent(mask))
    }

    fn mask_is_independent(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if self.adjacency[i] & mask != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    /// Every maximum-cardinality independent set, each sorted, the list sorted
    /// lexicographically.
    ///
    /// Branch and bound over vertex bitmasks. The bound is the size of a
    /// greedy clique cover of the candidates, since an independent set meets
    /// each clique at most once. Ties with the incumbent are explored so that
    /// all optima are collected.
    pub fn max_cocliques(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut search = Search {
            graph: self,
            best: 0,
            found: Vec::new(),
        };
        search.branch(0, 0, all);
        let mut out: Vec<Vec<u64>> = search.found.iter().map(|&m| self.labels(m)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn independence_number(&self) -> usize {
        self.max_cocliques().first().map_or(0, Vec::len)
    }

    /// Graphviz text: `graph gk { 2 -- 3; ... }`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph gk {\n");
        for (i, &v) in self.vertices.iter().enumerate() {
            if self.adjacency[i] == 0 {
                let _ = writeln!(s, "  {v};");
            }
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }

    fn clique_cover_size(&self, mut candidates: u64) -> usize {
        let mut cliques = 0;
        while candidates != 0 {
            let first = candidates.trailing_zeros() as usize;
            let mut clique = 1u64 << first;
            let mut common = self.adjacency[first] & candidates;
            while common != 0 {
                let v = common.trailing_zeros() as usize;
                clique |= 1 << v;
                common &= self.adjacency[v];
            }
            candidates &= !clique;
            cliques += 1;
        }
        cliques
    }
}

struct Search<'a> {
    graph: &'a PrimeGraph,
    best: usize,
    found: Vec<u64>,
}

impl Search<'_> {
    fn branch(&mut self, chosen: u64, size: usize, candidates: u64) {
        if candidates == 0 {
            if size > self.best {
                self.best = size;
                self.found.clear();
            }
            if size == self.best {
                self.found.push(chosen);
            }
            return;
        }
        if size + self.graph.clique_cover_size(candidates) < self.best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.branch(
            chosen | bit,
            size + 1,
            candidates & !bit & !self.graph.adjacency[v],
        );
        self.branch(chosen, size, candidates & !bit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_from_trivial_spectrum() {
        let g = PrimeGraph::from_spectrum(&OrderSet::trivial());
        assert!(g.vertices().is_empty());
        assert_eq!(g.max_cocliques(), vec![Vec::<u64>::new()]);
        assert_eq!(g.independence_number(), 0);
        assert_eq!(g.to_dot(), "graph gk {\n}\n");
    }

    #[test]
    fn complete_graph_has_singleton_cocliques() {
        let v = [2, 3, 5, 7];
        let edges: Vec<_> = v
            .iter()
            .flat_map(|&a| v.iter().map(move |&b| (a, b)))
            .collect();
        let g = PrimeGraph::from_edges(&v, &edges).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.max_cocliques(), vec![vec![2], vec![3], vec![5], vec![7]]);
    }

    #[test]
    fn path_graph() {
        // 2 - 3 - 5 - 7: optimum {2,5}, {2,7}, {3,7}
        let g = PrimeGraph::from_edges(&[2, 3, 5, 7], &[(2, 3), (3, 5), (5, 7)]).unwrap();
        assert_eq!(g.max_cocliques(), vec![vec![2, 5], vec![2, 7], vec![3, 7]]);
        assert!(g.is_coclique(&[2, 7]).unwrap());
        assert!(!g.is_coclique(&[3, 5]).unwrap());
        assert!(g.is_coclique(&[3]).unwrap());
    }

    #[test]
    fn unknown_vertices_rejected() {
        let g = PrimeGraph::from_edges(&[2, 3], &[]).unwrap();
        assert_eq!(g.is_coclique(&[2, 13]), Err(GraphError::UnknownVertex(13)));
        assert!(PrimeGraph::from_edges(&[2], &[(2, 5)]).is_err());
        let many: Vec<u64> = (0..65).collect();
        assert!(matches!(
            PrimeGraph::from_edges(&many, &[]),
            Err(GraphError::TooManyVertices(65))
        ));
    }

    #[test]
    fn dot_lists_edges_once() {
        let s = OrderSet::from_generators(&[6, 5]).unwrap();
        let g = PrimeGraph::from_spectrum(&s);
        assert_eq!(g.to_dot(), "graph gk {\n  5;\n  2 -- 3;\n}\n");
    }
}
