//! Ordered graphs on vertex set `0..n` where the vertex order is the integer
//! order. Adjacency is kept as one bit row per vertex, so neighborhood
//! algebra (intersection, union, counting) is word-parallel.

use std::fmt;

use thiserror::Error;

/// Vertices are their own position in the order.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) must have one endpoint in each class")]
    NotBipartite(Vertex, Vertex),
}

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// Set of vertices drawn from a fixed universe `0..universe`, stored as a
/// bit vector. Iteration is always in ascending (order) position.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn singleton(universe: usize, v: Vertex) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    /// Vertices strictly greater than `v` (everything when `v` is None).
    pub fn above(universe: usize, v: Vertex) -> Self {
        let mut s = Self::full(universe);
        for u in 0..=v.min(universe.saturating_sub(1)) {
            if u <= v {
                s.remove(u);
            }
        }
        s
    }

    pub fn from_indices(universe: usize, indices: &[Vertex]) -> Self {
        let mut s = Self::empty(universe);
        for &v in indices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.blocks[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.universe {
            self.blocks[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.blocks[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn first(&self) -> Option<Vertex> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(i * WORD + b.trailing_zeros() as usize);
            }
        }
        None
    }

    fn check_universe(&self, other: &VertexSet) {
        debug_assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let mut out = self.clone();
        out.subtract(other);
        out
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = Self::empty(self.universe);
        for (o, &b) in out.blocks.iter_mut().zip(&self.blocks) {
            *o = !b;
        }
        out.trim_tail();
        out
    }

    fn trim_tail(&mut self) {
        let spare = self.blocks.len() * WORD - self.universe;
        if spare > 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= u64::MAX >> spare;
            }
        }
    }

    /// |self ∩ other| without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodMode {
    Open,
    Closed,
}

/// Loop-free undirected graph whose vertices carry the order `0 < 1 < ...`.
/// Supports up to 2^16 vertices; rows are bit sets over the vertex range.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl OrderedGraph {
    pub const MAX_VERTICES: usize = 1 << 16;

    pub fn new(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES, "graph too large ({n} vertices)");
        OrderedGraph {
            n,
            rows: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    /// Adjacency row of `v` as a set.
    pub fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement graph on the same ordered vertex set (no self-loops).
    pub fn complement(&self) -> OrderedGraph {
        let mut g = OrderedGraph::new(self.n);
        for v in 0..self.n {
            let mut row = self.rows[v].complement();
            row.remove(v);
            g.rows[v] = row;
        }
        g
    }

    /// Induced ordered subgraph on `keep`, relabelled to `0..keep.len()` in
    /// order. Second component maps new labels back to originals.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (OrderedGraph, Vec<Vertex>) {
        let back: Vec<Vertex> = keep.iter().collect();
        let mut g = OrderedGraph::new(back.len());
        for (i, &u) in back.iter().enumerate() {
            for (j, &v) in back.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, back)
    }

    /// Union of neighborhoods of `set`, open (neighbors only) or closed
    /// (including the set itself).
    pub fn neighborhood(&self, set: &VertexSet, mode: NeighborhoodMode) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in set.iter() {
            out.union_with(&self.rows[v]);
        }
        match mode {
            NeighborhoodMode::Closed => out.union_with(set),
            NeighborhoodMode::Open => {}
        }
        out
    }

    /// Neighbors of `v` strictly after it in the order.
    pub fn forward_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut out = self.rows[v].clone();
        let mask = VertexSet::above(self.n, v);
        out.intersect_with(&mask);
        out
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Bipartite graph with ordered classes A (indices `0..na`) and B
/// (`0..nb`); every edge joins an A-vertex to a B-vertex. Rows are kept for
/// both sides so degree queries are symmetric.
#[derive(Clone)]
pub struct BipartiteOrderedGraph {
    na: usize,
    nb: usize,
    a_rows: Vec<VertexSet>,
    b_rows: Vec<VertexSet>,
}

impl BipartiteOrderedGraph {
    pub fn new(na: usize, nb: usize) -> Self {
        BipartiteOrderedGraph {
            na,
            nb,
            a_rows: vec![VertexSet::empty(nb); na],
            b_rows: vec![VertexSet::empty(na); nb],
        }
    }

    /// Splits an ordered graph: class A is `0..na_split`, class B the rest.
    /// Edges inside a class are rejected.
    pub fn from_split(g: &OrderedGraph, na_split: usize) -> Result<Self, GraphError> {
        if na_split > g.n() {
            return Err(GraphError::VertexOutOfRange(na_split, g.n()));
        }
        let mut h = Self::new(na_split, g.n() - na_split);
        for (u, v) in g.edges() {
            if v < na_split || u >= na_split {
                return Err(GraphError::NotBipartite(u, v));
            }
            h.add_edge(u, v - na_split);
        }
        Ok(h)
    }

    pub fn na(&self) -> usize {
        self.na
    }

    pub fn nb(&self) -> usize {
        self.nb
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        assert!(a < self.na && b < self.nb);
        self.a_rows[a].insert(b);
        self.b_rows[b].insert(a);
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.na && self.a_rows[a].contains(b)
    }

    /// B-side neighbors of A-vertex `a`.
    pub fn a_row(&self, a: Vertex) -> &VertexSet {
        &self.a_rows[a]
    }

    /// A-side neighbors of B-vertex `b`.
    pub fn b_row(&self, b: Vertex) -> &VertexSet {
        &self.b_rows[b]
    }

    pub fn a_degree(&self, a: Vertex) -> usize {
        self.a_rows[a].len()
    }

    pub fn b_degree(&self, b: Vertex) -> usize {
        self.b_rows[b].len()
    }

    pub fn edge_count(&self) -> usize {
        self.a_rows.iter().map(|r| r.len()).sum()
    }
}

impl fmt::Debug for BipartiteOrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BipartiteOrderedGraph(na={}, nb={}, m={})",
            self.na,
            self.nb,
            self.edge_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_basic_ops() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(69);
        s.insert(64);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 69]);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(10, &[1, 3, 5, 7]);
        let b = VertexSet::from_indices(10, &[3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 7]);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset(&a));
        let c = a.complement();
        assert_eq!(c.len(), 6);
        assert!(c.contains(9));
        assert!(!c.contains(3));
    }

    #[test]
    fn set_above() {
        let s = VertexSet::above(6, 2);
        assert_eq!(s.to_vec(), vec![3, 4, 5]);
    }

    #[test]
    fn complement_is_involution() {
        let g = OrderedGraph::from_edges(5, &[(0, 1), (1, 4), (2, 3)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        // Complement of an edge is a non-edge and vice versa.
        let c = g.complement();
        assert!(!c.has_edge(0, 1));
        assert!(c.has_edge(0, 2));
        for v in 0..5 {
            assert!(!c.has_edge(v, v));
        }
    }

    #[test]
    fn induced_subgraph_keeps_order_and_maps_back() {
        let g = OrderedGraph::from_edges(6, &[(0, 2), (2, 4), (4, 5), (1, 3)]).unwrap();
        let keep = VertexSet::from_indices(6, &[0, 2, 4, 5]);
        let (h, back) = g.induced_subgraph(&keep);
        assert_eq!(back, vec![0, 2, 4, 5]);
        assert!(h.has_edge(0, 1)); // 0-2
        assert!(h.has_edge(1, 2)); // 2-4
        assert!(h.has_edge(2, 3)); // 4-5
        assert!(!h.has_edge(0, 2));
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn neighborhoods() {
        let g = OrderedGraph::from_edges(6, &[(0, 3), (1, 3), (3, 5)]).unwrap();
        let s = VertexSet::from_indices(6, &[0, 1]);
        assert_eq!(g.neighborhood(&s, NeighborhoodMode::Open).to_vec(), vec![3]);
        assert_eq!(
            g.neighborhood(&s, NeighborhoodMode::Closed).to_vec(),
            vec![0, 1, 3]
        );
        assert_eq!(g.forward_neighborhood(3).to_vec(), vec![5]);
        assert_eq!(g.forward_neighborhood(0).to_vec(), vec![3]);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn bipartite_split() {
        let g = OrderedGraph::from_edges(5, &[(0, 3), (1, 4), (2, 3)]).unwrap();
        let h = BipartiteOrderedGraph::from_split(&g, 3).unwrap();
        assert_eq!(h.na(), 3);
        assert_eq!(h.nb(), 2);
        assert!(h.has_edge(0, 0));
        assert!(h.has_edge(1, 1));
        assert!(h.has_edge(2, 0));
        assert_eq!(h.b_degree(0), 2);

        let bad = OrderedGraph::from_edges(4, &[(0, 1), (0, 3)]).unwrap();
        assert!(BipartiteOrderedGraph::from_split(&bad, 2).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = OrderedGraph::new(3);
        assert_eq!(g.try_add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            g.try_add_edge(0, 3),
            Err(GraphError::VertexOutOfRange(3, 3))
        );
    }
}
