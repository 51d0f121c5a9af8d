//! Small ordered patterns and induced-embedding search.
//!
//! An embedding of a pattern must respect the vertex order of both sides,
//! carry pattern edges to edges and pattern non-edges to non-edges.

use thiserror::Error;

use crate::graph::{OrderedGraph, Vertex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern on {0} vertices exceeds the limit of {1}")]
    TooLarge(usize, usize),
    #[error("pattern must have at least one vertex")]
    Empty,
    #[error("bad pattern edge ({0}, {1})")]
    BadEdge(usize, usize),
    #[error("unknown pattern name `{0}` (expected mp:<k>, S, P, or file:<path>)")]
    UnknownName(String),
}

/// Ordered pattern on at most 12 vertices; rows are 16-bit adjacency masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPattern {
    p: usize,
    rows: Vec<u16>,
}

impl OrderedPattern {
    pub const MAX_VERTICES: usize = 12;

    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Self, PatternError> {
        if p == 0 {
            return Err(PatternError::Empty);
        }
        if p > Self::MAX_VERTICES {
            return Err(PatternError::TooLarge(p, Self::MAX_VERTICES));
        }
        let mut rows = vec![0u16; p];
        for &(i, j) in edges {
            if i >= p || j >= p || i == j {
                return Err(PatternError::BadEdge(i, j));
            }
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Ok(OrderedPattern { p, rows })
    }

    /// Path v_1 < v_2 < ... < v_k whose edges are exactly consecutive pairs.
    pub fn monotone_path(k: usize) -> Result<Self, PatternError> {
        let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Self::new(k, &edges)
    }

    /// Four vertices; the first is joined to the other three.
    pub fn star_s() -> Self {
        Self::new(4, &[(0, 1), (0, 2), (0, 3)]).expect("static pattern")
    }

    /// Four vertices with edges 1-4, 1-3, 2-3 (1-indexed).
    pub fn pattern_p() -> Self {
        Self::new(4, &[(0, 3), (0, 2), (1, 2)]).expect("static pattern")
    }

    pub fn size(&self) -> usize {
        self.p
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.p && j < self.p && self.rows[i] >> j & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.p {
            for j in i + 1..self.p {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// From an ordered graph small enough to serve as a pattern.
    pub fn from_graph(g: &OrderedGraph) -> Result<Self, PatternError> {
        Self::new(g.n(), &g.edges())
    }

    /// Parses `mp:<k>`, `S`, or `P`. File-backed patterns are handled by the
    /// CLI layer, which owns IO.
    pub fn parse_name(name: &str) -> Result<Self, PatternError> {
        if let Some(k) = name.strip_prefix("mp:") {
            let k: usize = k
                .parse()
                .map_err(|_| PatternError::UnknownName(name.to_string()))?;
            return Self::monotone_path(k);
        }
        match name {
            "S" => Ok(Self::star_s()),
            "P" => Ok(Self::pattern_p()),
            other => Err(PatternError::UnknownName(other.to_string())),
        }
    }
}

/// Host vertices of an induced embedding, one per pattern vertex, strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding(pub Vec<Vertex>);

impl Embedding {
    /// Checks the embedding definition literally against host and pattern.
    pub fn is_valid(&self, g: &OrderedGraph, pattern: &OrderedPattern) -> bool {
        let m = &self.0;
        if m.len() != pattern.size() {
            return false;
        }
        if m.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if !m.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if g.has_edge(m[i], m[j]) != pattern.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds the lexicographically smallest induced embedding of `pattern`, or
/// None. Backtracking over pattern positions in order; candidate sets for
/// every open position shrink as host vertices are committed.
pub fn find_induced(g: &OrderedGraph, pattern: &OrderedPattern) -> Option<Embedding> {
    let n = g.n();
    let p = pattern.size();
    if p > n {
        return None;
    }
    // Complement rows with the diagonal cleared, for non-edge constraints.
    let comp: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut c = g.row(v).complement();
            c.remove(v);
            c
        })
        .collect();
    let init: Vec<VertexSet> = (0..p).map(|_| VertexSet::full(n)).collect();
    let mut chosen = Vec::with_capacity(p);
    if descend(g, pattern, &comp, &init, &mut chosen, 0) {
        return Some(Embedding(chosen));
    }
    None
}

fn descend(
    g: &OrderedGraph,
    pattern: &OrderedPattern,
    comp: &[VertexSet],
    cands: &[VertexSet],
    chosen: &mut Vec<Vertex>,
    depth: usize,
) -> bool {
    let p = pattern.size();
    for w in cands[depth].clone().iter() {
        chosen.push(w);
        if depth + 1 == p {
            return true;
        }
        let above = VertexSet::above(g.n(), w);
        let mut next: Vec<VertexSet> = Vec::with_capacity(p);
        let mut feasible = true;
        for q in 0..p {
            if q <= depth {
                next.push(VertexSet::empty(0));
                continue;
            }
            let mut c = cands[q].clone();
            c.intersect_with(&above);
            if pattern.has_edge(depth, q) {
                c.intersect_with(g.row(w));
            } else {
                c.intersect_with(&comp[w]);
            }
            if c.is_empty() {
                feasible = false;
            }
            next.push(c);
        }
        if feasible && descend(g, pattern, comp, &next, chosen, depth + 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographically smallest induced monotone path of size `k`, by
/// depth-first extension: the next vertex must be a forward neighbor of the
/// path end and a non-neighbor of every earlier path vertex.
pub fn find_induced_monotone_path(g: &OrderedGraph, k: usize) -> Option<Embedding> {
    let n = g.n();
    if k == 0 || k > n {
        return None;
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..n {
        path.push(start);
        if k == 1 {
            return Some(Embedding(path));
        }
        let forbidden = VertexSet::empty(n);
        if extend_path(g, k, &mut path, &forbidden) {
            return Some(Embedding(path));
        }
        path.pop();
    }
    None
}

fn extend_path(g: &OrderedGraph, k: usize, path: &mut Vec<Vertex>, forbidden: &VertexSet) -> bool {
    let last = *path.last().expect("non-empty path");
    let mut cand = g.forward_neighborhood(last);
    cand.subtract(forbidden);
    for w in cand.iter() {
        path.push(w);
        if path.len() == k {
            return true;
        }
        let mut next_forbidden = forbidden.clone();
        next_forbidden.union_with(g.row(last));
        if extend_path(g, k, path, &next_forbidden) {
            return true;
        }
        path.pop();
    }
    false
}

/// True when neither the graph nor its complement contains an induced
/// monotone path of size `k`.
pub fn is_family_member(g: &OrderedGraph, k: usize) -> bool {
    find_induced_monotone_path(g, k).is_none()
        && find_induced_monotone_path(&g.complement(), k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_patterns_pinned() {
        let s = OrderedPattern::star_s();
        assert_eq!(s.size(), 4);
        assert_eq!(s.edges(), vec![(0, 1), (0, 2), (0, 3)]);

        let p = OrderedPattern::pattern_p();
        assert_eq!(p.size(), 4);
        assert_eq!(p.edges(), vec![(0, 2), (0, 3), (1, 2)]);

        let mp4 = OrderedPattern::monotone_path(4).unwrap();
        assert_eq!(mp4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn pattern_size_limit() {
        assert!(OrderedPattern::monotone_path(12).is_ok());
        assert_eq!(
            OrderedPattern::monotone_path(13),
            Err(PatternError::TooLarge(13, 12))
        );
        assert_eq!(OrderedPattern::new(0, &[]), Err(PatternError::Empty));
    }

    #[test]
    fn triangle_has_no_monotone_path_3() {
        let g = OrderedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let mp3 = OrderedPattern::monotone_path(3).unwrap();
        assert_eq!(find_induced(&g, &mp3), None);
        assert_eq!(find_induced_monotone_path(&g, 3), None);
    }

    #[test]
    fn path_graph_contains_itself() {
        let g = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mp4 = OrderedPattern::monotone_path(4).unwrap();
        let emb = find_induced(&g, &mp4).unwrap();
        assert_eq!(emb.0, vec![0, 1, 2, 3]);
        assert!(emb.is_valid(&g, &mp4));
        assert_eq!(find_induced_monotone_path(&g, 4).unwrap().0, vec![0, 1, 2, 3]);
    }

    #[test]
    fn lexicographically_smallest_embedding_wins() {
        // Two disjoint edges: (0,3) and (1,2). Smallest mp:2 embedding is [0,3]?
        // No: candidates scan position 0 ascending, and 0's only forward
        // neighbor is 3, so [0,3] precedes [1,2].
        let g = OrderedGraph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        let mp2 = OrderedPattern::monotone_path(2).unwrap();
        assert_eq!(find_induced(&g, &mp2).unwrap().0, vec![0, 3]);
        assert_eq!(find_induced_monotone_path(&g, 2).unwrap().0, vec![0, 3]);
    }

    #[test]
    fn single_vertex_path() {
        let g = OrderedGraph::new(3);
        assert_eq!(find_induced_monotone_path(&g, 1).unwrap().0, vec![0]);
        assert_eq!(find_induced_monotone_path(&g, 4), None);
    }

    #[test]
    fn family_membership_small() {
        // Edgeless on 2 vertices: no mp:3 in G or complement (too few vertices).
        let g = OrderedGraph::new(2);
        assert!(is_family_member(&g, 3));
        // A monotone path on 3 vertices is not in the family for k = 3.
        let path3 = OrderedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_family_member(&path3, 3));
        // Complete graph: complement is edgeless; G has no induced mp:3.
        let k4 = OrderedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(is_family_member(&k4, 3));
    }

    #[test]
    fn pattern_name_parsing() {
        assert_eq!(OrderedPattern::parse_name("mp:5").unwrap().size(), 5);
        assert_eq!(OrderedPattern::parse_name("S").unwrap(), OrderedPattern::star_s());
        assert_eq!(OrderedPattern::parse_name("P").unwrap(), OrderedPattern::pattern_p());
        assert!(OrderedPattern::parse_name("q").is_err());
        assert!(OrderedPattern::parse_name("mp:zero").is_err());
    }

    #[test]
    fn star_s_found_in_explicit_host() {
        // Host: vertex 1 adjacent to 3, 4, 5 which are mutually non-adjacent;
        // vertex 0 is noise adjacent to 2 only.
        let g = OrderedGraph::from_edges(6, &[(0, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let emb = find_induced(&g, &OrderedPattern::star_s()).unwrap();
        assert_eq!(emb.0, vec![1, 3, 4, 5]);
        assert!(emb.is_valid(&g, &OrderedPattern::star_s()));
    }
}
