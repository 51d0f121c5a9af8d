//! Brute-force reference computations. These deliberately share no traversal
//! logic with the fast paths they cross-check; they read the graph only
//! through `has_edge` / `n` and re-derive everything from definitions.
//!
//! Every oracle is guarded by a size budget so an accidental call on a large
//! input fails loudly instead of hanging.

use thiserror::Error;

use crate::graph::{OrderedGraph, Vertex, VertexSet};
use crate::patterns::OrderedPattern;

/// Hard ceilings on oracle input size. `ORL_BUDGET_OVERRIDE=<n>` raises every
/// ceiling to at least `n` for one-off experiments.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub closure: usize,
    pub pattern: usize,
    pub clique: usize,
    pub biclique: usize,
    pub expansion: usize,
}

impl OracleBudget {
    pub const DEFAULT: OracleBudget = OracleBudget {
        closure: 10,
        pattern: 14,
        clique: 40,
        biclique: 40,
        expansion: 24,
    };

    pub fn current() -> OracleBudget {
        let mut b = Self::DEFAULT;
        if let Ok(raw) = std::env::var("ORL_BUDGET_OVERRIDE") {
            if let Ok(lift) = raw.trim().parse::<usize>() {
                b.closure = b.closure.max(lift);
                b.pattern = b.pattern.max(lift);
                b.clique = b.clique.max(lift);
                b.biclique = b.biclique.max(lift);
                b.expansion = b.expansion.max(lift);
            }
        }
        b
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} oracle limited to {budget} vertices, got {n}")]
    OverBudget {
        what: &'static str,
        n: usize,
        budget: usize,
    },
}

fn check_budget(what: &'static str, n: usize, budget: usize) -> Result<(), OracleError> {
    if n > budget {
        return Err(OracleError::OverBudget { what, n, budget });
    }
    Ok(())
}

/// Ordered transitive closure by definition: an edge x < y is present iff
/// some subset of vertices, read in ascending order, forms a monotone path
/// from x to y. Enumerates all 2^n subsets.
pub fn brute_closure(g: &OrderedGraph) -> Result<OrderedGraph, OracleError> {
    let n = g.n();
    check_budget("closure", n, OracleBudget::current().closure)?;
    let mut out = OrderedGraph::new(n);
    for mask in 1u32..1 << n {
        if mask.count_ones() < 2 {
            continue;
        }
        let verts: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let consecutive_all_adjacent = verts.windows(2).all(|w| g.has_edge(w[0], w[1]));
        if consecutive_all_adjacent {
            out.add_edge(verts[0], *verts.last().expect("size >= 2"));
        }
    }
    Ok(out)
}

/// First (lexicographically smallest) induced embedding of `pattern` by
/// direct enumeration of all increasing tuples.
pub fn brute_pattern(
    g: &OrderedGraph,
    pattern: &OrderedPattern,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    let n = g.n();
    check_budget("pattern", n, OracleBudget::current().pattern)?;
    let p = pattern.size();
    if p > n {
        return Ok(None);
    }
    let mut tuple: Vec<Vertex> = (0..p).collect();
    loop {
        let mut ok = true;
        'pairs: for i in 0..p {
            for j in i + 1..p {
                if g.has_edge(tuple[i], tuple[j]) != pattern.has_edge(i, j) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            return Ok(Some(tuple));
        }
        // Next increasing p-tuple in lexicographic order.
        let mut i = p;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if tuple[i] != i + n - p {
                break;
            }
        }
        tuple[i] += 1;
        for j in i + 1..p {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomKind {
    Clique,
    Independent,
}

impl std::fmt::Display for HomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomKind::Clique => write!(f, "clique"),
            HomKind::Independent => write!(f, "independent"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomogeneousWitness {
    pub size: usize,
    pub kind: HomKind,
    pub vertices: VertexSet,
}

/// Exact maximum clique and independent set; returns the larger (ties go to
/// the clique). Branch and bound with a greedy coloring bound.
pub fn brute_max_homogeneous(g: &OrderedGraph) -> Result<HomogeneousWitness, OracleError> {
    let (clique, indep) = brute_clique_and_independent(g)?;
    Ok(if clique.size >= indep.size { clique } else { indep })
}

/// Exact maximum clique and maximum independent set, both reported. Callers
/// that combine sub-solutions (union of independents across a disjoint
/// family, say) need the weaker side too, not just the winner.
pub fn brute_clique_and_independent(
    g: &OrderedGraph,
) -> Result<(HomogeneousWitness, HomogeneousWitness), OracleError> {
    let n = g.n();
    check_budget("clique", n, OracleBudget::current().clique)?;
    assert!(n <= 64, "mask-based search limited to 64 vertices");
    let rows: Vec<u64> = (0..n)
        .map(|v| {
            let mut m = 0u64;
            for u in 0..n {
                if g.has_edge(v, u) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let comp: Vec<u64> = rows.iter().enumerate().map(|(v, r)| !r & full & !(1 << v)).collect();

    let (cs, cw) = max_clique_masks(&rows, full);
    let (is, iw) = max_clique_masks(&comp, full);
    let unpack = |size: usize, kind: HomKind, mask: u64| {
        let mut vertices = VertexSet::empty(n);
        for v in 0..n {
            if mask >> v & 1 == 1 {
                vertices.insert(v);
            }
        }
        HomogeneousWitness { size, kind, vertices }
    };
    Ok((unpack(cs, HomKind::Clique, cw), unpack(is, HomKind::Independent, iw)))
}

#[derive(Clone, Debug)]
pub struct BicliqueWitness {
    pub size: usize,
    pub a: VertexSet,
    pub b: VertexSet,
}

/// Largest balanced biclique: disjoint sets A, B with |A| = |B| and every
/// cross pair adjacent (edges inside A or B are not constrained). Branch and
/// bound assigning each vertex to A, B, or neither; pruned by the remaining
/// capacity of each side and by the half-sum of all still-usable vertices.
pub fn brute_balanced_biclique(g: &OrderedGraph) -> Result<BicliqueWitness, OracleError> {
    let n = g.n();
    check_budget("biclique", n, OracleBudget::current().biclique)?;
    assert!(n <= 64, "mask-based search limited to 64 vertices");
    let rows: Vec<u64> = (0..n)
        .map(|v| {
            let mut m = 0u64;
            for u in 0..n {
                if g.has_edge(v, u) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut best = (0usize, 0u64, 0u64);
    biclique_branch(&rows, 0, 0, full, full, &mut best);
    // Report exactly `size` vertices per side, lowest indices first.
    let trim = |mask: u64| {
        let mut s = VertexSet::empty(n);
        let mut left = best.0;
        for v in 0..n {
            if left == 0 {
                break;
            }
            if mask >> v & 1 == 1 {
                s.insert(v);
                left -= 1;
            }
        }
        s
    };
    Ok(BicliqueWitness { size: best.0, a: trim(best.1), b: trim(best.2) })
}

fn biclique_branch(rows: &[u64], a: u64, b: u64, ca: u64, cb: u64, best: &mut (usize, u64, u64)) {
    let asz = a.count_ones() as usize;
    let bsz = b.count_ones() as usize;
    if asz.min(bsz) > best.0 {
        *best = (asz.min(bsz), a, b);
    }
    let half = (asz + bsz + (ca | cb).count_ones() as usize) / 2;
    let bound = (asz + ca.count_ones() as usize)
        .min(bsz + cb.count_ones() as usize)
        .min(half);
    if bound <= best.0 {
        return;
    }
    let v = (ca | cb).trailing_zeros() as usize;
    let bit = 1u64 << v;
    // Grow the smaller side first so the dive finds a balanced witness early.
    let grow_a = |best: &mut (usize, u64, u64)| {
        if ca & bit != 0 {
            biclique_branch(rows, a | bit, b, ca & !bit, cb & rows[v] & !bit, best);
        }
    };
    let grow_b = |best: &mut (usize, u64, u64)| {
        if cb & bit != 0 {
            biclique_branch(rows, a, b | bit, ca & rows[v] & !bit, cb & !bit, best);
        }
    };
    if asz <= bsz {
        grow_a(best);
        grow_b(best);
    } else {
        grow_b(best);
        grow_a(best);
    }
    biclique_branch(rows, a, b, ca & !bit, cb & !bit, best);
}

/// Exact max clique over bitmask rows (Tomita-style coloring bound).
fn max_clique_masks(rows: &[u64], all: u64) -> (usize, u64) {
    let mut best = (0usize, 0u64);
    expand(rows, all, 0, 0, &mut best);
    best
}

fn expand(rows: &[u64], p: u64, r_mask: u64, r_size: usize, best: &mut (usize, u64)) {
    if r_size > best.0 {
        *best = (r_size, r_mask);
    }
    if p == 0 {
        return;
    }
    // Greedy coloring: vertices in the same class are pairwise non-adjacent,
    // so a clique takes at most one from each class.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(p.count_ones() as usize);
    let mut uncolored = p;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            order.push((v, color));
            uncolored &= !(1u64 << v);
            avail &= !(1u64 << v) & !rows[v];
        }
    }
    let mut p = p;
    for &(v, c) in order.iter().rev() {
        if r_size + c <= best.0 {
            return;
        }
        expand(rows, p & rows[v], r_mask | 1 << v, r_size + 1, best);
        p &= !(1u64 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::find_induced;

    #[test]
    fn closure_of_triangle_free_chain() {
        // 0-1, 1-2: closure adds 0-2.
        let g = OrderedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = brute_closure(&g).unwrap();
        assert!(c.has_edge(0, 2));
        assert_eq!(c.edge_count(), 3);
    }

    #[test]
    fn closure_respects_direction() {
        // 0-2 and 1-2: no increasing path from 0 to 1 (2 is after both).
        let g = OrderedGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let c = brute_closure(&g).unwrap();
        assert_eq!(c, g);
    }

    #[test]
    fn closure_budget_enforced() {
        let g = OrderedGraph::new(11);
        assert!(matches!(
            brute_closure(&g),
            Err(OracleError::OverBudget { what: "closure", .. })
        ));
    }

    #[test]
    fn pattern_enumeration_agrees_with_matcher_on_smoke_case() {
        let g = OrderedGraph::from_edges(6, &[(0, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let s = OrderedPattern::star_s();
        let brute = brute_pattern(&g, &s).unwrap().unwrap();
        let fast = find_induced(&g, &s).unwrap();
        assert_eq!(brute, fast.0);
    }

    #[test]
    fn max_homogeneous_small_cases() {
        // K4: clique of size 4.
        let k4 = OrderedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let w = brute_max_homogeneous(&k4).unwrap();
        assert_eq!((w.size, w.kind), (4, HomKind::Clique));

        // Edgeless: independent set of size 5.
        let e5 = OrderedGraph::new(5);
        let w = brute_max_homogeneous(&e5).unwrap();
        assert_eq!((w.size, w.kind), (5, HomKind::Independent));

        // C5: max clique 2, max independent 2. Tie goes to the clique.
        let c5 = OrderedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let w = brute_max_homogeneous(&c5).unwrap();
        assert_eq!((w.size, w.kind), (2, HomKind::Clique));
        assert!(w
            .vertices
            .iter()
            .collect::<Vec<_>>()
            .windows(2)
            .all(|p| c5.has_edge(p[0], p[1])));
    }

    #[test]
    fn witness_is_homogeneous() {
        let g = OrderedGraph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        let w = brute_max_homogeneous(&g).unwrap();
        assert_eq!(w.vertices.len(), w.size);
        let verts = w.vertices.to_vec();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                match w.kind {
                    HomKind::Clique => assert!(g.has_edge(u, v)),
                    HomKind::Independent => assert!(!g.has_edge(u, v)),
                }
            }
        }
    }

    /// Plain 3^n sweep over ordered pairs of disjoint subsets. Slow but
    /// obviously correct; used to cross-check the branch and bound.
    fn biclique_reference(g: &OrderedGraph) -> usize {
        let n = g.n();
        let rows: Vec<u32> = (0..n)
            .map(|v| {
                let mut m = 0u32;
                for u in 0..n {
                    if g.has_edge(v, u) {
                        m |= 1 << u;
                    }
                }
                m
            })
            .collect();
        let full = (1u32 << n) - 1;
        let mut best = 0;
        for a_mask in 0..=full {
            let rest = full & !a_mask;
            let mut b_mask = rest;
            loop {
                let mut ok = true;
                let mut bits = a_mask;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if rows[v] & b_mask != b_mask {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    let bal = (a_mask.count_ones() as usize).min(b_mask.count_ones() as usize);
                    best = best.max(bal);
                }
                if b_mask == 0 {
                    break;
                }
                b_mask = (b_mask - 1) & rest;
            }
        }
        best
    }

    #[test]
    fn biclique_known_cases() {
        // No edges: no cross pair at all.
        assert_eq!(brute_balanced_biclique(&OrderedGraph::new(6)).unwrap().size, 0);

        // Complete graph: any split works, so floor(n/2) per side.
        let mut k9 = OrderedGraph::new(9);
        for u in 0..9 {
            for v in u + 1..9 {
                k9.add_edge(u, v);
            }
        }
        assert_eq!(brute_balanced_biclique(&k9).unwrap().size, 4);

        // C5 has no four-cycle, so nothing beats a single edge.
        let c5 = OrderedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(brute_balanced_biclique(&c5).unwrap().size, 1);

        // P4 has three edges; a 2-by-2 biclique would need four.
        let p4 = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(brute_balanced_biclique(&p4).unwrap().size, 1);
    }

    #[test]
    fn biclique_witness_spans_all_cross_pairs() {
        let g = OrderedGraph::from_edges(
            8,
            &[(0, 4), (0, 5), (1, 4), (1, 5), (2, 4), (2, 6), (3, 7), (5, 6)],
        )
        .unwrap();
        let w = brute_balanced_biclique(&g).unwrap();
        assert_eq!(w.size, 2);
        assert_eq!(w.a.len(), w.size);
        assert_eq!(w.b.len(), w.size);
        assert!(w.a.is_disjoint(&w.b));
        for u in w.a.iter() {
            for v in w.b.iter() {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn biclique_matches_reference_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..6 {
            let n = 9;
            let mut g = OrderedGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(brute_balanced_biclique(&g).unwrap().size, biclique_reference(&g));
        }
    }

    #[test]
    fn biclique_budget_enforced() {
        let g = OrderedGraph::new(41);
        assert!(matches!(
            brute_balanced_biclique(&g),
            Err(OracleError::OverBudget { what: "biclique", .. })
        ));
    }
}
