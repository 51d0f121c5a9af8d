//! Ordered transitive closure: x < y are joined in the closure iff the graph
//! contains a monotone (strictly increasing) path from x to y.

use crate::graph::{OrderedGraph, Vertex, VertexSet};

/// Same shape as an ordered graph; the closure is itself an ordered graph
/// that contains the original edge set.
pub type ClosureGraph = OrderedGraph;

/// Full closure by a forward dynamic program: vertices are processed in
/// order; `from[y]` collects every x < y with a monotone path to y, and
/// propagates along each edge y -> z with z > y.
pub fn transitive_closure(g: &OrderedGraph) -> ClosureGraph {
    let n = g.n();
    let mut from: Vec<VertexSet> = (0..n).map(|_| VertexSet::empty(n)).collect();
    for y in 0..n {
        let reach_y = from[y].clone();
        for z in g.forward_neighborhood(y).iter() {
            from[z].union_with(&reach_y);
            from[z].insert(y);
        }
    }
    let mut out = OrderedGraph::new(n);
    for y in 0..n {
        for x in from[y].iter() {
            out.add_edge(x, y);
        }
    }
    out
}

/// Vertices reachable from `x` by monotone paths whose vertices after the
/// first all lie in `allowed`. The start is exempt from the mask.
pub fn forward_reach_masked(g: &OrderedGraph, x: Vertex, allowed: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut reach = VertexSet::empty(n);
    let mut stack: Vec<Vertex> = Vec::new();
    let mut frontier = g.forward_neighborhood(x);
    frontier.intersect_with(allowed);
    for v in frontier.iter() {
        reach.insert(v);
        stack.push(v);
    }
    while let Some(v) = stack.pop() {
        let mut next = g.forward_neighborhood(v);
        next.intersect_with(allowed);
        next.subtract(&reach);
        for w in next.iter() {
            reach.insert(w);
            stack.push(w);
        }
    }
    reach
}

/// Closure row of a single vertex, without materializing the full closure.
pub fn forward_closure_neighborhood(g: &OrderedGraph, v: Vertex) -> VertexSet {
    forward_reach_masked(g, v, &VertexSet::full(g.n()))
}

/// Targets of good monotone paths from `x`: paths avoiding `avoid`
/// everywhere except possibly at the first vertex.
pub fn good_reachable(g: &OrderedGraph, x: Vertex, avoid: &VertexSet) -> VertexSet {
    forward_reach_masked(g, x, &avoid.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_closure;

    #[test]
    fn chain_closes_fully() {
        let g = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = transitive_closure(&g);
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(c.has_edge(u, v), "missing closure edge ({u}, {v})");
            }
        }
        assert_eq!(c.edge_count(), 6);
    }

    #[test]
    fn no_increasing_route_no_edge() {
        // 0-2 and 1-2: both paths end at 2; nothing joins 0 and 1.
        let g = OrderedGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let c = transitive_closure(&g);
        assert_eq!(c, g);
    }

    #[test]
    fn closure_is_idempotent_and_contains_original() {
        let g = OrderedGraph::from_edges(6, &[(0, 2), (2, 3), (1, 4), (3, 5)]).unwrap();
        let c = transitive_closure(&g);
        for (u, v) in g.edges() {
            assert!(c.has_edge(u, v));
        }
        assert_eq!(transitive_closure(&c), c);
    }

    #[test]
    fn agrees_with_subset_enumeration_exhaustively_n5() {
        // All 1024 ordered graphs on 5 vertices.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let mut g = OrderedGraph::new(5);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            assert_eq!(transitive_closure(&g), brute_closure(&g).unwrap());
        }
    }

    #[test]
    fn single_row_matches_full_closure() {
        let g = OrderedGraph::from_edges(7, &[(0, 1), (1, 3), (3, 6), (2, 4), (4, 5)]).unwrap();
        let c = transitive_closure(&g);
        for v in 0..7 {
            let row = forward_closure_neighborhood(&g, v);
            let mut expect = c.forward_neighborhood(v);
            assert_eq!(row, expect, "row of {v}");
            expect.subtract(&row);
            assert!(expect.is_empty());
        }
    }

    #[test]
    fn good_paths_avoid_the_set() {
        // 0-1-2-3 chain; avoiding {1} severs everything past 0 except via...
        // nothing: 0's only forward neighbor is 1.
        let g = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let avoid = VertexSet::from_indices(4, &[1]);
        assert!(good_reachable(&g, 0, &avoid).is_empty());
        // Avoiding {2}: 0 reaches 1 only.
        let avoid2 = VertexSet::from_indices(4, &[2]);
        assert_eq!(good_reachable(&g, 0, &avoid2).to_vec(), vec![1]);
        // The start may itself be in the avoided set.
        let avoid0 = VertexSet::from_indices(4, &[0]);
        assert_eq!(good_reachable(&g, 0, &avoid0).to_vec(), vec![1, 2, 3]);
    }
}
