//! Full recursive decomposition of bounded-degree ordered graphs: the
//! result is either an induced monotone path on k+1 vertices or a family
//! of pairwise-separated vertex sets. Inputs must satisfy the degree
//! precondition max_degree <= eps * n, which at these constants calls for
//! genuinely sparse graphs.

use orl::embedding::EmbeddingConstants;
use orl::graph::OrderedGraph;
use orl::qeh::{qeh_decompose, verify_qeh_result, QehConstants, QehResult};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random partial matching: n/3 edges, max degree 1. With `chains`, vertex
/// triples are wired as two-edge increasing chains instead, max degree 2.
fn random_sparse(n: usize, seed: u64, chains: bool) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(&mut rng);
    let mut g = OrderedGraph::new(n);
    if chains {
        for triple in verts.chunks(3).take(n / 4) {
            if let [a, b, c] = *triple {
                let mut t = [a, b, c];
                t.sort_unstable();
                g.add_edge(t[0], t[1]);
                g.add_edge(t[1], t[2]);
            }
        }
    } else {
        for pair in verts.chunks(2).take(n / 3) {
            if let [u, v] = *pair {
                g.add_edge(u.min(v), u.max(v));
            }
        }
    }
    g
}

fn main() {
    let k = 2;
    let consts = QehConstants::new(k, EmbeddingConstants::lab()).unwrap();
    println!("k = {k}: eps = {}, alpha^2 = {}", consts.eps(), consts.alpha_sq());

    let n = 2048;
    let mut paths = 0;
    let mut families = 0;
    for seed in 0..8u64 {
        // Degree stays at eps * n = 2 even with chains present.
        let g = random_sparse(n, seed, seed >= 4);
        let run = qeh_decompose(&g, &consts, seed).expect("degree bound holds by construction");
        assert!(verify_qeh_result(&g, &run.result, &consts), "seed {seed} failed verification");
        assert_eq!(run.diagnostics.invariant_violations, 0);
        match &run.result {
            QehResult::Path { vertices } => {
                paths += 1;
                println!("seed {seed}: monotone path {vertices:?}");
            }
            QehResult::Family { sets } => {
                families += 1;
                let largest = sets.iter().map(|s| s.len()).max().unwrap_or(0);
                println!(
                    "seed {seed}: separated family of {} sets, largest {largest}",
                    sets.len()
                );
            }
        }
    }
    println!("{paths} paths, {families} families, all verified");

    // A single increasing path as host: its closure joins every pair, so
    // the growth procedure succeeds and returns a monotone path witness.
    let mut host = OrderedGraph::new(n);
    for v in 0..n - 1 {
        host.add_edge(v, v + 1);
    }
    let run = qeh_decompose(&host, &consts, 3).unwrap();
    assert!(verify_qeh_result(&host, &run.result, &consts));
    match &run.result {
        QehResult::Path { vertices } => println!("path host: monotone path {vertices:?}"),
        QehResult::Family { .. } => println!("path host: separated family"),
    }
}
