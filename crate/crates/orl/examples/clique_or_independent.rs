//! Extract a clique or independent set and grade the answer against the
//! exact optimum. Inputs are random graphs filtered to the target family:
//! no induced monotone path on 8 vertices in the graph or its complement,
//! which at this size admits most dense random graphs.

use orl::embedding::EmbeddingConstants;
use orl::graph::OrderedGraph;
use orl::homogeneous::{extract_homogeneous, verify_homogeneous, DEFAULT_BASE_SIZE};
use orl::oracles::brute_clique_and_independent;
use orl::patterns::is_family_member;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, density: f64, seed: u64) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = OrderedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn main() {
    let base = EmbeddingConstants::lab();

    let mut shown = 0;
    let mut seed = 0u64;
    let mut rejected = 0;
    while shown < 6 {
        seed += 1;
        let g = random_graph(24, 0.5, seed);
        if !is_family_member(&g, 8) {
            rejected += 1;
            continue;
        }
        shown += 1;
        let run = extract_homogeneous(&g, 3, &base, DEFAULT_BASE_SIZE, seed)
            .expect("nonempty input");
        assert!(verify_homogeneous(&g, &run.result), "claimed set must be homogeneous");
        assert_eq!(run.diagnostics.invariant_violations, 0);

        let (clique, indep) = brute_clique_and_independent(&g).expect("within oracle budget");
        let best = clique.size.max(indep.size);
        println!(
            "seed {seed:2}: extracted {} of size {:2}, exact optimum {best:2}",
            run.result.kind,
            run.result.vertices.len(),
        );
    }
    println!("{rejected} samples rejected by the family filter");
}
