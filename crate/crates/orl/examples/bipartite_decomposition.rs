//! One decomposition step on a sparse balanced bipartite graph. The step
//! must end in one of three outcomes: a vertex dense into the other class,
//! a linear-size pair with no edges between, or a family of separated
//! set pairs. Each run is verified after the fact.

use orl::embedding::{embed_decompose, verify_outcome, EmbeddingConstants, EmbeddingOutcome};
use orl::graph::BipartiteOrderedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_bipartite(na: usize, density: f64, seed: u64) -> BipartiteOrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = BipartiteOrderedGraph::new(na, na);
    for a in 0..na {
        for b in 0..na {
            if rng.gen_bool(density) {
                h.add_edge(a, b);
            }
        }
    }
    h
}

fn describe(outcome: &EmbeddingOutcome) -> String {
    match outcome {
        EmbeddingOutcome::DenseVertex { vertex } => format!("dense vertex {vertex}"),
        EmbeddingOutcome::SparsePair { a_side, b_side } => {
            format!("sparse pair |A'| = {}, |B'| = {}", a_side.len(), b_side.len())
        }
        EmbeddingOutcome::SeparatedFamilies { families } => {
            format!("{} separated families", families.len())
        }
    }
}

fn main() {
    let consts = EmbeddingConstants::lab();
    println!("profile: eps1 = {}, alpha1 = {}", consts.eps1(), consts.alpha1());

    // Sweep densities so all three outcome shapes show up.
    for &(density, seed) in &[(0.001, 1u64), (0.05, 2), (0.3, 3), (0.7, 4)] {
        let h = random_bipartite(128, density, seed);
        let run = embed_decompose(&h, &consts, seed).expect("classes are balanced and large");
        let ok = verify_outcome(&h, &run.outcome, &consts);
        println!(
            "density {density:5}: {} ({} checks, {} violations) verified = {ok}",
            describe(&run.outcome),
            run.diagnostics.invariant_checks,
            run.diagnostics.invariant_violations,
        );
        assert!(ok);
        assert_eq!(run.diagnostics.invariant_violations, 0);
    }

    // The stricter constant profile drives the same machinery.
    let h = random_bipartite(256, 0.01, 9);
    let paper = EmbeddingConstants::paper();
    let run = embed_decompose(&h, &paper, 9).unwrap();
    println!(
        "paper profile on 256+256 vertices: {} verified = {}",
        describe(&run.outcome),
        verify_outcome(&h, &run.outcome, &paper)
    );
}
