//! Why the blow-up has no large balanced complement biclique: any such
//! biclique spends b vertices across k blocks, so some block pair carries
//! at least b/k per side as a balanced cross non-adjacent pair, and those
//! pairs are capped by the expander mixing bound. Both quantities are
//! computed exhaustively here and the pigeonhole inequality is checked.

use orl::construction::{
    build_counterexample, max_balanced_biclique_complement, max_balanced_nonadjacent_pair,
    BlowupParams, CertifyMode,
};

fn main() {
    for (k, m, seed) in [(2usize, 10usize, 5u64), (3, 10, 11), (4, 8, 2)] {
        let params = BlowupParams::explicit(k, m, 1).unwrap();
        let run = build_counterexample(&params, CertifyMode::Exact, seed).unwrap();
        let g = &run.graph;

        // Exact branch-and-bound on the complement.
        let w = max_balanced_biclique_complement(g).expect("within oracle budget");
        for u in w.a.iter() {
            for v in w.b.iter() {
                assert!(!g.has_edge(u, v), "witness must be edgeless in G");
            }
        }

        // Largest balanced cross non-adjacent pair over every block pair,
        // by an independent subset sweep.
        let mut best = 0;
        for a in 0..k {
            for b in a + 1..k {
                best = best.max(max_balanced_nonadjacent_pair(g, a * m, b * m, m));
            }
        }

        println!(
            "k={k} m={m} seed={seed}: biclique {} per side, best block pair {}, k*pair >= biclique: {}",
            w.size,
            best,
            k * best >= w.size
        );
        assert!(k * best >= w.size, "pigeonhole bound must hold");
    }
}
