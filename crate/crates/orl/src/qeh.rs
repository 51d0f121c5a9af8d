//! Path-or-family decomposition of an ordered graph.
//!
//! For a bounded-degree ordered graph, `qeh_decompose` either finds an
//! induced monotone path with `k` vertices or a family of two or more
//! disjoint vertex sets with no edges between any two of them, each set
//! large enough that t >= alpha*sqrt(n/|X_i|). The driver grows the path one
//! vertex at a time: from the current endpoint it looks at the transitive
//! closure of the surviving graph, splits the newly reachable vertices into
//! two classes, and hands the reachability bipartite graph to the
//! three-outcome decomposition. A dense vertex extends the path; either of
//! the other two outcomes translates into a non-adjacent family in the
//! original graph.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::closure::{forward_reach_masked, transitive_closure};
use crate::embedding::{
    embed_decompose, EmbedDiagnostics, EmbedError, EmbeddingConstants, EmbeddingOutcome,
};
use crate::graph::{BipartiteOrderedGraph, OrderedGraph, Vertex, VertexSet};
use crate::stream::substream;

#[derive(Debug, Error)]
pub enum QehError {
    #[error("maximum degree {0} exceeds the admissible bound eps*n = {1}")]
    DegreeTooHigh(usize, String),
    #[error("target path size must be at least 1")]
    BadTarget,
    #[error("inner decomposition failed: {0}")]
    Embed(#[from] EmbedError),
    #[error("internal failure: {0}")]
    Internal(String),
}

/// Constant chain for a target path size k over a base profile:
/// c_1 = eps1/2, c_{s+1} = eps1*c_s/4, eps = c_k/2, alpha = alpha1*sqrt(c_k)/2.
/// alpha itself is irrational; alpha^2 = alpha1^2*c_k/4 is the rational the
/// checks use.
#[derive(Debug, Clone)]
pub struct QehConstants {
    k: usize,
    base: EmbeddingConstants,
    c: Vec<BigRational>,
}

impl QehConstants {
    pub fn new(k: usize, base: EmbeddingConstants) -> Result<Self, QehError> {
        if k < 1 {
            return Err(QehError::BadTarget);
        }
        let eps1 = base.eps1().clone();
        let mut c = Vec::with_capacity(k);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
        c.push(&eps1 * &half);
        for _ in 1..k {
            let next = &eps1 * c.last().unwrap() * &quarter;
            c.push(next);
        }
        Ok(QehConstants { k, base, c })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> &EmbeddingConstants {
        &self.base
    }

    /// c_s for 1 <= s <= k.
    pub fn c(&self, s: usize) -> &BigRational {
        &self.c[s - 1]
    }

    /// Admissible degree fraction: eps = c_k/2.
    pub fn eps(&self) -> BigRational {
        self.c[self.k - 1].clone() / BigRational::from_integer(BigInt::from(2))
    }

    /// Square of the family constant: alpha^2 = alpha1^2 * c_k / 4.
    pub fn alpha_sq(&self) -> BigRational {
        let a1 = self.base.alpha1();
        a1 * a1 * &self.c[self.k - 1] / BigRational::from_integer(BigInt::from(4))
    }
}

#[derive(Debug, Clone)]
pub enum QehResult {
    /// Induced monotone path, listed in increasing vertex order.
    Path { vertices: Vec<Vertex> },
    /// Two or more disjoint sets with no edges between any pair of them and
    /// t >= alpha*sqrt(n/|X_i|) for every set.
    Family { sets: Vec<VertexSet> },
}

impl QehResult {
    pub fn kind(&self) -> &'static str {
        match self {
            QehResult::Path { .. } => "path",
            QehResult::Family { .. } => "family",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct QehDiagnostics {
    pub invariant_checks: u64,
    pub invariant_violations: u64,
    pub steps: u64,
    /// Counters of all inner decomposition runs, summed.
    pub embed: EmbedDiagnostics,
}

impl QehDiagnostics {
    pub fn absorb(&mut self, other: &QehDiagnostics) {
        self.invariant_checks += other.invariant_checks;
        self.invariant_violations += other.invariant_violations;
        self.steps += other.steps;
        self.embed.absorb(&other.embed);
    }
}

fn record(diag: &mut QehDiagnostics, ok: bool, what: &str) {
    diag.invariant_checks += 1;
    if !ok {
        diag.invariant_violations += 1;
        debug_assert!(false, "path-growth invariant failed: {what}");
    }
}

#[derive(Debug, Clone)]
pub struct QehReport {
    pub result: QehResult,
    pub diagnostics: QehDiagnostics,
}

// value >= ratio * scale, exact.
fn ge_scaled(value: usize, ratio: &BigRational, scale: usize) -> bool {
    BigInt::from(value) * ratio.denom() >= ratio.numer() * BigInt::from(scale)
}

// value > ratio * scale, exact.
fn gt_scaled(value: usize, ratio: &BigRational, scale: usize) -> bool {
    BigInt::from(value) * ratio.denom() > ratio.numer() * BigInt::from(scale)
}

/// Exponent normalization: a guarantee t >= alpha*(n/|X|)^beta with t >= 2
/// collapses to the cleaner t >= (n/|X|)^c with c = beta/(1 - log2 alpha)
/// for alpha <= 1, and c = beta outright for alpha > 1.
pub fn quasi_constants_normalize(alpha: f64, beta: f64) -> Result<f64, QehError> {
    if alpha <= 0.0 || beta <= 0.0 {
        return Err(QehError::Internal(format!(
            "normalization needs positive constants, got alpha={alpha}, beta={beta}"
        )));
    }
    if alpha > 1.0 {
        Ok(beta)
    } else {
        Ok(beta / (1.0 - alpha.log2()))
    }
}

// Map a set over local A indices back to host vertices.
fn map_side(set: &VertexSet, verts: &[Vertex], n: usize) -> VertexSet {
    let picked: Vec<Vertex> = set.iter().filter(|&i| i < verts.len()).map(|i| verts[i]).collect();
    VertexSet::from_indices(n, &picked)
}

fn finish_family(
    g: &OrderedGraph,
    sets: Vec<VertexSet>,
    diag: &mut QehDiagnostics,
) -> Result<QehResult, QehError> {
    if sets.iter().any(|s| s.is_empty()) {
        return Err(QehError::Internal(
            "family set collapsed to padding vertices".into(),
        ));
    }
    // The reachability argument promises these sets are non-adjacent in the
    // original graph, not just in the bipartite auxiliary; checked directly.
    let mut cross_free = true;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            for v in sets[i].iter() {
                if !g.row(v).is_disjoint(&sets[j]) {
                    cross_free = false;
                }
            }
        }
    }
    record(diag, cross_free, "family sets non-adjacent in the host graph");
    Ok(QehResult::Family { sets })
}

fn is_induced_monotone_path(g: &OrderedGraph, vs: &[Vertex]) -> bool {
    if vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for w in vs.windows(2) {
        if w[0] >= w[1] {
            return false;
        }
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let adjacent = g.has_edge(vs[i], vs[j]);
            if (j == i + 1) != adjacent {
                return false;
            }
        }
    }
    true
}

/// Grow an induced monotone path of size `consts.k()` or return a verified
/// non-adjacent family. Requires the maximum degree of `g` to be at most
/// eps*n under the active constant chain.
pub fn qeh_decompose(
    g: &OrderedGraph,
    consts: &QehConstants,
    seed: u64,
) -> Result<QehReport, QehError> {
    let n = g.n();
    let eps = consts.eps();
    let max_deg = g.max_degree();
    if gt_scaled(max_deg, &eps, n) {
        return Err(QehError::DegreeTooHigh(max_deg, format!("{}", &eps * BigRational::from_integer(BigInt::from(n)))));
    }
    let mut diag = QehDiagnostics::default();
    let k = consts.k();

    // Step 0: bipartite restriction of the transitive closure between the
    // first ceil(n/2) vertices and the rest. A dense vertex there has the
    // closure forward degree the growth loop needs from x_1.
    let closure = transitive_closure(g);
    let half = n.div_ceil(2);
    let a_verts: Vec<Vertex> = (0..half).collect();
    let b_verts: Vec<Vertex> = (half..n).collect();
    let mut h0 = BipartiteOrderedGraph::new(half, half);
    for (ai, &a) in a_verts.iter().enumerate() {
        for (bi, &b) in b_verts.iter().enumerate() {
            if closure.has_edge(a, b) {
                h0.add_edge(ai, bi);
            }
        }
    }
    let report = embed_decompose(&h0, consts.base(), substream(seed, "qeh-step", 0))?;
    diag.embed.absorb(&report.diagnostics);
    let x1 = match report.outcome {
        EmbeddingOutcome::DenseVertex { vertex } => a_verts[vertex],
        EmbeddingOutcome::SeparatedFamilies { families } => {
            let sets = families
                .iter()
                .map(|(_, x)| map_side(x, &b_verts, n))
                .collect();
            let result = finish_family(g, sets, &mut diag)?;
            return Ok(QehReport { result, diagnostics: diag });
        }
        EmbeddingOutcome::SparsePair { a_side, b_side } => {
            let sets = vec![map_side(&a_side, &a_verts, n), map_side(&b_side, &b_verts, n)];
            let result = finish_family(g, sets, &mut diag)?;
            return Ok(QehReport { result, diagnostics: diag });
        }
    };

    let mut path = vec![x1];
    let mut u = VertexSet::full(n);
    loop {
        diag.steps += 1;
        let s = path.len();
        let xs = *path.last().unwrap();

        // Closure forward degree of the endpoint inside the survivors; the
        // growth guarantee says it never drops below c_s * n.
        let y = forward_reach_masked(g, xs, &u);
        record(&mut diag, ge_scaled(y.len(), consts.c(s), n), "closure forward degree at least c_s*n");

        if s == k {
            record(&mut diag, is_induced_monotone_path(g, &path), "path is induced and monotone");
            return Ok(QehReport {
                result: QehResult::Path { vertices: path },
                diagnostics: diag,
            });
        }

        let x_fwd = g.forward_neighborhood(xs).intersection(&u);
        let z = y.difference(&x_fwd);
        let half_cs = consts.c(s) / BigRational::from_integer(BigInt::from(2));
        record(&mut diag, ge_scaled(z.len(), &half_cs, n), "closure-only reach at least c_s*n/2");
        if z.len() < 2 {
            return Err(QehError::Internal(format!(
                "reachable surplus shrank to {} vertices at step {s}",
                z.len()
            )));
        }

        // Split the surplus: A = lower half (rounded up), B = upper half,
        // padded to equal classes with isolated vertices.
        let zv = z.to_vec();
        let a_half = zv.len().div_ceil(2);
        let a_verts: Vec<Vertex> = zv[..a_half].to_vec();
        let b_verts: Vec<Vertex> = zv[a_half..].to_vec();

        // Assign to every A-vertex the largest first-hop vertex that reaches
        // it through the survivors; ascending overwrite keeps the largest.
        let mut assigned: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for x in x_fwd.iter() {
            let reach = forward_reach_masked(g, x, &u);
            for &v in &a_verts {
                if reach.contains(v) {
                    assigned.insert(v, x);
                }
            }
        }
        record(
            &mut diag,
            a_verts.iter().all(|v| assigned.contains_key(v)),
            "every lower-half vertex has a first-hop source",
        );
        if !a_verts.iter().all(|v| assigned.contains_key(v)) {
            return Err(QehError::Internal(format!(
                "unassigned lower-half vertex at step {s}"
            )));
        }

        // Good reach of a first-hop vertex: forward paths through survivors
        // that never re-enter the first-hop set after leaving it.
        let u_good = u.difference(&x_fwd);
        let mut good: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for &x in assigned.values() {
            good.entry(x)
                .or_insert_with(|| forward_reach_masked(g, x, &u_good));
        }

        let na = a_verts.len();
        let mut h = BipartiteOrderedGraph::new(na, na);
        let mut sources_reach_their_vertices = true;
        for (ai, &v) in a_verts.iter().enumerate() {
            let gr = &good[&assigned[&v]];
            if !gr.contains(v) {
                sources_reach_their_vertices = false;
            }
            for (bi, &w) in b_verts.iter().enumerate() {
                if gr.contains(w) {
                    h.add_edge(ai, bi);
                }
            }
        }
        record(
            &mut diag,
            sources_reach_their_vertices,
            "assigned source reaches its vertex avoiding the first-hop set",
        );

        let report = embed_decompose(&h, consts.base(), substream(seed, "qeh-step", s as u64))?;
        diag.embed.absorb(&report.diagnostics);
        match report.outcome {
            EmbeddingOutcome::DenseVertex { vertex } => {
                let v = a_verts[vertex];
                let xnew = assigned[&v];
                record(&mut diag, u.contains(xnew), "extension vertex survives");
                path.push(xnew);
                record(&mut diag, is_induced_monotone_path(g, &path), "extended path stays induced");
                // Shedding the whole first-hop set keeps later path vertices
                // non-adjacent to the current endpoint.
                u.subtract(&x_fwd);
            }
            EmbeddingOutcome::SeparatedFamilies { families } => {
                let sets = families
                    .iter()
                    .map(|(_, x)| map_side(x, &b_verts, n))
                    .collect();
                let result = finish_family(g, sets, &mut diag)?;
                return Ok(QehReport { result, diagnostics: diag });
            }
            EmbeddingOutcome::SparsePair { a_side, b_side } => {
                let sets = vec![map_side(&a_side, &a_verts, n), map_side(&b_side, &b_verts, n)];
                let result = finish_family(g, sets, &mut diag)?;
                return Ok(QehReport { result, diagnostics: diag });
            }
        }
    }
}

/// Check a result against the graph: a Path must be an induced monotone
/// path with exactly k vertices; a Family must consist of t >= 2 disjoint,
/// pairwise non-adjacent sets each satisfying t^2*|X_i| >= alpha^2*n.
pub fn verify_qeh_result(g: &OrderedGraph, result: &QehResult, consts: &QehConstants) -> bool {
    let n = g.n();
    match result {
        QehResult::Path { vertices } => {
            vertices.len() == consts.k() && is_induced_monotone_path(g, vertices)
        }
        QehResult::Family { sets } => {
            let t = sets.len();
            if t < 2 {
                return false;
            }
            let alpha_sq = consts.alpha_sq();
            for s in sets {
                if s.universe() != n || s.is_empty() {
                    return false;
                }
                // t >= alpha*sqrt(n/|X|) squared: t^2*|X| >= alpha^2*n.
                if !ge_scaled(t * t * s.len(), &alpha_sq, n) {
                    return false;
                }
            }
            for i in 0..t {
                for j in i + 1..t {
                    if !sets[i].is_disjoint(&sets[j]) {
                        return false;
                    }
                    for v in sets[i].iter() {
                        if !g.row(v).is_disjoint(&sets[j]) {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}
