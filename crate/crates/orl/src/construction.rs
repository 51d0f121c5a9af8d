//! Blow-up constructions over certified expanders: ordered graphs whose
//! cross-block edges follow expander distances, so that the four-vertex
//! patterns S and P never embed while the complement carries no large
//! balanced biclique. Every claim the builder makes is re-derived from the
//! finished graph and reported in a certificate.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{NeighborhoodMode, OrderedGraph, Vertex, VertexSet};
use crate::oracles::{brute_balanced_biclique, BicliqueWitness, OracleBudget, OracleError};
use crate::patterns::{find_induced, OrderedPattern};
use crate::stream::substream;

/// Attempts before the pairing-model sampler gives up.
const PAIRING_RETRY_CAP: usize = 10_000;
/// Exhaustive subset sweeps (pair bound, per-block-pair products) stop here.
const PAIR_SUBSET_MAX: usize = 14;
/// Per-block balanced searches enumerate subsets of a single block.
const BLOCK_ENUM_MAX: usize = 20;
/// Degree of the sampled regular graphs used by the builder.
const EXPANDER_DEGREE: usize = 3;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("regular graph needs d*m even and m > d, got m={m}, d={d}")]
    Infeasible { m: usize, d: usize },
    #[error("no simple regular pairing after {0} attempts")]
    RetriesExhausted(usize),
    #[error("graph is not regular: saw degrees {0} and {1}")]
    NotRegular(usize, usize),
    #[error("{what} limited to {budget} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        budget: usize,
    },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Uniform-ish d-regular graph by the pairing model: d stubs per vertex are
/// shuffled and matched in consecutive pairs; samples containing a loop or a
/// doubled edge are thrown away and redrawn.
pub fn random_regular(m: usize, d: usize, seed: u64) -> Result<OrderedGraph, ConstructionError> {
    if d * m % 2 != 0 || m <= d {
        return Err(ConstructionError::Infeasible { m, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<Vertex> = (0..m * d).map(|p| p / d.max(1)).collect();
    'attempt: for _ in 0..PAIRING_RETRY_CAP {
        stubs.shuffle(&mut rng);
        let mut g = OrderedGraph::new(m);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        debug_assert!((0..m).all(|v| g.degree(v) == d));
        return Ok(g);
    }
    Err(ConstructionError::RetriesExhausted(PAIRING_RETRY_CAP))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertifyMode {
    Exact,
    Spectral,
    Sampled,
}

impl CertifyMode {
    pub fn label(self) -> &'static str {
        match self {
            CertifyMode::Exact => "exact",
            CertifyMode::Spectral => "spectral",
            CertifyMode::Sampled => "sampled",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "exact" => Some(CertifyMode::Exact),
            "spectral" => Some(CertifyMode::Spectral),
            "sampled" => Some(CertifyMode::Sampled),
            _ => None,
        }
    }
}

/// A regular graph together with a vertex-expansion ratio. Exact mode
/// guarantees |N[U]| >= (1+lambda)|U| for every U with |U| <= n/2 and that
/// lambda is the largest such ratio. Spectral mode guarantees the inequality
/// for a usually smaller lambda. Sampled mode only reports the worst ratio
/// seen over a sample, an upper bound on the truth, and certifies nothing.
#[derive(Clone, Debug)]
pub struct CertifiedExpander {
    pub h: OrderedGraph,
    pub d: usize,
    pub lambda: BigRational,
    pub mode: CertifyMode,
}

pub fn certify_expansion(
    h: &OrderedGraph,
    mode: CertifyMode,
    seed: u64,
) -> Result<CertifiedExpander, ConstructionError> {
    let n = h.n();
    if n < 2 {
        return Err(ConstructionError::BadParams(
            "expansion certification needs at least 2 vertices".into(),
        ));
    }
    let d = h.degree(0);
    for v in 1..n {
        if h.degree(v) != d {
            return Err(ConstructionError::NotRegular(d, h.degree(v)));
        }
    }
    let lambda = match mode {
        CertifyMode::Exact => exact_lambda(h)?,
        CertifyMode::Spectral => spectral_lambda(h, d),
        CertifyMode::Sampled => sampled_lambda(h, seed),
    };
    Ok(CertifiedExpander {
        h: h.clone(),
        d,
        lambda,
        mode,
    })
}

/// Minimum of (|N[U]| - |U|) / |U| over nonempty U with |U| <= n/2, via a
/// closed-neighborhood table indexed by subset: each mask extends the mask
/// with its lowest vertex dropped.
fn exact_lambda(h: &OrderedGraph) -> Result<BigRational, ConstructionError> {
    let n = h.n();
    let budget = OracleBudget::current().expansion;
    if n > budget {
        return Err(ConstructionError::TooLarge {
            what: "exact expansion certificate",
            n,
            budget,
        });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            let mut mask = 1u32 << v;
            for u in h.row(v).iter() {
                mask |= 1 << u;
            }
            mask
        })
        .collect();
    let mut table = vec![0u32; 1usize << n];
    let mut best: Option<(u64, u64)> = None;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let nb = table[mask & (mask - 1)] | closed[low];
        table[mask] = nb;
        let size = mask.count_ones() as u64;
        if size * 2 > n as u64 {
            continue;
        }
        let growth = u64::from(nb.count_ones()) - size;
        let tighter = match best {
            None => true,
            Some((bg, bs)) => growth * bs < bg * size,
        };
        if tighter {
            best = Some((growth, size));
        }
    }
    let (g, s) = best.expect("n >= 2 admits singleton subsets");
    Ok(BigRational::new(BigInt::from(g), BigInt::from(s)))
}

/// For d-regular H with second adjacency eigenvalue mu2, discrete Cheeger
/// gives e(U, V\U) >= (d - mu2)/2 * |U| whenever |U| <= n/2; each vertex
/// outside U absorbs at most d of those edges, hence
/// |N[U]| >= (1 + (d - mu2)/(2d)) |U|. The bound is floored to nanos so the
/// reported rational stays on the safe side of float error and prints short.
fn spectral_lambda(h: &OrderedGraph, d: usize) -> BigRational {
    let n = h.n();
    if d == 0 {
        return BigRational::zero();
    }
    let a = DMatrix::<f64>::from_fn(n, n, |i, j| if h.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    let mu2 = ev[1];
    let raw = (d as f64 - mu2) / (2.0 * d as f64);
    let nanos = ((raw - 1e-9) * 1e9).floor().max(0.0);
    BigRational::new(BigInt::from(nanos as u64), BigInt::from(1_000_000_000u64))
}

/// Worst |N[U]|/|U| - 1 over singletons, breadth-first balls, and seeded
/// random subsets. Minimising over a sample of witnesses only, this is an
/// upper bound on the true ratio; use it for scouting, never for proofs.
fn sampled_lambda(h: &OrderedGraph, seed: u64) -> BigRational {
    let n = h.n();
    let mut best: Option<BigRational> = None;
    let consider = |u: &VertexSet, best: &mut Option<BigRational>| {
        let size = u.len();
        if size == 0 || size * 2 > n {
            return;
        }
        let nb = h.neighborhood(u, NeighborhoodMode::Closed).len();
        let ratio = BigRational::new(BigInt::from(nb - size), BigInt::from(size));
        if best.as_ref().map_or(true, |b| ratio < *b) {
            *best = Some(ratio);
        }
    };
    for v in 0..n {
        let mut ball = VertexSet::singleton(n, v);
        consider(&ball, &mut best);
        loop {
            let next = h.neighborhood(&ball, NeighborhoodMode::Closed);
            if next.len() == ball.len() || next.len() * 2 > n {
                break;
            }
            ball = next;
            consider(&ball, &mut best);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let target = rng.gen_range(1..=(n / 2).max(1));
        let mut u = VertexSet::empty(n);
        while u.len() < target {
            u.insert(rng.gen_range(0..n));
        }
        consider(&u, &mut best);
    }
    best.unwrap_or_else(BigRational::zero)
}

/// r-th distance power: u and v are adjacent when their distance in `h` is
/// between 1 and r. Self-distances stay out; callers that need the loop
/// convention account for distance 0 themselves.
pub fn graph_power(h: &OrderedGraph, r: usize) -> OrderedGraph {
    assert!(r >= 1, "power exponent must be positive");
    let n = h.n();
    let mut out = OrderedGraph::new(n);
    for v in 0..n {
        let mut reached = VertexSet::singleton(n, v);
        let mut frontier = VertexSet::singleton(n, v);
        for _ in 0..r {
            let mut next = h.neighborhood(&frontier, NeighborhoodMode::Open);
            next.subtract(&reached);
            if next.is_empty() {
                break;
            }
            reached.union_with(&next);
            frontier = next;
        }
        reached.remove(v);
        for u in reached.iter() {
            if u > v {
                out.add_edge(v, u);
            }
        }
    }
    out
}

/// Outcome of sweeping every pair of disjoint sets with no H^r edge between
/// them against |X||Y| <= n^2 (1+lambda)^{-r}. For a fixed X the largest
/// admissible Y is everything outside N[X] in H^r, so one sweep over X covers
/// all pairs.
#[derive(Clone, Debug)]
pub struct PairBoundReport {
    pub r: usize,
    pub bound: BigRational,
    pub worst_product: usize,
    pub worst_x: VertexSet,
    pub worst_y: VertexSet,
    pub holds: bool,
    pub subsets_checked: u64,
}

pub fn check_pair_bound(
    ce: &CertifiedExpander,
    r: usize,
) -> Result<PairBoundReport, ConstructionError> {
    if ce.mode != CertifyMode::Exact {
        return Err(ConstructionError::BadParams(
            "pair bound sweep needs an exact expansion certificate".into(),
        ));
    }
    if r < 1 {
        return Err(ConstructionError::BadParams(
            "power must be at least 1".into(),
        ));
    }
    let n = ce.h.n();
    if n > PAIR_SUBSET_MAX {
        return Err(ConstructionError::TooLarge {
            what: "pair bound sweep",
            n,
            budget: PAIR_SUBSET_MAX,
        });
    }
    let hr = graph_power(&ce.h, r);
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            let mut mask = 1u32 << v;
            for u in hr.row(v).iter() {
                mask |= 1 << u;
            }
            mask
        })
        .collect();
    let full = (1u32 << n) - 1;
    let mut worst = (0usize, 0u32, 0u32);
    for mask in 0..=full {
        let mut nb = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            nb |= closed[v];
        }
        // N[X] contains X, so the free side is automatically disjoint from X.
        let free = full & !nb;
        let prod = mask.count_ones() as usize * free.count_ones() as usize;
        if prod > worst.0 {
            worst = (prod, mask, free);
        }
    }
    let grown = pow(ce.lambda.numer() + ce.lambda.denom(), r);
    let shrunk = pow(ce.lambda.denom().clone(), r);
    let cap = BigInt::from(n * n) * &shrunk;
    Ok(PairBoundReport {
        r,
        bound: BigRational::new(cap.clone(), grown.clone()),
        worst_product: worst.0,
        worst_x: mask_to_set(worst.1, n),
        worst_y: mask_to_set(worst.2, n),
        holds: BigInt::from(worst.0) * grown <= cap,
        subsets_checked: u64::from(full) + 1,
    })
}

fn mask_to_set(mask: u32, n: usize) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if mask >> v & 1 == 1 {
            s.insert(v);
        }
    }
    s
}

/// How block vertices map onto expander vertices.
#[derive(Clone, Copy, Debug)]
pub enum Labeling {
    /// v -> v mod m in every block.
    Identity,
    /// An independent seeded permutation per block.
    Shuffled(u64),
}

/// k ordered blocks of m vertices each; x in block a and y in a later block
/// are adjacent exactly when their expander labels lie within distance
/// f * 2^a of each other (blocks 0-indexed, label equality counts as
/// distance 0 and is within reach). Blocks carry no internal edges.
#[derive(Clone, Debug)]
pub struct Blowup {
    pub graph: OrderedGraph,
    pub k: usize,
    pub m: usize,
    pub f: usize,
    pub phi: Vec<Vertex>,
}

impl Blowup {
    pub fn block_of(&self, v: Vertex) -> usize {
        v / self.m
    }

    pub fn block(&self, a: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.graph.n());
        for v in a * self.m..(a + 1) * self.m {
            s.insert(v);
        }
        s
    }
}

pub fn build_blowup(
    ce: &CertifiedExpander,
    k: usize,
    f: usize,
    labeling: Labeling,
) -> Result<Blowup, ConstructionError> {
    if k < 2 || f < 1 {
        return Err(ConstructionError::BadParams(
            "blow-up needs k >= 2 and f >= 1".into(),
        ));
    }
    let m = ce.h.n();
    let n = k
        .checked_mul(m)
        .filter(|&n| n <= OrderedGraph::MAX_VERTICES)
        .ok_or_else(|| ConstructionError::BadParams("k*m too many vertices".into()))?;
    let dist = all_pairs_distances(&ce.h);
    let phi: Vec<Vertex> = match labeling {
        Labeling::Identity => (0..n).map(|v| v % m).collect(),
        Labeling::Shuffled(seed) => {
            let mut phi = Vec::with_capacity(n);
            for a in 0..k {
                let mut labels: Vec<Vertex> = (0..m).collect();
                let mut rng =
                    ChaCha8Rng::seed_from_u64(substream(seed, "blowup-label", a as u64));
                labels.shuffle(&mut rng);
                phi.extend(labels);
            }
            phi
        }
    };
    let mut g = OrderedGraph::new(n);
    for x in 0..n {
        let a = x / m;
        let reach = (f as u64).saturating_mul(1u64.checked_shl(a as u32).unwrap_or(u64::MAX));
        for y in (a + 1) * m..n {
            let d = dist[phi[x]][phi[y]];
            if d != u32::MAX && u64::from(d) <= reach {
                g.add_edge(x, y);
            }
        }
    }
    Ok(Blowup { graph: g, k, m, f, phi })
}

fn all_pairs_distances(h: &OrderedGraph) -> Vec<Vec<u32>> {
    let n = h.n();
    let mut dist = vec![vec![u32::MAX; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        let mut frontier = vec![s];
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in h.row(u).iter() {
                    if dist[s][v] == u32::MAX {
                        dist[s][v] = d;
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
    }
    dist
}

/// Verdicts for the structural properties of a blow-up: the degree cap
/// 4^(f 2^k), the absence of stacking-breaker triples, and (on small blocks)
/// the per-block-pair product bound m^2 (1+lambda)^{-f}.
#[derive(Clone, Debug)]
pub struct BlowupCheck {
    pub max_degree: usize,
    pub degree_bound_ok: bool,
    pub bad_triple: Option<(Vertex, Vertex, Vertex)>,
    pub pair_bounds: Option<Vec<BlockPairBound>>,
}

/// Worst |X| * |Y| over X in block a, Y in block b, no edges between them.
#[derive(Clone, Debug)]
pub struct BlockPairBound {
    pub a: usize,
    pub b: usize,
    pub worst_product: usize,
    pub ok: bool,
}

pub fn check_blowup(bl: &Blowup, lambda: &BigRational) -> BlowupCheck {
    let max_degree = bl.graph.max_degree();
    BlowupCheck {
        max_degree,
        degree_bound_ok: degree_within_power_bound(max_degree, bl.f, bl.k),
        bad_triple: find_bad_triple(&bl.graph, bl.m),
        pair_bounds: block_pair_bounds(bl, lambda),
    }
}

/// delta <= 4^(f 2^k) without materialising the right side: compare against
/// the power of two 2^(2 f 2^k), treating exponent overflow as "bound huge".
fn degree_within_power_bound(delta: usize, f: usize, k: usize) -> bool {
    let exp = 1usize
        .checked_shl(k as u32)
        .and_then(|p| p.checked_mul(2))
        .and_then(|p| p.checked_mul(f));
    match exp {
        None => true,
        Some(e) if e >= 64 => true,
        Some(e) => (delta as u128) <= (1u128 << e),
    }
}

/// An increasing triple x, y, z in three distinct ascending blocks with xy
/// and xz edges but yz a non-edge. No such triple can exist: the x-to-y and
/// x-to-z walks concatenate to a y-to-z walk within y's own reach, since the
/// reach doubles per block.
pub fn find_bad_triple(g: &OrderedGraph, m: usize) -> Option<(Vertex, Vertex, Vertex)> {
    for x in 0..g.n() {
        let bx = x / m;
        for y in g.row(x).iter() {
            let by = y / m;
            if by <= bx {
                continue;
            }
            for z in g.row(x).iter() {
                if z / m > by && !g.has_edge(y, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn block_pair_bounds(bl: &Blowup, lambda: &BigRational) -> Option<Vec<BlockPairBound>> {
    if bl.m > PAIR_SUBSET_MAX {
        return None;
    }
    let grown = pow(lambda.numer() + lambda.denom(), bl.f);
    let cap = BigInt::from(bl.m * bl.m) * pow(lambda.denom().clone(), bl.f);
    let mut out = Vec::new();
    for a in 0..bl.k {
        for b in a + 1..bl.k {
            let worst = worst_cross_product(&bl.graph, a * bl.m, b * bl.m, bl.m);
            out.push(BlockPairBound {
                a,
                b,
                worst_product: worst,
                ok: BigInt::from(worst) * &grown <= cap,
            });
        }
    }
    Some(out)
}

/// Adjacency from the m vertices at `a_start` into the m vertices at
/// `b_start`, one mask per left vertex.
fn block_cross_rows(g: &OrderedGraph, a_start: usize, b_start: usize, m: usize) -> Vec<u32> {
    (0..m)
        .map(|i| {
            let mut mask = 0u32;
            for j in 0..m {
                if g.has_edge(a_start + i, b_start + j) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect()
}

/// max over X of |X| * |free(X)| where free(X) is the part of the right block
/// with no edge into X. Any cross-free pair (X, Y) has Y inside free(X), so
/// the sweep is exhaustive over pairs.
fn worst_cross_product(g: &OrderedGraph, a_start: usize, b_start: usize, m: usize) -> usize {
    let rows = block_cross_rows(g, a_start, b_start, m);
    let full = (1u32 << m) - 1;
    let mut worst = 0usize;
    for x in 0..=full {
        let mut nb = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            nb |= rows[i];
        }
        let free = (full & !nb).count_ones() as usize;
        worst = worst.max(x.count_ones() as usize * free);
    }
    worst
}

/// Largest s admitting X in the block at `a_start`, Y in the block at
/// `b_start`, |X| = |Y| = s, with no edges of g between X and Y. For fixed X
/// the best Y is the whole non-neighborhood, and trimming the larger side of
/// a valid pair keeps it valid, so max over X of min(|X|, |free|) is exact.
pub fn max_balanced_nonadjacent_pair(
    g: &OrderedGraph,
    a_start: usize,
    b_start: usize,
    m: usize,
) -> usize {
    assert!(
        m <= BLOCK_ENUM_MAX,
        "block enumeration limited to {BLOCK_ENUM_MAX} vertices"
    );
    let rows = block_cross_rows(g, a_start, b_start, m);
    let full = (1u32 << m) - 1;
    let mut best = 0usize;
    for x in 1..=full {
        let xs = x.count_ones() as usize;
        if xs <= best {
            continue;
        }
        let mut nb = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            nb |= rows[i];
        }
        let free = (full & !nb).count_ones() as usize;
        best = best.max(xs.min(free));
    }
    best
}

/// Size of the largest balanced biclique in the complement, by the exact
/// branch-and-bound oracle.
pub fn max_balanced_biclique_complement(g: &OrderedGraph) -> Result<BicliqueWitness, OracleError> {
    brute_balanced_biclique(&g.complement())
}

/// Block parameters, given directly or derived from a density target eps and
/// size n: k = ceil(2/eps), m = floor(n/k) lowered to even so a 3-regular
/// graph exists, f = ceil(log2(n) / (4 * 2^k)) raised to at least 1. The
/// flags record where the derived values deviate from the exact formulas.
#[derive(Clone, Debug)]
pub struct BlowupParams {
    pub k: usize,
    pub m: usize,
    pub f: usize,
    pub eps: Option<BigRational>,
    pub f_rounded_up: bool,
    pub n_adjusted: bool,
}

impl BlowupParams {
    pub fn explicit(k: usize, m: usize, f: usize) -> Result<Self, ConstructionError> {
        if k < 1 || m < 1 || f < 1 {
            return Err(ConstructionError::BadParams(
                "k, m, f must all be positive".into(),
            ));
        }
        Ok(BlowupParams {
            k,
            m,
            f,
            eps: None,
            f_rounded_up: false,
            n_adjusted: false,
        })
    }

    pub fn theorem(eps: &BigRational, n: usize) -> Result<Self, ConstructionError> {
        if !eps.is_positive() {
            return Err(ConstructionError::BadParams("eps must be positive".into()));
        }
        if n < 1 {
            return Err(ConstructionError::BadParams("n must be positive".into()));
        }
        let two_over = BigRational::from_integer(BigInt::from(2)) / eps.clone();
        let k = two_over
            .ceil()
            .to_integer()
            .to_usize()
            .ok_or_else(|| ConstructionError::BadParams("eps too small".into()))?
            .max(1);
        let mut m = n / k;
        let mut adjusted = m * k != n;
        if k >= 2 {
            if m % 2 == 1 {
                m -= 1;
                adjusted = true;
            }
            if m <= EXPANDER_DEGREE {
                return Err(ConstructionError::BadParams(format!(
                    "n = {n} leaves blocks of {m} vertices, too few for a {EXPANDER_DEGREE}-regular graph"
                )));
            }
        } else if m == 0 {
            return Err(ConstructionError::BadParams("n must be at least k".into()));
        }
        let fx = (n as f64).log2() / (4.0 * 2f64.powi(k.min(1000) as i32));
        let f = fx.ceil().max(1.0) as usize;
        Ok(BlowupParams {
            k,
            m,
            f,
            eps: Some(eps.clone()),
            f_rounded_up: (f as f64) > fx,
            n_adjusted: adjusted,
        })
    }

    pub fn n(&self) -> usize {
        self.k * self.m
    }
}

/// Everything the builder claims about its output, each item re-derived from
/// the finished graph. Reports skipped for size come back as None and do not
/// count against `all_ok`.
#[derive(Clone, Debug)]
pub struct ConstructionCertificate {
    pub max_degree: usize,
    pub degree_cap: usize,
    pub max_degree_ok: bool,
    pub eps_degree_ok: Option<bool>,
    pub blowup_degree_ok: bool,
    pub bad_triple: Option<(Vertex, Vertex, Vertex)>,
    pub pattern_s_free: bool,
    pub pattern_p_free: bool,
    pub pair_bounds: Option<Vec<BlockPairBound>>,
    pub biclique: Option<BicliqueReport>,
    pub lambda: BigRational,
    pub certify_mode: CertifyMode,
    pub delta: f64,
}

impl ConstructionCertificate {
    pub fn all_ok(&self) -> bool {
        self.max_degree_ok
            && self.eps_degree_ok.unwrap_or(true)
            && self.blowup_degree_ok
            && self.bad_triple.is_none()
            && self.pattern_s_free
            && self.pattern_p_free
            && self
                .pair_bounds
                .as_ref()
                .map_or(true, |v| v.iter().all(|p| p.ok))
            && self.biclique.as_ref().map_or(true, |b| b.pigeonhole_ok)
    }
}

/// Oracle biclique size on the complement against the per-block-pair
/// balanced search: a biclique of size b in the complement pins parts of
/// size >= b/k into two distinct blocks with no cross edges, so
/// b <= k * best block pair.
#[derive(Clone, Debug)]
pub struct BicliqueReport {
    pub size: usize,
    pub block_pair_best: usize,
    pub pigeonhole_ok: bool,
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub graph: OrderedGraph,
    pub params: BlowupParams,
    pub expander: Option<CertifiedExpander>,
    pub blowup: Option<Blowup>,
    pub certificate: ConstructionCertificate,
}

/// Dense yet S-free and P-free graph on k*m vertices: expander blow-up cross
/// edges plus internally complete blocks. k = 1 degenerates to the complete
/// graph and needs no expander.
pub fn build_counterexample(
    params: &BlowupParams,
    certify: CertifyMode,
    seed: u64,
) -> Result<ConstructionReport, ConstructionError> {
    let (k, m, f) = (params.k, params.m, params.f);
    if k < 1 || m < 1 || f < 1 {
        return Err(ConstructionError::BadParams(
            "k, m, f must all be positive".into(),
        ));
    }
    let n = params.n();

    let (expander, blowup) = if k == 1 {
        (None, None)
    } else {
        let h = random_regular(m, EXPANDER_DEGREE, substream(seed, "construct-expander", 0))?;
        let ce = certify_expansion(&h, certify, substream(seed, "construct-certify", 0))?;
        let bl = build_blowup(&ce, k, f, Labeling::Identity)?;
        (Some(ce), Some(bl))
    };

    let mut g = match &blowup {
        Some(bl) => bl.graph.clone(),
        None => OrderedGraph::new(n),
    };
    for a in 0..k {
        for x in a * m..(a + 1) * m {
            for y in x + 1..(a + 1) * m {
                g.add_edge(x, y);
            }
        }
    }

    let lambda = expander
        .as_ref()
        .map(|ce| ce.lambda.clone())
        .unwrap_or_else(BigRational::zero);
    let bcheck = blowup.as_ref().map(|bl| check_blowup(bl, &lambda));
    let blowup_delta = blowup.as_ref().map_or(0, |bl| bl.graph.max_degree());

    let max_degree = g.max_degree();
    let degree_cap = m - 1 + blowup_delta;
    let eps_degree_ok = params.eps.as_ref().map(|eps| {
        BigInt::from(max_degree) * eps.denom() <= BigInt::from(n) * eps.numer()
    });

    let pattern_s_free = find_induced(&g, &OrderedPattern::star_s()).is_none();
    let pattern_p_free = find_induced(&g, &OrderedPattern::pattern_p()).is_none();

    let biclique = if n <= OracleBudget::current().biclique && m <= BLOCK_ENUM_MAX {
        let w = brute_balanced_biclique(&g.complement())?;
        let mut best = 0;
        for a in 0..k {
            for b in a + 1..k {
                best = best.max(max_balanced_nonadjacent_pair(&g, a * m, b * m, m));
            }
        }
        Some(BicliqueReport {
            size: w.size,
            block_pair_best: best,
            pigeonhole_ok: k * best >= w.size,
        })
    } else {
        None
    };

    let delta = (1.0 + lambda.to_f64().unwrap_or(0.0)).log2() / 2f64.powi(k.min(1000) as i32);

    let certificate = ConstructionCertificate {
        max_degree,
        degree_cap,
        max_degree_ok: max_degree <= degree_cap,
        eps_degree_ok,
        blowup_degree_ok: bcheck.as_ref().map_or(true, |c| c.degree_bound_ok),
        bad_triple: bcheck.as_ref().and_then(|c| c.bad_triple),
        pattern_s_free,
        pattern_p_free,
        pair_bounds: bcheck.and_then(|c| c.pair_bounds),
        biclique,
        lambda,
        certify_mode: certify,
        delta,
    };

    Ok(ConstructionReport {
        graph: g,
        params: params.clone(),
        expander,
        blowup,
        certificate,
    })
}
