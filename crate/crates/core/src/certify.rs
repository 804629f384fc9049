//! Deciding whether a graph is symmetric with respect to graph entropy,
//! meaning the uniform distribution maximizes `H(G, ·)`, equivalently
//! `H(G, U) = log₂ χ_f(G)`. Each route returns a machine-checkable
//! certificate: a clique cover, a perfect matching, KKT multipliers, or
//! the numeric pair itself; refusals carry an explicit witness.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::combin::{self, CliqueCover};
use crate::dist::Distribution;
use crate::entropy::{
    entropy_upper_bound_from_point, graph_entropy, kkt_residual_line_graph, FeasiblePoint,
    KktCertificate,
};
use crate::error::Error;
use crate::fractional;
use crate::graph::Graph;
use crate::math;
use crate::rational;

pub const PERFECTION_CAP: usize = 14;

/// Witness that a graph is not perfect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerfectionWitness {
    /// Induced odd cycle of length at least 5.
    OddHole(VertexSet),
    /// Induced odd cycle of length at least 5 in the complement.
    OddAntihole(VertexSet),
}

/// Perfection by exhaustive odd hole/antihole scan; sound and complete
/// at this scale by the strong perfect graph theorem.
pub fn is_perfect(g: &Graph) -> Result<(bool, Option<PerfectionWitness>), Error> {
    if g.n() > PERFECTION_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "is_perfect",
            limit: PERFECTION_CAP,
            got: g.n(),
        });
    }
    let comp = g.complement();
    for mask in 1u64..1 << g.n() {
        let size = mask.count_ones() as usize;
        if size < 5 || size % 2 == 0 {
            continue;
        }
        let u = VertexSet(mask);
        if induces_cycle(g, u) {
            return Ok((false, Some(PerfectionWitness::OddHole(u))));
        }
        if induces_cycle(&comp, u) {
            return Ok((false, Some(PerfectionWitness::OddAntihole(u))));
        }
    }
    Ok((true, None))
}

/// Does `u` induce a single cycle (2-regular and connected)?
fn induces_cycle(g: &Graph, u: VertexSet) -> bool {
    for v in u.iter() {
        if g.neighbors_set(v).intersection(u).len() != 2 {
            return false;
        }
    }
    // Walk the 2-regular subgraph from the smallest member.
    let start = u.min().expect("nonempty");
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for w in g.neighbors_set(v).intersection(u).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                frontier.push(w);
            }
        }
    }
    seen == u
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Symmetric,
    NotSymmetric,
    /// No structural route applied and the numeric route was not asked for.
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    PerfectCover,
    BipartiteMatching,
    VertexTransitive,
    KGraphLine,
    Numeric,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    CliqueCover(CliqueCover),
    Matching(Vec<(usize, usize)>),
    Kkt(KktCertificate),
    /// Vertex transitivity itself: the uniform distribution is invariant
    /// under a transitive automorphism group, hence maximizing.
    VertexTransitivity,
    Numeric { entropy_bits: f64, log2_chi_f: f64 },
}

/// A set witnessing non-symmetry, with the objective bound it achieves
/// where one is evaluated (the perfect route's distribution bound).
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub witness_set: VertexSet,
    pub bound_bits: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct SymmetryVerdict {
    pub verdict: Verdict,
    pub route: Route,
    pub certificate: Option<Certificate>,
    pub counterexample: Option<Counterexample>,
}

/// Symmetry of a perfect graph: symmetric exactly when the vertex set
/// partitions into maximum cliques. On failure the returned witness is a
/// maximum independent set `S`; spreading extra mass onto `S` beats the
/// uniform value, shown by evaluating the objective at the feasible
/// point `x̄` (`|S|/n` on `S`, `(1−|S|/n)/(ω−1)` elsewhere), which stays
/// strictly below `log₂ ω = log₂ χ_f`.
pub fn certify_symmetric_perfect(g: &Graph) -> Result<SymmetryVerdict, Error> {
    let (perfect, _) = is_perfect(g)?;
    if !perfect {
        return Err(Error::NotPerfect);
    }
    if let Some(cover) = combin::clique_cover_by_max_cliques(g)? {
        return Ok(SymmetryVerdict {
            verdict: Verdict::Symmetric,
            route: Route::PerfectCover,
            certificate: Some(Certificate::CliqueCover(cover)),
            counterexample: None,
        });
    }
    let n = g.n();
    let (omega, _) = combin::maximum_cliques(g)?;
    debug_assert!(omega >= 2, "an edgeless graph is its own singleton cover");
    let sets = combin::maximal_independent_sets(g)?;
    let alpha = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let s = *sets.iter().find(|s| s.len() == alpha).expect("nonempty list");
    // No cover forces α(G) > n/ω(G) in a perfect graph.
    debug_assert!(alpha * omega > n);
    let t = alpha as f64 / n as f64;
    let off = (1.0 - t) / (omega as f64 - 1.0);
    let x: Vec<f64> = (0..n).map(|v| if s.contains(v) { t } else { off }).collect();
    let bound = entropy_upper_bound_from_point(
        g,
        &Distribution::uniform(n),
        FeasiblePoint::DenseClique(&x),
    )?;
    assert!(
        bound < math::log2(omega as f64),
        "witness bound {bound} must beat log2(omega)"
    );
    Ok(SymmetryVerdict {
        verdict: Verdict::NotSymmetric,
        route: Route::PerfectCover,
        certificate: None,
        counterexample: Some(Counterexample { witness_set: s, bound_bits: Some(bound) }),
    })
}

/// Symmetry of a bipartite graph without isolated vertices: symmetric
/// exactly when a perfect matching exists; otherwise a Hall-violating
/// set on the deficient side is returned.
pub fn certify_symmetric_bipartite(
    g: &Graph,
    parts: (&[usize], &[usize]),
) -> Result<SymmetryVerdict, Error> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let matching = combin::maximum_matching_bipartite(g, parts)?;
    if 2 * matching.len() == g.n() {
        return Ok(SymmetryVerdict {
            verdict: Verdict::Symmetric,
            route: Route::BipartiteMatching,
            certificate: Some(Certificate::Matching(matching)),
            counterexample: None,
        });
    }
    let witness = hall_violator(g, parts, &matching);
    Ok(SymmetryVerdict {
        verdict: Verdict::NotSymmetric,
        route: Route::BipartiteMatching,
        certificate: None,
        counterexample: Some(Counterexample { witness_set: witness, bound_bits: None }),
    })
}

/// A set `D` on an unsaturated side with `|N(D)| < |D|`, by alternating
/// reachability from the unmatched vertices.
fn hall_violator(g: &Graph, parts: (&[usize], &[usize]), matching: &[(usize, usize)]) -> VertexSet {
    let mut mate = vec![usize::MAX; g.n()];
    for &(u, v) in matching {
        mate[u] = v;
        mate[v] = u;
    }
    let (a, b) = parts;
    let side: &[usize] = if a.iter().any(|&v| mate[v] == usize::MAX) { a } else { b };
    let mut d = VertexSet::EMPTY;
    let mut reached = VertexSet::EMPTY;
    let mut frontier: Vec<usize> =
        side.iter().copied().filter(|&v| mate[v] == usize::MAX).collect();
    for &v in &frontier {
        d.insert(v);
    }
    while let Some(u) = frontier.pop() {
        for &w in g.neighbors(u) {
            if reached.contains(w) {
                continue;
            }
            reached.insert(w);
            let back = mate[w];
            if back != usize::MAX && !d.contains(back) {
                d.insert(back);
                frontier.push(back);
            }
        }
    }
    debug_assert!(reached.len() < d.len());
    d
}

/// Symmetry of the line graph of a k-graph (`k ≥ 3`): certified by the
/// uniform KKT multipliers on the matching polytope of the root, and
/// cross-checked against the solver value `log₂ k`.
pub fn certify_symmetric_line_of_kgraph(g1: &Graph) -> Result<SymmetryVerdict, Error> {
    match fractional::is_k_graph(g1)? {
        fractional::KGraphVerdict::NotRegular => {
            return Err(Error::NotKGraph { witness: None })
        }
        fractional::KGraphVerdict::OddCutViolation { witness, .. } => {
            return Err(Error::NotKGraph { witness: Some(witness) })
        }
        fractional::KGraphVerdict::Yes { k } => {
            if k < 3 {
                return Err(Error::KBelowThree(k));
            }
            let cert = KktCertificate::uniform_k_graph(g1, k);
            let p = Distribution::uniform(g1.m());
            let residual = kkt_residual_line_graph(g1, &p, &cert)?;
            assert!(residual <= 1e-12, "KKT residual {residual} too large");
            let (line, _) = g1.line_graph()?;
            let r = graph_entropy(&line, &Distribution::uniform(line.n()), 1e-9)?;
            let target = math::log2(k as f64);
            assert!(
                math::abs(r.value_bits - target) <= 1e-6 + r.gap_bits,
                "line-graph entropy {} vs log2(k) {target}",
                r.value_bits
            );
            Ok(SymmetryVerdict {
                verdict: Verdict::Symmetric,
                route: Route::KGraphLine,
                certificate: Some(Certificate::Kkt(cert)),
                counterexample: None,
            })
        }
    }
}

/// Symmetry of the line graph of a bridgeless cubic graph; delegates to
/// the k-graph route after checking the hypotheses structurally.
pub fn certify_symmetric_bridgeless_cubic(g1: &Graph) -> Result<SymmetryVerdict, Error> {
    if g1.regularity() != Some(3) {
        return Err(Error::NotCubic);
    }
    if let Some(&(u, v)) = g1.bridges().first() {
        return Err(Error::HasBridge(u, v));
    }
    let verdict = certify_symmetric_line_of_kgraph(g1)?;
    debug_assert_eq!(verdict.verdict, Verdict::Symmetric);
    Ok(verdict)
}

/// The fallback oracle: compares `H(G, U)` against `log₂ χ_f(G)` with
/// the LP side exact. Ground truth for every structural route.
pub fn certify_symmetric_numeric(g: &Graph, tol_bits: f64) -> Result<SymmetryVerdict, Error> {
    let (chi_f, _) = fractional::fractional_chromatic_number(g)?;
    let log2_chi_f = math::log2(rational::to_f64(&chi_f));
    let r = graph_entropy(g, &Distribution::uniform(g.n()), tol_bits)?;
    let symmetric = math::abs(r.value_bits - log2_chi_f) <= tol_bits + r.gap_bits;
    Ok(SymmetryVerdict {
        verdict: if symmetric { Verdict::Symmetric } else { Verdict::NotSymmetric },
        route: Route::Numeric,
        certificate: Some(Certificate::Numeric {
            entropy_bits: r.value_bits,
            log2_chi_f,
        }),
        counterexample: None,
    })
}

/// Structural dispatch: vertex transitivity, then the bipartite matching
/// route, then the perfect route; `Undecided` when none applies. The
/// numeric route never runs here; callers opt into it explicitly.
pub fn certify_symmetric_auto(g: &Graph) -> Result<SymmetryVerdict, Error> {
    if g.n() <= 16 {
        if let Ok(true) = g.is_vertex_transitive() {
            return Ok(SymmetryVerdict {
                verdict: Verdict::Symmetric,
                route: Route::VertexTransitive,
                certificate: Some(Certificate::VertexTransitivity),
                counterexample: None,
            });
        }
    }
    if let Some((a, b)) = g.bipartition() {
        if (0..g.n()).all(|v| g.degree(v) > 0) {
            return certify_symmetric_bipartite(g, (&a, &b));
        }
    }
    if g.n() <= PERFECTION_CAP {
        if let (true, _) = is_perfect(g)? {
            return certify_symmetric_perfect(g);
        }
    }
    Ok(SymmetryVerdict {
        verdict: Verdict::Undecided,
        route: Route::Numeric,
        certificate: None,
        counterexample: None,
    })
}
