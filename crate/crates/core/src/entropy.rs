//! The entropy program `H(G,P) = min_{a ∈ VP(G)} Σ p_i log₂(1/a_i)`,
//! solved by Frank–Wolfe with the max-weight independent-set oracle as
//! the linear minimization step, plus Shannon/binary entropy and the KKT
//! stationarity checker for matching-polytope certificates.
//!
//! The solver maintains the iterate as an explicit convex combination of
//! independent-set indicators, so the returned minimizer certifies its
//! own polytope membership. Away steps over that active set are on by
//! default; they restore linear convergence when the optimum sits on a
//! face, which the plain variant approaches only at a `1/k` rate.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::combin;
use crate::dist::Distribution;
use crate::error::Error;
use crate::graph::Graph;
use crate::math::{self, LN_2};
use crate::polytope::PolytopePoint;

/// Shannon entropy of a distribution, in bits, with `0·log(1/0) = 0`.
pub fn shannon_entropy(p: &Distribution) -> f64 {
    math::entropy_bits(&p.to_floats())
}

/// Binary entropy `h(x) = −x log₂ x − (1−x) log₂(1−x)` on `[0, 1]`.
pub fn binary_entropy(x: f64) -> Result<f64, Error> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError(alloc::format!(
            "binary_entropy argument {x} outside [0,1]"
        )));
    }
    Ok(math::xlog2_inv(x) + math::xlog2_inv(1.0 - x))
}

/// Objective `Σ_{p_i>0} p_i log₂(1/a_i)` in bits.
pub fn objective_bits(p: &[f64], a: &[f64]) -> f64 {
    p.iter()
        .zip(a.iter())
        .filter(|(&pi, _)| pi > 0.0)
        .map(|(&pi, &ai)| -pi * math::log2(ai))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FwVariant {
    /// Classic Frank–Wolfe; sublinear on boundary optima.
    Plain,
    /// Frank–Wolfe with away steps over the active set.
    AwayStep,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    pub variant: FwVariant,
    pub max_iterations: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { variant: FwVariant::AwayStep, max_iterations: 1_000_000 }
    }
}

/// Outcome of the entropy program: the true optimum lies in
/// `[value_bits − gap_bits, value_bits]`.
#[derive(Clone, Debug)]
pub struct EntropyResult {
    pub value_bits: f64,
    pub gap_bits: f64,
    pub minimizer: PolytopePoint,
    pub iterations: u64,
}

/// Solves the entropy program to a certified Frank–Wolfe gap of
/// `tol_bits` with default options.
pub fn graph_entropy(g: &Graph, p: &Distribution, tol_bits: f64) -> Result<EntropyResult, Error> {
    graph_entropy_with_options(g, p, tol_bits, SolverOptions::default())
}

pub fn graph_entropy_with_options(
    g: &Graph,
    p: &Distribution,
    tol_bits: f64,
    opts: SolverOptions,
) -> Result<EntropyResult, Error> {
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    assert!(tol_bits > 0.0);
    if g.n() == 0 {
        let minimizer = PolytopePoint::from_support(g, vec![(VertexSet::EMPTY, 1.0)])?;
        return Ok(EntropyResult { value_bits: 0.0, gap_bits: 0.0, minimizer, iterations: 0 });
    }
    let pf = p.to_floats();

    // Start from the uniform average of all maximal independent sets:
    // every vertex lies in one, so the objective is finite at the start.
    let sets = combin::maximal_independent_sets(g)?;
    let mut lambda: BTreeMap<VertexSet, f64> =
        sets.iter().map(|&s| (s, 1.0 / sets.len() as f64)).collect();
    let mut a = dense_of(&lambda, g.n());

    let mut iterations = 0u64;
    let mut gap_bits;
    loop {
        // Oracle weights p_i/a_i; the linear minimization over VP(G) is a
        // max-weight independent set since the gradient is nonpositive.
        let weights: Vec<f64> = (0..g.n())
            .map(|i| if pf[i] > 0.0 { pf[i] / a[i].max(1e-300) } else { 0.0 })
            .collect();
        let (fw_set, _) = combin::max_weight_independent_set(g, &weights);

        // Frank–Wolfe gap ⟨∇f(a), a − s⟩, in bits.
        gap_bits = (0..g.n())
            .filter(|&i| pf[i] > 0.0)
            .map(|i| pf[i] * (ind(fw_set, i) - a[i]) / (a[i] * LN_2))
            .sum::<f64>()
            .max(0.0);
        if gap_bits <= tol_bits {
            break;
        }
        if iterations >= opts.max_iterations {
            return Err(Error::NonconvergenceAfterMaxIters { iterations, gap_bits });
        }
        iterations += 1;

        // Away candidate: the active set most aligned with the gradient.
        let away = match opts.variant {
            FwVariant::Plain => None,
            FwVariant::AwayStep => lambda
                .iter()
                .filter(|&(_, &l)| l > 0.0)
                .map(|(&s, &l)| {
                    let score: f64 = s
                        .iter()
                        .filter(|&i| pf[i] > 0.0)
                        .map(|i| -pf[i] / (a[i] * LN_2))
                        .sum();
                    (s, l, score)
                })
                .max_by(|x, y| x.2.partial_cmp(&y.2).unwrap().then(x.0.cmp(&y.0))),
        };

        // Improvement of the away direction a − v_J is ⟨∇f, v_J − a⟩ =
        // score(v_J) − ⟨∇f, a⟩; comparing against the FW improvement.
        let grad_dot_a: f64 = (0..g.n())
            .filter(|&i| pf[i] > 0.0)
            .map(|i| -pf[i] / LN_2)
            .sum();
        let use_away = match away {
            Some((_, _, score)) => {
                let away_gain = score - grad_dot_a;
                away_gain > gap_bits && lambda.len() > 1
            }
            None => false,
        };

        if use_away {
            let (away_set, away_lambda, _) = away.unwrap();
            // Direction a − 1_J, maximum step λ_J / (1 − λ_J).
            let d: Vec<f64> = (0..g.n()).map(|i| a[i] - ind(away_set, i)).collect();
            let t_max = away_lambda / (1.0 - away_lambda).max(f64::MIN_POSITIVE);
            let t = line_search(&pf, &a, &d, t_max);
            for (_, l) in lambda.iter_mut() {
                *l *= 1.0 + t;
            }
            let entry = lambda.get_mut(&away_set).expect("active");
            *entry -= t;
            if *entry <= 1e-15 {
                lambda.remove(&away_set);
            }
        } else {
            let d: Vec<f64> = (0..g.n()).map(|i| ind(fw_set, i) - a[i]).collect();
            let t = line_search(&pf, &a, &d, 1.0);
            for (_, l) in lambda.iter_mut() {
                *l *= 1.0 - t;
            }
            *lambda.entry(fw_set).or_insert(0.0) += t;
            lambda.retain(|_, l| *l > 1e-300);
        }
        // Rebuilding from the convex weights keeps the point inside the
        // polytope; incremental updates can drift below zero.
        a = dense_of(&lambda, g.n());
    }

    // Rebuild the point from its support so the returned value and the
    // certificate are consistent by construction.
    let mut support: Vec<(VertexSet, f64)> =
        lambda.iter().map(|(&s, &l)| (s, l)).collect();
    let total: f64 = support.iter().map(|&(_, l)| l).sum();
    for (_, l) in support.iter_mut() {
        *l /= total;
    }
    let minimizer = PolytopePoint::from_support(g, support)?;
    let value_bits = objective_bits(&pf, minimizer.dense());
    Ok(EntropyResult { value_bits, gap_bits, minimizer, iterations })
}

#[inline]
fn ind(s: VertexSet, i: usize) -> f64 {
    if s.contains(i) {
        1.0
    } else {
        0.0
    }
}

fn dense_of(lambda: &BTreeMap<VertexSet, f64>, n: usize) -> Vec<f64> {
    let mut a = vec![0.0f64; n];
    for (&s, &l) in lambda {
        for v in s.iter() {
            a[v] += l;
        }
    }
    a
}

/// Exact univariate minimization of the (convex) objective along
/// `a + t·d`, `t ∈ [0, t_max]`, by bisection on the derivative.
fn line_search(p: &[f64], a: &[f64], d: &[f64], t_max: f64) -> f64 {
    let phi_prime = |t: f64| -> f64 {
        let mut sum = 0.0;
        for (&pi, (&ai, &di)) in p.iter().zip(a.iter().zip(d.iter())) {
            if pi <= 0.0 {
                continue;
            }
            let coord = ai + t * di;
            // Outside the objective's domain the derivative blows up; a
            // nonpositive coordinate past the boundary must not be read
            // as descent.
            if coord <= 0.0 {
                return f64::INFINITY;
            }
            sum += -pi * di / coord;
        }
        sum
    };
    if phi_prime(0.0) >= 0.0 {
        return 0.0;
    }
    // Keep strictly inside the domain: coordinates with p_i > 0 must stay
    // positive, so back off the upper end until the derivative is finite.
    let mut hi = t_max;
    let mut lo = 0.0f64;
    let mut dhi = phi_prime(hi);
    let mut guard = 0;
    while !dhi.is_finite() && guard < 128 {
        hi = lo + 0.5 * (hi - lo);
        dhi = phi_prime(hi);
        guard += 1;
    }
    if dhi <= 0.0 {
        return hi;
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if phi_prime(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// How a candidate point proves membership of `VP(G)`.
pub enum FeasiblePoint<'a> {
    /// Membership certified by an explicit convex decomposition.
    Support(&'a PolytopePoint),
    /// Dense vector checked against all clique inequalities; valid as a
    /// `VP(G)` certificate when `G` is perfect (`FVP = VP`).
    DenseClique(&'a [f64]),
}

/// Evaluates `Σ p_i log₂(1/a_i)` at a feasible point, an upper bound on
/// `H(G,P)`.
pub fn entropy_upper_bound_from_point(
    g: &Graph,
    p: &Distribution,
    point: FeasiblePoint<'_>,
) -> Result<f64, Error> {
    let pf = p.to_floats();
    if pf.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: pf.len() });
    }
    let dense: Vec<f64> = match point {
        FeasiblePoint::Support(pt) => {
            if pt.dim() != g.n() {
                return Err(Error::DimensionMismatch { expected: g.n(), got: pt.dim() });
            }
            // Re-validate the decomposition against this graph.
            PolytopePoint::from_support(g, pt.support().to_vec())?;
            pt.dense().to_vec()
        }
        FeasiblePoint::DenseClique(x) => {
            if x.len() != g.n() {
                return Err(Error::DimensionMismatch { expected: g.n(), got: x.len() });
            }
            if let Some(i) = x.iter().position(|&v| v < 0.0) {
                return Err(Error::InfeasiblePoint(alloc::format!(
                    "negative coordinate at {i}"
                )));
            }
            // All clique inequalities reduce to maximal-clique ones; the
            // maximal cliques are the maximal independent sets of the
            // complement.
            let maximal_cliques = combin::maximal_independent_sets(&g.complement())?;
            for k in maximal_cliques {
                let total: f64 = k.iter().map(|v| x[v]).sum();
                if total > 1.0 + 1e-9 {
                    return Err(Error::InfeasiblePoint(alloc::format!(
                        "clique inequality violated on {k:?}: {total}"
                    )));
                }
            }
            x.to_vec()
        }
    };
    Ok(objective_bits(&pf, &dense))
}

/// Multipliers claimed to certify a minimizer of the entropy objective
/// over the matching polytope of a root graph: `x` lives on edges,
/// `lambda` on vertices, `gamma` (sparse) on odd vertex sets.
#[derive(Clone, Debug)]
pub struct KktCertificate {
    pub x: Vec<f64>,
    pub lambda: Vec<f64>,
    pub gamma: Vec<(VertexSet, f64)>,
}

impl KktCertificate {
    /// The closed-form certificate for a `k`-regular root: `x = 1/k` on
    /// every edge, `λ_v = k/2m`, `γ = 0`.
    pub fn uniform_k_graph(g1: &Graph, k: usize) -> Self {
        let m = g1.m() as f64;
        KktCertificate {
            x: vec![1.0 / k as f64; g1.m()],
            lambda: vec![k as f64 / (2.0 * m); g1.n()],
            gamma: Vec::new(),
        }
    }
}

/// Maximum violation, over stationarity, primal feasibility and
/// complementary slackness, of the matching-polytope KKT system at the
/// given certificate. `p` is a distribution on the edges of `g1`.
pub fn kkt_residual_line_graph(
    g1: &Graph,
    p: &Distribution,
    cert: &KktCertificate,
) -> Result<f64, Error> {
    let m = g1.m();
    if p.len() != m {
        return Err(Error::DimensionMismatch { expected: m, got: p.len() });
    }
    if cert.x.len() != m {
        return Err(Error::DimensionMismatch { expected: m, got: cert.x.len() });
    }
    if cert.lambda.len() != g1.n() {
        return Err(Error::DimensionMismatch { expected: g1.n(), got: cert.lambda.len() });
    }
    let pf = p.to_floats();
    for (e, (&pe, &xe)) in pf.iter().zip(cert.x.iter()).enumerate() {
        if pe > 0.0 && xe <= 0.0 {
            return Err(Error::InfeasiblePoint(alloc::format!(
                "x must be positive on edge {e} carrying mass"
            )));
        }
    }

    let mut residual = 0.0f64;
    let edges = g1.edges();

    // Stationarity: −p_e/x_e + (λ_u + λ_v) + Σ_{U ⊇ e} γ_U per edge.
    for (e, &(u, v)) in edges.iter().enumerate() {
        let gamma_sum: f64 = cert
            .gamma
            .iter()
            .filter(|(set, _)| set.contains(u) && set.contains(v))
            .map(|&(_, g)| g)
            .sum();
        let grad = if pf[e] > 0.0 { -pf[e] / cert.x[e] } else { 0.0 };
        residual = residual.max(math::abs(grad + cert.lambda[u] + cert.lambda[v] + gamma_sum));
        // Nonnegativity of x.
        residual = residual.max(-cert.x[e]);
    }

    // Multiplier signs.
    for &l in &cert.lambda {
        residual = residual.max(-l);
    }
    for &(_, gm) in &cert.gamma {
        residual = residual.max(-gm);
    }

    // Degree constraints and their complementary slackness.
    for v in 0..g1.n() {
        let x_delta: f64 = edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| a == v || b == v)
            .map(|(e, _)| cert.x[e])
            .sum();
        residual = residual.max(x_delta - 1.0);
        residual = residual.max(math::abs(cert.lambda[v] * (x_delta - 1.0)));
    }

    // Odd-set constraints (all of them for feasibility, sparse γ for
    // slackness).
    if g1.n() > combin::ODD_CUT_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "kkt_residual_line_graph",
            limit: combin::ODD_CUT_CAP,
            got: g1.n(),
        });
    }
    for mask in 1u64..1 << g1.n() {
        let size = mask.count_ones() as usize;
        if size % 2 == 0 || size < 3 {
            continue;
        }
        let u = VertexSet(mask);
        let inside: f64 = edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| u.contains(a) && u.contains(b))
            .map(|(e, _)| cert.x[e])
            .sum();
        residual = residual.max(inside - (size / 2) as f64);
    }
    for &(u, gm) in &cert.gamma {
        let size = u.len();
        let inside: f64 = edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| u.contains(a) && u.contains(b))
            .map(|(e, _)| cert.x[e])
            .sum();
        residual = residual.max(math::abs(gm * (inside - (size / 2) as f64)));
    }

    Ok(residual.max(0.0))
}
