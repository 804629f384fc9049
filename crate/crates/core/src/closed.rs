//! Closed-form entropy evaluations: complete graphs, complete
//! multipartite graphs, disconnected graphs, and the block-decomposition
//! bipartite formula. These double as fast paths and as independent
//! cross-checks of the Frank–Wolfe solver.

use alloc::vec::Vec;

use crate::dist::Distribution;
use crate::entropy::{binary_entropy, graph_entropy, shannon_entropy};
use crate::error::Error;
use crate::graph::Graph;
use crate::math;
use crate::rational::Rational;

/// `H(K_n, P) = H(P)`.
pub fn complete_graph_entropy(p: &Distribution) -> f64 {
    shannon_entropy(p)
}

/// Entropy of a complete multipartite graph: aggregate `P` over the
/// parts and take Shannon entropy of the aggregate. The parts are
/// recovered as the components of the complement, each of which must be
/// complete there.
pub fn multipartite_entropy(g: &Graph, p: &Distribution) -> Result<f64, Error> {
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    let comp = g.complement();
    let (parts, _) = comp.components();
    for part in &parts {
        let (sub, _) = comp.induced_subgraph(part);
        if sub.m() * 2 != part.len() * (part.len() - 1) {
            return Err(Error::NotCompleteMultipartite);
        }
    }
    let masses: Vec<f64> = parts
        .iter()
        .map(|part| part.iter().map(|&v| p.get_f64(v)).sum())
        .collect();
    Ok(math::entropy_bits(&masses))
}

/// Per-component decomposition `H(G,P) = Σ_i P(V_i) · H(G_i, P_i)`.
/// Returns the total and the per-component `(vertices, mass, entropy)`
/// breakdown; zero-mass components contribute zero and are not solved.
pub fn components_entropy(
    g: &Graph,
    p: &Distribution,
    tol_bits: f64,
) -> Result<(f64, Vec<(Vec<usize>, f64, f64)>), Error> {
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    let (parts, _) = g.components();
    let mut breakdown = Vec::with_capacity(parts.len());
    let mut total = 0.0f64;
    for part in parts {
        let mass: f64 = part.iter().map(|&v| p.get_f64(v)).sum();
        if mass <= 0.0 {
            breakdown.push((part, 0.0, 0.0));
            continue;
        }
        let (sub, old) = g.induced_subgraph(&part);
        let renorm: Vec<f64> = old.iter().map(|&v| p.get_f64(v) / mass).collect();
        let local = Distribution::new_float(renorm)?;
        let r = graph_entropy(&sub, &local, tol_bits)?;
        total += mass * r.value_bits;
        breakdown.push((part, mass, r.value_bits));
    }
    Ok((total, breakdown))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteCase {
    /// `P(D)/P(A) ≤ P(N(D))/P(B)` for every `D ⊆ A`; value is `h(P(A))`.
    NeighborhoodCondition,
    /// Block partition `A = D_1∪…∪D_k`, `B = U_1∪…∪U_k` with
    /// `H = Σ P(D_i∪U_i)·h(P(D_i)/P(D_i∪U_i))`.
    Partition,
}

#[derive(Clone, Debug)]
pub struct BipartiteEntropyReport {
    pub case: BipartiteCase,
    pub value_bits: f64,
    /// Present in the partition case: `(D_i, U_i, block value)` triples.
    pub blocks: Option<Vec<(Vec<usize>, Vec<usize>, f64)>>,
}

const KM_TOTAL_CAP: usize = 20;
const KM_PARTITION_CAP: usize = 8;

/// The bipartite entropy formula for parts `(A, B)` as
/// given (no auto-swap; see [`bipartite_entropy_either`]).
///
/// The neighborhood condition is checked exhaustively over nonempty
/// `D ⊆ A`, exactly when `P` is rational. In the partition case the
/// blocks are reconstructed greedily (peel the maximal subset of `A`
/// with the highest `P(D)/P(N(D))` ratio) and the resulting value is
/// validated against the solver to `1e-6`; a mismatch reports
/// [`Error::PartitionNotFound`].
pub fn bipartite_entropy(
    g: &Graph,
    parts: (&[usize], &[usize]),
    p: &Distribution,
) -> Result<BipartiteEntropyReport, Error> {
    let (a, b) = parts;
    if g.n() > KM_TOTAL_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "bipartite_entropy",
            limit: KM_TOTAL_CAP,
            got: g.n(),
        });
    }
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    // Validate the bipartition as given.
    g.bipartite_neighborhood((a, b), &[])?;
    let mass_a: f64 = a.iter().map(|&v| p.get_f64(v)).sum();
    let mass_b: f64 = b.iter().map(|&v| p.get_f64(v)).sum();
    if mass_a <= 0.0 || mass_b <= 0.0 {
        return Err(Error::DomainError(alloc::format!(
            "both parts need positive mass (P(A)={mass_a}, P(B)={mass_b})"
        )));
    }

    if neighborhood_condition_holds(g, a, b, p) {
        return Ok(BipartiteEntropyReport {
            case: BipartiteCase::NeighborhoodCondition,
            value_bits: binary_entropy(mass_a)?,
            blocks: None,
        });
    }

    if a.len() > KM_PARTITION_CAP || b.len() > KM_PARTITION_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "bipartite_entropy partition case",
            limit: KM_PARTITION_CAP,
            got: a.len().max(b.len()),
        });
    }
    let blocks = greedy_blocks(g, a, b, p);
    let value: f64 = blocks.iter().map(|&(_, _, v)| v).sum();

    // The theorem asserts the partition exists; the reconstruction is
    // validated against the solver rather than trusted.
    let solver = graph_entropy(g, p, 1e-8)?;
    if math::abs(value - solver.value_bits) > 1e-6 {
        return Err(Error::PartitionNotFound);
    }
    Ok(BipartiteEntropyReport {
        case: BipartiteCase::Partition,
        value_bits: value,
        blocks: Some(blocks),
    })
}

/// Convenience wrapper trying both orientations of the parts; returns
/// the report of the orientation where the neighborhood condition holds,
/// or the partition case for the given orientation when neither does.
pub fn bipartite_entropy_either(
    g: &Graph,
    parts: (&[usize], &[usize]),
    p: &Distribution,
) -> Result<BipartiteEntropyReport, Error> {
    let (a, b) = parts;
    match bipartite_entropy(g, (a, b), p) {
        Ok(r) if r.case == BipartiteCase::NeighborhoodCondition => Ok(r),
        first => match bipartite_entropy(g, (b, a), p) {
            Ok(r) if r.case == BipartiteCase::NeighborhoodCondition => Ok(r),
            _ => first,
        },
    }
}

fn neighborhood_condition_holds(g: &Graph, a: &[usize], b: &[usize], p: &Distribution) -> bool {
    // P(D)/P(A) ≤ P(N(D))/P(B)  ⇔  P(D)·P(B) ≤ P(N(D))·P(A).
    if let Some(w) = p.rationals() {
        let pa: Rational = a.iter().map(|&v| w[v].clone()).sum();
        let pb: Rational = b.iter().map(|&v| w[v].clone()).sum();
        for_each_nonempty_subset(a, |d| {
            let pd: Rational = d.iter().map(|&v| w[v].clone()).sum();
            let pn: Rational = g.neighborhood(d).iter().map(|&v| w[v].clone()).sum();
            &pd * &pb <= &pn * &pa
        })
    } else {
        let pa: f64 = a.iter().map(|&v| p.get_f64(v)).sum();
        let pb: f64 = b.iter().map(|&v| p.get_f64(v)).sum();
        for_each_nonempty_subset(a, |d| {
            let pd: f64 = d.iter().map(|&v| p.get_f64(v)).sum();
            let pn: f64 = g.neighborhood(d).iter().map(|&v| p.get_f64(v)).sum();
            pd * pb <= pn * pa + 1e-12
        })
    }
}

/// Calls `all` on every nonempty subset of `items`; true when all pass.
fn for_each_nonempty_subset(items: &[usize], mut all: impl FnMut(&[usize]) -> bool) -> bool {
    let k = items.len();
    let mut buf = Vec::with_capacity(k);
    for mask in 1u64..1 << k {
        buf.clear();
        for (i, &v) in items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                buf.push(v);
            }
        }
        if !all(&buf) {
            return false;
        }
    }
    true
}

/// Peels blocks off `(A, B)`: each step takes the maximal subset `D` of
/// the remaining `A` maximizing `P(D)/P(N(D))` (neighborhoods within the
/// remaining `B`), pairs it with `U = N(D)`, and recurses on the rest.
fn greedy_blocks(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    p: &Distribution,
) -> Vec<(Vec<usize>, Vec<usize>, f64)> {
    let mut rem_a: Vec<usize> = a.to_vec();
    let mut rem_b: Vec<usize> = b.to_vec();
    let mut blocks = Vec::new();
    while !rem_a.is_empty() {
        let in_b: crate::VertexSet = crate::VertexSet::from_iter(rem_b.iter().copied());
        let mut best: Option<(Vec<usize>, Vec<usize>, f64)> = None;
        let k = rem_a.len();
        for mask in 1u64..1 << k {
            let d: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| rem_a[i]).collect();
            let nd: Vec<usize> = g
                .neighborhood(&d)
                .into_iter()
                .filter(|&v| in_b.contains(v))
                .collect();
            let pd: f64 = d.iter().map(|&v| p.get_f64(v)).sum();
            let pn: f64 = nd.iter().map(|&v| p.get_f64(v)).sum();
            if pn <= 0.0 && pd <= 0.0 {
                continue;
            }
            let ratio = if pn <= 0.0 { f64::INFINITY } else { pd / pn };
            let better = match &best {
                None => true,
                Some((bd, _, br)) => {
                    ratio > br + 1e-12
                        || (math::abs(ratio - br) <= 1e-12 && d.len() > bd.len())
                }
            };
            if better {
                best = Some((d, nd, ratio));
            }
        }
        let Some((d, u, _)) = best else {
            // Remaining mass on A is zero; close out with one block.
            let value = block_value(&rem_a, &rem_b, p);
            blocks.push((core::mem::take(&mut rem_a), core::mem::take(&mut rem_b), value));
            break;
        };
        let value = block_value(&d, &u, p);
        rem_a.retain(|v| !d.contains(v));
        rem_b.retain(|v| !u.contains(v));
        blocks.push((d, u, value));
    }
    if !rem_b.is_empty() {
        // Leftover zero-relevance B vertices join the last block.
        if let Some(last) = blocks.last_mut() {
            last.1.extend(rem_b.iter().copied());
            last.2 = block_value(&last.0, &last.1, p);
        }
    }
    blocks
}

fn block_value(d: &[usize], u: &[usize], p: &Distribution) -> f64 {
    let pd: f64 = d.iter().map(|&v| p.get_f64(v)).sum();
    let pu: f64 = u.iter().map(|&v| p.get_f64(v)).sum();
    let total = pd + pu;
    if total <= 0.0 {
        return 0.0;
    }
    total * binary_entropy(pd / total).unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::rational::rat;
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        math::abs(a - b) <= tol
    }

    #[test]
    fn complete_graph_examples() {
        let p = Distribution::new_rational(vec![rat(1, 2), rat(1, 4), rat(1, 4)]).unwrap();
        assert!(close(complete_graph_entropy(&p), 1.5, 1e-12));
        let p = Distribution::uniform(1);
        assert!(close(complete_graph_entropy(&p), 0.0, 1e-12));
        let p = Distribution::uniform(4);
        assert!(close(complete_graph_entropy(&p), 2.0, 1e-12));
    }

    #[test]
    fn multipartite_examples() {
        let g = builtins::complete_bipartite(3, 3);
        let v = multipartite_entropy(&g, &Distribution::uniform(6)).unwrap();
        assert!(close(v, 1.0, 1e-12));

        let g = builtins::complete_multipartite(&[2, 2, 2]);
        let v = multipartite_entropy(&g, &Distribution::uniform(6)).unwrap();
        assert!(close(v, math::log2(3.0), 1e-12));

        let p = Distribution::new_rational(vec![rat(1, 2), rat(1, 4), rat(1, 4)]).unwrap();
        let v = multipartite_entropy(&builtins::complete(3), &p).unwrap();
        assert!(close(v, 1.5, 1e-12));

        assert!(matches!(
            multipartite_entropy(&builtins::path(4), &Distribution::uniform(4)),
            Err(Error::NotCompleteMultipartite)
        ));
    }

    #[test]
    fn components_examples() {
        let g = builtins::c4c6();
        let (v, parts) = components_entropy(&g, &Distribution::uniform(10), 1e-9).unwrap();
        assert!(close(v, 1.0, 1e-8));
        assert_eq!(parts.len(), 2);

        // Single component delegates to the solver.
        let g = builtins::cycle(5);
        let (v, _) = components_entropy(&g, &Distribution::uniform(5), 1e-9).unwrap();
        assert!(close(v, math::log2(2.5), 1e-8));

        // Zero-mass component is dropped.
        let k2 = builtins::complete(2);
        let (two, _) = Graph::disjoint_union(&[k2.clone(), k2]).unwrap();
        let p = Distribution::new_float(vec![0.5, 0.5, 0.0, 0.0]).unwrap();
        let (v, parts) = components_entropy(&two, &p, 1e-9).unwrap();
        assert!(close(v, 1.0, 1e-9));
        assert_eq!(parts[1].1, 0.0);
    }

    #[test]
    fn km_single_edge() {
        let k2 = builtins::complete(2);
        let p = Distribution::new_float(vec![0.3, 0.7]).unwrap();
        let r = bipartite_entropy(&k2, (&[0], &[1]), &p).unwrap();
        assert_eq!(r.case, BipartiteCase::NeighborhoodCondition);
        assert!(close(r.value_bits, 0.881291, 1e-6));
    }

    #[test]
    fn km_star_uniform() {
        let star = builtins::star(7);
        let (a, b) = star.bipartition().unwrap();
        let r = bipartite_entropy(&star, (&a, &b), &Distribution::uniform(8)).unwrap();
        assert_eq!(r.case, BipartiteCase::NeighborhoodCondition);
        assert!(close(r.value_bits, 0.543564, 1e-6));
    }

    #[test]
    fn km_perfect_matching_uniform() {
        let c6 = builtins::cycle(6);
        let (a, b) = c6.bipartition().unwrap();
        let r = bipartite_entropy(&c6, (&a, &b), &Distribution::uniform(6)).unwrap();
        assert!(close(r.value_bits, 1.0, 1e-9));
    }

    #[test]
    fn km_partition_case_two_edges() {
        let (g, _) = Graph::disjoint_union(&[builtins::complete(2), builtins::complete(2)])
            .unwrap();
        let p = Distribution::new_float(vec![0.4, 0.1, 0.1, 0.4]).unwrap();
        // Parts: {0, 2} vs {1, 3}.
        let r = bipartite_entropy(&g, (&[0, 2], &[1, 3]), &p).unwrap();
        assert_eq!(r.case, BipartiteCase::Partition);
        let expected = 0.5 * binary_entropy(0.8).unwrap() + 0.5 * binary_entropy(0.2).unwrap();
        assert!(close(r.value_bits, expected, 1e-9));
        assert_eq!(r.blocks.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn km_rejects_bad_inputs() {
        let mut with_isolated = builtins::star(2);
        with_isolated = Graph::disjoint_union(&[with_isolated, Graph::empty(1)]).unwrap().0;
        assert!(matches!(
            bipartite_entropy(&with_isolated, (&[0, 3], &[1, 2]), &Distribution::uniform(4)),
            Err(Error::IsolatedVertex(3))
        ));
        assert!(bipartite_entropy(
            &builtins::cycle(5),
            (&[0, 2], &[1, 3, 4]),
            &Distribution::uniform(5)
        )
        .is_err());
    }
}
