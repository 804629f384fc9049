//! Minimum-entropy proper colorings and the entropy chain relating them
//! to graph entropy: the color classes of a proper coloring are
//! independent sets, and the entropy of the induced color distribution
//! upper-bounds the graph entropy.
//!
//! The branch-and-bound search partitions vertices into independent
//! classes in heaviest-first order. Its lower bound pours all unassigned
//! mass into the heaviest committed class: the resulting vector
//! majorizes every completion of the partial coloring, and entropy is
//! Schur-concave, so the bound is admissible.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::combin;
use crate::dist::Distribution;
use crate::entropy::{graph_entropy, EntropyResult};
use crate::error::Error;
use crate::fractional;
use crate::graph::Graph;
use crate::math;
use crate::rational;

pub const COLORING_CAP: usize = 18;
const OR_POWER_CAP: usize = 36;
const TIE_EPS: f64 = 1e-12;

/// A proper coloring as a partition into independent color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub classes: Vec<VertexSet>,
}

impl Coloring {
    /// Classes are pairwise disjoint independent sets covering `V`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &class in &self.classes {
            if class.is_empty()
                || !seen.is_disjoint(class)
                || !g.is_independent_set(class)
            {
                return false;
            }
            seen = seen.union(class);
        }
        seen == VertexSet::full(g.n())
    }

    /// Mass of each class under `p`.
    pub fn masses(&self, p: &Distribution) -> Vec<f64> {
        self.classes.iter().map(|&c| p.mass_f64(c)).collect()
    }

    /// Entropy in bits of the induced distribution on colors.
    pub fn entropy_bits(&self, p: &Distribution) -> f64 {
        math::entropy_bits(&self.masses(p))
    }
}

/// Minimum-entropy proper coloring. Ties prefer fewer classes, then the
/// lexicographically smallest sorted class list.
pub fn min_entropy_coloring(g: &Graph, p: &Distribution) -> Result<(Coloring, f64), Error> {
    if g.n() > COLORING_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "min_entropy_coloring",
            limit: COLORING_CAP,
            got: g.n(),
        });
    }
    min_entropy_coloring_uncapped(g, p)
}

fn min_entropy_coloring_uncapped(
    g: &Graph,
    p: &Distribution,
) -> Result<(Coloring, f64), Error> {
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    if g.n() == 0 {
        return Ok((Coloring { classes: Vec::new() }, 0.0));
    }
    let pf = p.to_floats();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| pf[b].partial_cmp(&pf[a]).unwrap().then(a.cmp(&b)));
    let adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors_set(v)).collect();
    let mut search = Search {
        adj: &adj,
        order: &order,
        pf: &pf,
        best_entropy: f64::INFINITY,
        best_key: Vec::new(),
    };
    let total: f64 = pf.iter().sum();
    let mut classes: Vec<(VertexSet, f64)> = Vec::new();
    search.dfs(0, &mut classes, total);
    let coloring = Coloring { classes: search.best_key };
    debug_assert!(coloring.validate(g));
    Ok((coloring, search.best_entropy))
}

struct Search<'a> {
    adj: &'a [VertexSet],
    order: &'a [usize],
    pf: &'a [f64],
    best_entropy: f64,
    best_key: Vec<VertexSet>,
}

impl Search<'_> {
    fn dfs(&mut self, i: usize, classes: &mut Vec<(VertexSet, f64)>, remaining: f64) {
        if i == self.order.len() {
            let masses: Vec<f64> = classes.iter().map(|&(_, m)| m).collect();
            let e = math::entropy_bits(&masses);
            let mut key: Vec<VertexSet> = classes.iter().map(|&(c, _)| c).collect();
            key.sort_unstable();
            let better = e < self.best_entropy - TIE_EPS
                || (e <= self.best_entropy + TIE_EPS
                    && (key.len() < self.best_key.len()
                        || (key.len() == self.best_key.len() && key < self.best_key)));
            if better {
                self.best_entropy = e.min(self.best_entropy);
                self.best_key = key;
            }
            return;
        }
        if self.lower_bound(classes, remaining) > self.best_entropy + TIE_EPS {
            return;
        }
        let v = self.order[i];
        for j in 0..classes.len() {
            if classes[j].0.is_disjoint(self.adj[v]) {
                classes[j].0.insert(v);
                classes[j].1 += self.pf[v];
                self.dfs(i + 1, classes, remaining - self.pf[v]);
                classes[j].1 -= self.pf[v];
                classes[j].0.remove(v);
            }
        }
        classes.push((VertexSet::singleton(v), self.pf[v]));
        self.dfs(i + 1, classes, remaining - self.pf[v]);
        classes.pop();
    }

    /// Pour the unassigned mass into the heaviest committed class; the
    /// result majorizes every completion, so its entropy is a valid lower
    /// bound for the subtree.
    fn lower_bound(&self, classes: &[(VertexSet, f64)], remaining: f64) -> f64 {
        if classes.is_empty() {
            return 0.0;
        }
        let mut masses: Vec<f64> = classes.iter().map(|&(_, m)| m).collect();
        let hi = masses
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        masses[hi] += remaining.max(0.0);
        math::entropy_bits(&masses)
    }
}

/// The sandwich `−log₂ α(G,P) ≤ H(G,P) ≤ H_χ(G,P) ≤ log₂ χ(G)`, with the
/// attaining independent set and coloring. The last link is omitted when
/// the exact chromatic number is out of reach.
#[derive(Clone, Debug)]
pub struct EntropyChain {
    pub alpha_mass: f64,
    pub alpha_set: VertexSet,
    pub lower_bits: f64,
    pub entropy: EntropyResult,
    pub coloring: Coloring,
    pub chromatic_entropy_bits: f64,
    pub chromatic_number: Option<usize>,
    pub log2_chromatic: Option<f64>,
}

pub fn chromatic_entropy_bounds(
    g: &Graph,
    p: &Distribution,
    tol_bits: f64,
) -> Result<EntropyChain, Error> {
    let (alpha_set, alpha_mass) = match p.rationals() {
        Some(w) => {
            let (s, m) = combin::max_mass_independent_set_rational(g, w)?;
            (s, rational::to_f64(&m))
        }
        None => {
            let sets = combin::maximal_independent_sets(g)?;
            sets.iter()
                .map(|&s| (s, p.mass_f64(s)))
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(b.0.cmp(&a.0)))
                .unwrap_or((VertexSet::EMPTY, 0.0))
        }
    };
    let entropy = graph_entropy(g, p, tol_bits)?;
    let (coloring, chromatic_entropy_bits) = min_entropy_coloring(g, p)?;
    let chromatic_number = if g.n() <= 12 {
        Some(fractional::chromatic_number(g)?)
    } else {
        None
    };
    Ok(EntropyChain {
        alpha_mass,
        alpha_set,
        lower_bits: if alpha_mass > 0.0 { -math::log2(alpha_mass) } else { 0.0 },
        entropy,
        coloring,
        chromatic_entropy_bits,
        chromatic_number,
        log2_chromatic: chromatic_number.map(|k| math::log2(k as f64)),
    })
}

/// Normalized chromatic entropy of OR powers,
/// `H_χ(G^∨d, P^d) / d` for `d = 1..=depth`; the sequence decreases
/// toward the graph entropy. Total power size is capped at 36 vertices.
pub fn or_product_convergence(
    g: &Graph,
    p: &Distribution,
    depth: usize,
) -> Result<Vec<f64>, Error> {
    if depth == 0 {
        return Err(Error::EmptyInput);
    }
    if p.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: p.len() });
    }
    let mut size = 1usize;
    for _ in 0..depth {
        size = size.checked_mul(g.n()).unwrap_or(usize::MAX);
    }
    if size > OR_POWER_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "or_product_convergence",
            limit: OR_POWER_CAP,
            got: size,
        });
    }
    let mut out = Vec::with_capacity(depth);
    for d in 1..=depth {
        let factors = vec![g.clone(); d];
        let power = Graph::or_product(&factors)?;
        let pd = p.power(d);
        let (_, h) = min_entropy_coloring_uncapped(&power, &pd)?;
        out.push(h / d as f64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::rational::rat;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        math::abs(a - b) <= tol
    }

    #[test]
    fn coloring_of_c5_second_distribution() {
        // Optimal cells {0,2}, {1,4}, {3} with masses 0.5, 0.4, 0.1.
        let p = Distribution::new_rational(vec![
            rat(3, 10),
            rat(2, 10),
            rat(2, 10),
            rat(1, 10),
            rat(2, 10),
        ])
        .unwrap();
        let (col, h) = min_entropy_coloring(&builtins::cycle(5), &p).unwrap();
        assert!(close(h, 1.360964, 1e-6), "got {h}");
        let mut masses = col.masses(&p);
        masses.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!(close(masses[0], 0.5, 1e-12));
        assert!(close(masses[1], 0.4, 1e-12));
        assert!(close(masses[2], 0.1, 1e-12));
    }

    #[test]
    fn coloring_edge_cases() {
        // Edgeless: one class, zero entropy.
        let (col, h) = min_entropy_coloring(&Graph::empty(4), &Distribution::uniform(4)).unwrap();
        assert_eq!(col.classes.len(), 1);
        assert!(close(h, 0.0, 1e-12));

        // Complete: all singletons, full entropy.
        let (col, h) =
            min_entropy_coloring(&builtins::complete(4), &Distribution::uniform(4)).unwrap();
        assert_eq!(col.classes.len(), 4);
        assert!(close(h, 2.0, 1e-12));

        // Bipartite with balanced parts: one bit.
        let (col, h) =
            min_entropy_coloring(&builtins::cycle(6), &Distribution::uniform(6)).unwrap();
        assert_eq!(col.classes.len(), 2);
        assert!(close(h, 1.0, 1e-12));
    }

    #[test]
    fn coloring_ties_prefer_fewer_then_lex() {
        // Star: center alone vs leaves; unique 2-class optimum.
        let (col, h) = min_entropy_coloring(&builtins::star(7), &Distribution::uniform(8)).unwrap();
        assert_eq!(col.classes.len(), 2);
        assert!(close(h, 0.543564, 1e-6));
        let mut sizes: Vec<usize> = col.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 7]);
    }

    fn exhaustive_min(g: &Graph, p: &Distribution) -> (Vec<VertexSet>, f64) {
        fn rec(
            g: &Graph,
            pf: &[f64],
            v: usize,
            classes: &mut Vec<VertexSet>,
            best: &mut Option<(f64, Vec<VertexSet>)>,
        ) {
            if v == g.n() {
                let masses: Vec<f64> = classes.iter().map(|&c| {
                    c.iter().map(|x| pf[x]).sum()
                }).collect();
                let e = math::entropy_bits(&masses);
                let mut key = classes.clone();
                key.sort_unstable();
                let better = match best {
                    None => true,
                    Some((be, bk)) => {
                        e < *be - TIE_EPS
                            || (e <= *be + TIE_EPS
                                && (key.len() < bk.len()
                                    || (key.len() == bk.len() && key < *bk)))
                    }
                };
                if better {
                    let e = best.as_ref().map_or(e, |(be, _)| e.min(*be));
                    *best = Some((e, key));
                }
                return;
            }
            let nb = g.neighbors_set(v);
            for j in 0..classes.len() {
                if classes[j].is_disjoint(nb) {
                    classes[j].insert(v);
                    rec(g, pf, v + 1, classes, best);
                    classes[j].remove(v);
                }
            }
            classes.push(VertexSet::singleton(v));
            rec(g, pf, v + 1, classes, best);
            classes.pop();
        }
        let pf = p.to_floats();
        let mut best = None;
        rec(g, &pf, 0, &mut Vec::new(), &mut best);
        let (e, key) = best.unwrap();
        (key, e)
    }

    #[test]
    fn search_matches_exhaustive_enumeration() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..30 {
            let n = 4 + (trial % 5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let raw: Vec<f64> = (0..n).map(|_| (next() % 9 + 1) as f64).collect();
            let total: f64 = raw.iter().sum();
            let p = Distribution::new_float(raw.iter().map(|x| x / total).collect()).unwrap();

            let (col, h) = min_entropy_coloring(&g, &p).unwrap();
            let (oracle_classes, oracle_h) = exhaustive_min(&g, &p);
            assert!(close(h, oracle_h, 1e-9), "trial {trial}: {h} vs {oracle_h}");
            assert_eq!(col.classes, oracle_classes, "trial {trial}");
        }
    }

    #[test]
    fn entropy_chain_holds() {
        for (g, p) in [
            (builtins::cycle(5), Distribution::uniform(5)),
            (builtins::petersen(), Distribution::uniform(10)),
            (
                builtins::cycle(5),
                Distribution::new_float(vec![0.3, 0.2, 0.2, 0.1, 0.2]).unwrap(),
            ),
        ] {
            let chain = chromatic_entropy_bounds(&g, &p, 1e-9).unwrap();
            assert!(chain.lower_bits <= chain.entropy.value_bits + 1e-9);
            assert!(chain.entropy.value_bits <= chain.chromatic_entropy_bits + 1e-9);
            assert!(
                chain.chromatic_entropy_bits <= chain.log2_chromatic.unwrap() + 1e-9
            );
            assert!(chain.coloring.validate(&g));
        }
    }

    #[test]
    fn uniform_chain_lower_bound_uses_alpha() {
        // Under the uniform distribution −log₂ α(G,U) = log₂(n/α(G)).
        let chain =
            chromatic_entropy_bounds(&builtins::cycle(5), &Distribution::uniform(5), 1e-9)
                .unwrap();
        assert!(close(chain.lower_bits, math::log2(2.5), 1e-12));
        assert_eq!(chain.alpha_set.len(), 2);
    }

    #[test]
    fn or_power_normalization_is_flat_on_complete_graphs() {
        // K2 powers are complete, so H_χ/d stays exactly 1 bit.
        let seq =
            or_product_convergence(&builtins::complete(2), &Distribution::uniform(2), 5).unwrap();
        for v in &seq {
            assert!(close(*v, 1.0, 1e-12));
        }
    }

    #[test]
    fn or_power_sequence_decreases_toward_entropy() {
        let g = builtins::cycle(5);
        let p = Distribution::uniform(5);
        let seq = or_product_convergence(&g, &p, 2).unwrap();
        assert!(seq[1] <= seq[0] + 1e-9);
        let h = graph_entropy(&g, &p, 1e-9).unwrap().value_bits;
        assert!(seq[1] + 1e-9 >= h);
    }

    #[test]
    fn or_power_cap() {
        assert!(matches!(
            or_product_convergence(&builtins::cycle(7), &Distribution::uniform(7), 2),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
