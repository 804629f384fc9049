//! Exact-rational fractional chromatic number (LP over the maximal
//! independent sets), the Edmonds formula for the fractional
//! edge-chromatic number, and the k-graph test. Floats never enter these
//! routines.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bitset::VertexSet;
use crate::combin;
use crate::error::Error;
use crate::graph::Graph;
use crate::rational::{rat_int, Rational};
use crate::simplex;

pub const LP_CAP: usize = 20;

/// Nonnegative rational weights on independent sets covering every
/// vertex with total weight at least one.
#[derive(Clone, Debug)]
pub struct FractionalColoring {
    pub sets: Vec<(VertexSet, Rational)>,
    pub total: Rational,
}

impl FractionalColoring {
    /// Exact re-verification of the covering certificate.
    pub fn validate(&self, g: &Graph) -> bool {
        let sum: Rational = self.sets.iter().map(|(_, w)| w.clone()).sum();
        if sum != self.total {
            return false;
        }
        (0..g.n()).all(|v| {
            let cover: Rational = self
                .sets
                .iter()
                .filter(|(s, _)| s.contains(v))
                .map(|(_, w)| w.clone())
                .sum();
            cover >= Rational::one()
        })
    }
}

/// Exact `χ_f(G)` with a re-verified fractional coloring certificate.
///
/// Solves the packing LP `max Σ y_v` over `Σ_{v∈S} y_v ≤ 1` per maximal
/// independent set `S` by exact-rational simplex; the covering weights
/// are the optimal duals.
pub fn fractional_chromatic_number(g: &Graph) -> Result<(Rational, FractionalColoring), Error> {
    if g.n() > LP_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "fractional_chromatic_number",
            limit: LP_CAP,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok((Rational::zero(), FractionalColoring { sets: Vec::new(), total: Rational::zero() }));
    }
    let sets = combin::maximal_independent_sets(g)?;
    let c = vec![rat_int(1); g.n()];
    let a: Vec<Vec<Rational>> = sets
        .iter()
        .map(|s| {
            (0..g.n())
                .map(|v| if s.contains(v) { rat_int(1) } else { Rational::zero() })
                .collect()
        })
        .collect();
    let b = vec![rat_int(1); sets.len()];
    let sol = simplex::solve_max(&c, &a, &b)?;
    let coloring = FractionalColoring {
        sets: sets
            .iter()
            .zip(sol.duals.iter())
            .filter(|(_, w)| !w.is_zero())
            .map(|(&s, w)| (s, w.clone()))
            .collect(),
        total: sol.value.clone(),
    };
    assert!(coloring.validate(g), "LP certificate failed re-verification");
    Ok((sol.value, coloring))
}

/// Which term of the Edmonds formula attains the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeChromaticWitness {
    /// The maximum degree term.
    Degree,
    /// A vertex set with `|E(U)| / ⌊|U|/2⌋` equal to the optimum.
    DenseSet(VertexSet),
}

/// Exact `χ'_f(G)` by the formula
/// `max{Δ(G), max_{|U|≥3} |E(U)|/⌊|U|/2⌋}`, scanning all subsets of size
/// at least 3 (both parities; the floor handles them).
pub fn fractional_edge_chromatic_number(
    g: &Graph,
) -> Result<(Rational, EdgeChromaticWitness), Error> {
    if g.n() > LP_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "fractional_edge_chromatic_number",
            limit: LP_CAP,
            got: g.n(),
        });
    }
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let n = g.n();
    let edges = g.edges();
    let mut best = rat_int(g.max_degree() as i64);
    let mut witness = EdgeChromaticWitness::Degree;
    for mask in 1u64..1 << n {
        let size = mask.count_ones() as usize;
        if size < 3 {
            continue;
        }
        let u = VertexSet(mask);
        let inside = edges
            .iter()
            .filter(|&&(a, b)| u.contains(a) && u.contains(b))
            .count();
        let ratio = Rational::new((inside as i64).into(), ((size / 2) as i64).into());
        if ratio > best {
            best = ratio;
            witness = EdgeChromaticWitness::DenseSet(u);
        }
    }
    Ok((best, witness))
}

/// Outcome of the k-graph test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KGraphVerdict {
    Yes { k: usize },
    NotRegular,
    /// An odd set whose cut is below the valency (equivalently, the
    /// formula value exceeds it).
    OddCutViolation { witness: VertexSet, cut: usize },
}

/// Decides whether `g` is a k-graph (k-regular with `χ'_f = k`), via both
/// the formula route and the odd-cut criterion, asserting they agree.
pub fn is_k_graph(g: &Graph) -> Result<KGraphVerdict, Error> {
    let Some(k) = g.regularity() else {
        return Ok(KGraphVerdict::NotRegular);
    };
    if g.m() == 0 {
        // 0-regular: χ'_f undefined by the formula; treat as not a k-graph.
        return Ok(KGraphVerdict::NotRegular);
    }
    let (chi_f_prime, _) = fractional_edge_chromatic_number(g)?;
    let formula_says = chi_f_prime == rat_int(k as i64);
    let (cuts_ok, cut_witness) = combin::all_odd_cuts_at_least(g, k)?;
    assert_eq!(
        formula_says, cuts_ok,
        "formula and odd-cut routes disagree on a {k}-regular graph"
    );
    if cuts_ok {
        Ok(KGraphVerdict::Yes { k })
    } else {
        let witness = cut_witness.expect("violation carries a witness");
        let cut = g
            .edges()
            .iter()
            .filter(|&&(a, b)| witness.contains(a) != witness.contains(b))
            .count();
        Ok(KGraphVerdict::OddCutViolation { witness, cut })
    }
}

/// Exact chromatic number by backtracking, for cross-checks. Capped at 12
/// vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize, Error> {
    const CAP: usize = 12;
    if g.n() > CAP {
        return Err(Error::SizeLimitExceeded { what: "chromatic_number", limit: CAP, got: g.n() });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let (omega, _) = combin::maximum_cliques(g)?;
    for k in omega..=g.n() {
        if colorable(g, k, &mut vec![usize::MAX; g.n()], 0) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn colorable(g: &Graph, k: usize, color: &mut [usize], v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    // Symmetry break: vertex v may only open color max_used + 1.
    let max_used = color[..v].iter().copied().filter(|&c| c != usize::MAX).max();
    let limit = match max_used {
        None => 1,
        Some(c) => (c + 2).min(k),
    };
    for c in 0..limit {
        if g.neighbors(v).iter().all(|&u| color[u] != c) {
            color[v] = c;
            if colorable(g, k, color, v + 1) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::rational::rat;

    #[test]
    fn chi_f_of_c5_is_five_halves() {
        let (v, cert) = fractional_chromatic_number(&builtins::cycle(5)).unwrap();
        assert_eq!(v, rat(5, 2));
        assert!(cert.validate(&builtins::cycle(5)));
    }

    #[test]
    fn chi_f_of_complete_graphs() {
        for n in 1..=6 {
            let (v, _) = fractional_chromatic_number(&builtins::complete(n)).unwrap();
            assert_eq!(v, rat_int(n as i64));
        }
    }

    #[test]
    fn chi_f_of_bipartite_with_edge_is_two() {
        for g in [builtins::cycle(6), builtins::star(4), builtins::complete_bipartite(3, 3)] {
            let (v, _) = fractional_chromatic_number(&g).unwrap();
            assert_eq!(v, rat_int(2));
        }
    }

    #[test]
    fn edge_chromatic_examples() {
        let (v, _) = fractional_edge_chromatic_number(&builtins::petersen()).unwrap();
        assert_eq!(v, rat_int(3));

        let (v, w) = fractional_edge_chromatic_number(&builtins::fig3_bridged_cubic()).unwrap();
        assert_eq!(v, rat(7, 2));
        match w {
            EdgeChromaticWitness::DenseSet(u) => {
                assert_eq!(u, VertexSet::from_iter([0, 1, 2, 3, 4]));
            }
            other => panic!("expected dense-set witness, got {other:?}"),
        }

        let (v, w) = fractional_edge_chromatic_number(&builtins::complete(4)).unwrap();
        assert_eq!(v, rat_int(3));
        assert_eq!(w, EdgeChromaticWitness::Degree);
    }

    #[test]
    fn k_graph_examples() {
        assert_eq!(is_k_graph(&builtins::petersen()).unwrap(), KGraphVerdict::Yes { k: 3 });
        assert_eq!(is_k_graph(&builtins::cycle(4)).unwrap(), KGraphVerdict::Yes { k: 2 });
        assert_eq!(
            is_k_graph(&builtins::fig2_bridgeless_cubic()).unwrap(),
            KGraphVerdict::Yes { k: 3 }
        );
        // Odd-order regular graphs are never k-graphs: the whole vertex
        // set is an odd set with an empty cut.
        match is_k_graph(&builtins::cycle(5)).unwrap() {
            KGraphVerdict::OddCutViolation { witness, cut } => {
                assert_eq!(witness, VertexSet::full(5));
                assert_eq!(cut, 0);
            }
            other => panic!("expected violation, got {other:?}"),
        }
        match is_k_graph(&builtins::fig3_bridged_cubic()).unwrap() {
            KGraphVerdict::OddCutViolation { cut, .. } => assert_eq!(cut, 1),
            other => panic!("expected violation, got {other:?}"),
        }
        assert_eq!(is_k_graph(&builtins::star(3)).unwrap(), KGraphVerdict::NotRegular);
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&builtins::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&builtins::cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&builtins::complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&builtins::petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&crate::Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn chi_f_equals_chi_f_of_line_graph() {
        for g in [builtins::complete(4), builtins::cycle(5), builtins::fig3_bridged_cubic()] {
            let (chi_e, _) = fractional_edge_chromatic_number(&g).unwrap();
            let (l, _) = g.line_graph().unwrap();
            let (chi_v, _) = fractional_chromatic_number(&l).unwrap();
            assert_eq!(chi_e, chi_v);
        }
    }
}
