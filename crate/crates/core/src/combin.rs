//! Exact enumeration and optimization over independent sets, cliques,
//! matchings, clique covers and odd cuts. These are the oracles the
//! entropy solver, the LP layer and the certifiers consume. All routines
//! are capped and return [`Error::SizeLimitExceeded`] beyond desk scale.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::rational::Rational;

pub const ENUMERATION_CAP: usize = 24;
pub const ODD_CUT_CAP: usize = 20;

/// A partition of the vertex set into cliques, all of maximum size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    pub parts: Vec<VertexSet>,
}

impl CliqueCover {
    /// Re-validates the cover against its host graph: parts are pairwise
    /// disjoint cliques of size `omega` whose union is `V`.
    pub fn validate(&self, g: &Graph, omega: usize) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &part in &self.parts {
            if part.len() != omega || !seen.is_disjoint(part) || !g.is_clique(part) {
                return false;
            }
            seen = seen.union(part);
        }
        seen == VertexSet::full(g.n())
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        Err(Error::SizeLimitExceeded { what, limit: cap, got: n })
    } else {
        Ok(())
    }
}

/// All inclusion-maximal independent sets, in ascending bitmask order.
/// Bron–Kerbosch with pivoting on the complement graph.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, Error> {
    check_cap("maximal_independent_sets", g.n(), ENUMERATION_CAP)?;
    let n = g.n();
    // "Adjacency" for the search: non-neighbors, so maximal cliques of
    // this relation are maximal independent sets of g.
    let nonadj: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = VertexSet::full(n).difference(g.neighbors_set(v));
            s.remove(v);
            s
        })
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&nonadj, VertexSet::EMPTY, VertexSet::full(n), VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    debug_assert!(out.iter().all(|&s| g.is_independent_set(s)));
    Ok(out)
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(adj[u]).len())
        .expect("p ∪ x nonempty");
    for v in p.difference(adj[pivot]).iter() {
        let mut rv = r;
        rv.insert(v);
        bron_kerbosch(adj, rv, p.intersection(adj[v]), x.intersection(adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Maximum-weight independent set for nonnegative float weights.
///
/// Two phases: branch and bound with a residual-weight upper bound finds
/// the optimal weight, then a greedy sweep in label order reconstructs
/// the lexicographically smallest optimal set (a vertex is taken exactly
/// when some optimal completion contains it).
pub fn max_weight_independent_set(g: &Graph, w: &[f64]) -> (VertexSet, f64) {
    assert_eq!(w.len(), g.n());
    debug_assert!(w.iter().all(|&x| x >= 0.0));
    let n = g.n();
    let adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors_set(v)).collect();
    let full = VertexSet::full(n);
    let wstar = mwis_value(&adj, w, full);
    let eps = 1e-12 * (1.0 + wstar);

    let mut chosen = VertexSet::EMPTY;
    let mut allowed = full;
    let mut acc = 0.0f64;
    for v in 0..n {
        if !allowed.contains(v) {
            continue;
        }
        let mut rest = allowed.difference(adj[v]);
        rest.remove(v);
        // Only vertices after v remain undecided.
        rest = rest.difference(VertexSet::full(v + 1));
        if acc + w[v] + mwis_value(&adj, w, rest) >= wstar - eps {
            chosen.insert(v);
            acc += w[v];
            allowed = allowed.difference(adj[v]);
        }
        allowed.remove(v);
    }
    debug_assert!(g.is_independent_set(chosen));
    (chosen, acc)
}

/// Optimal MWIS weight over subsets of `allowed`, by branch and bound.
fn mwis_value(adj: &[VertexSet], w: &[f64], allowed: VertexSet) -> f64 {
    // Branch on members of `allowed` in nonincreasing weight order.
    let mut order: Vec<usize> = allowed.iter().collect();
    order.sort_by(|&a, &b| w[b].partial_cmp(&w[a]).unwrap().then(a.cmp(&b)));
    let mut suffix = vec![0.0; order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1] + w[order[i]];
    }
    let mut best = 0.0f64;
    branch_mwis(&order, &suffix, adj, w, 0, VertexSet::EMPTY, 0.0, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn branch_mwis(
    order: &[usize],
    suffix: &[f64],
    adj: &[VertexSet],
    w: &[f64],
    i: usize,
    excluded: VertexSet,
    acc: f64,
    best: &mut f64,
) {
    if acc > *best {
        *best = acc;
    }
    if i == order.len() || acc + suffix[i] <= *best {
        return;
    }
    let v = order[i];
    if !excluded.contains(v) {
        branch_mwis(order, suffix, adj, w, i + 1, excluded.union(adj[v]), acc + w[v], best);
    }
    branch_mwis(order, suffix, adj, w, i + 1, excluded, acc, best);
}

/// Exact-rational maximum mass `α(G, P)` of an independent set, attained
/// at a maximal set; enumeration with exact comparisons.
pub fn max_mass_independent_set_rational(
    g: &Graph,
    w: &[Rational],
) -> Result<(VertexSet, Rational), Error> {
    assert_eq!(w.len(), g.n());
    let sets = maximal_independent_sets(g)?;
    let mut best: Option<(VertexSet, Rational)> = None;
    for s in sets {
        let mass: Rational = s.iter().map(|v| w[v].clone()).sum();
        match &best {
            Some((bs, bm)) if mass < *bm || (mass == *bm && s.0 >= bs.0) => {}
            _ => best = Some((s, mass)),
        }
    }
    Ok(best.unwrap_or((VertexSet::EMPTY, Rational::zero())))
}

/// Clique number and the complete list of maximum cliques.
pub fn maximum_cliques(g: &Graph) -> Result<(usize, Vec<VertexSet>), Error> {
    check_cap("maximum_cliques", g.n(), ENUMERATION_CAP)?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    // Maximal cliques of g are maximal independent sets of its complement.
    let maximal = maximal_independent_sets(&g.complement())?;
    let omega = maximal.iter().map(|s| s.len()).max().unwrap_or(0);
    let cliques: Vec<VertexSet> =
        maximal.into_iter().filter(|s| s.len() == omega).collect();
    debug_assert!(cliques.iter().all(|&s| g.is_clique(s)));
    Ok((omega, cliques))
}

/// Maximum-cardinality bipartite matching by augmenting paths. `parts`
/// must be a valid bipartition.
pub fn maximum_matching_bipartite(
    g: &Graph,
    parts: (&[usize], &[usize]),
) -> Result<Vec<(usize, usize)>, Error> {
    let (a, b) = parts;
    if a.len() + b.len() != g.n() {
        return Err(Error::NotBipartite);
    }
    let mut side = vec![u8::MAX; g.n()];
    for &v in a {
        side[v] = 0;
    }
    for &v in b {
        if side[v] != u8::MAX {
            return Err(Error::NotBipartite);
        }
        side[v] = 1;
    }
    if side.iter().any(|&s| s == u8::MAX)
        || g.edges().iter().any(|&(u, v)| side[u] == side[v])
    {
        return Err(Error::NotBipartite);
    }

    let mut mate = vec![usize::MAX; g.n()];
    for &u in a {
        let mut visited = vec![false; g.n()];
        try_augment(g, u, &mut mate, &mut visited);
    }
    let mut out: Vec<(usize, usize)> = a
        .iter()
        .filter(|&&u| mate[u] != usize::MAX)
        .map(|&u| (u.min(mate[u]), u.max(mate[u])))
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn try_augment(g: &Graph, u: usize, mate: &mut [usize], visited: &mut [bool]) -> bool {
    for &v in g.neighbors(u) {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if mate[v] == usize::MAX || try_augment(g, mate[v], mate, visited) {
            mate[v] = u;
            mate[u] = v;
            return true;
        }
    }
    false
}

/// A partition of `V(G)` into cliques all of size `ω(G)`, or `None` when
/// impossible. Exact-cover backtracking over the maximum-clique list.
pub fn clique_cover_by_max_cliques(g: &Graph) -> Result<Option<CliqueCover>, Error> {
    check_cap("clique_cover_by_max_cliques", g.n(), ENUMERATION_CAP)?;
    if g.n() == 0 {
        return Ok(Some(CliqueCover { parts: Vec::new() }));
    }
    let (omega, cliques) = maximum_cliques(g)?;
    if g.n() % omega != 0 {
        return Ok(None);
    }
    let mut parts = Vec::new();
    if cover_backtrack(g.n(), &cliques, VertexSet::EMPTY, &mut parts) {
        let cover = CliqueCover { parts };
        debug_assert!(cover.validate(g, omega));
        Ok(Some(cover))
    } else {
        Ok(None)
    }
}

fn cover_backtrack(
    n: usize,
    cliques: &[VertexSet],
    covered: VertexSet,
    parts: &mut Vec<VertexSet>,
) -> bool {
    if covered == VertexSet::full(n) {
        return true;
    }
    let pivot = VertexSet::full(n).difference(covered).min().expect("uncovered vertex");
    for &q in cliques {
        if q.contains(pivot) && q.is_disjoint(covered) {
            parts.push(q);
            if cover_backtrack(n, cliques, covered.union(q), parts) {
                return true;
            }
            parts.pop();
        }
    }
    false
}

/// Checks `|δ(U)| >= k` for every odd-cardinality `U ⊆ V` (singletons
/// included). On failure returns a violating `U` minimizing `|δ(U)|`
/// (smallest bitmask among ties). Brute force over all odd subsets.
pub fn all_odd_cuts_at_least(g: &Graph, k: usize) -> Result<(bool, Option<VertexSet>), Error> {
    check_cap("all_odd_cuts_at_least", g.n(), ODD_CUT_CAP)?;
    let n = g.n();
    let edges = g.edges();
    let mut worst: Option<(usize, u64)> = None;
    for mask in 1u64..1 << n {
        if mask.count_ones() % 2 == 0 {
            continue;
        }
        let cut = edges
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        if cut < k {
            let better = match worst {
                None => true,
                Some((c, m)) => cut < c || (cut == c && mask < m),
            };
            if better {
                worst = Some((cut, mask));
            }
        }
    }
    Ok(match worst {
        None => (true, None),
        Some((_, mask)) => (false, Some(VertexSet(mask))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::rational::rat;

    #[test]
    fn maximal_independent_sets_of_c5() {
        let sets = maximal_independent_sets(&builtins::cycle(5)).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
        let expected: Vec<VertexSet> = [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
            .iter()
            .map(|p| VertexSet::from_iter(p.iter().copied()))
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(sets, expected);
    }

    #[test]
    fn maximal_independent_sets_corner_cases() {
        let sets = maximal_independent_sets(&builtins::complete(4)).unwrap();
        assert_eq!(sets.len(), 4);
        assert!(sets.iter().all(|s| s.len() == 1));

        let sets = maximal_independent_sets(&Graph::empty(3)).unwrap();
        assert_eq!(sets, alloc::vec![VertexSet::full(3)]);

        assert!(maximal_independent_sets(&Graph::empty(25)).is_err());
    }

    #[test]
    fn mwis_examples() {
        let c5 = builtins::cycle(5);
        let (_, w) = max_weight_independent_set(&c5, &[0.2; 5]);
        assert!((w - 0.4).abs() < 1e-12);

        let k4 = builtins::complete(4);
        let (s, w) = max_weight_independent_set(&k4, &[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(s, VertexSet::singleton(3));
        assert!((w - 0.4).abs() < 1e-12);

        let (_, w) = max_weight_independent_set(&c5, &[0.3, 0.2, 0.2, 0.1, 0.2]);
        assert!((w - 0.5).abs() < 1e-12);
    }

    #[test]
    fn mwis_matches_enumeration() {
        // With nonnegative weights the optimum is attained at a maximal set.
        let graphs = [
            builtins::cycle(5),
            builtins::petersen(),
            builtins::star(4),
            builtins::fig2_bridgeless_cubic(),
        ];
        for g in graphs {
            let w: Vec<f64> = (0..g.n()).map(|i| (i as f64 * 7.3 + 1.0) % 5.0).collect();
            let (_, got) = max_weight_independent_set(&g, &w);
            let best = maximal_independent_sets(&g)
                .unwrap()
                .iter()
                .map(|s| s.iter().map(|v| w[v]).sum::<f64>())
                .fold(0.0f64, f64::max);
            assert!((got - best).abs() < 1e-9, "{got} vs {best}");
        }
    }

    #[test]
    fn rational_alpha() {
        let c5 = builtins::cycle(5);
        let w = alloc::vec![rat(3, 10), rat(2, 10), rat(2, 10), rat(1, 10), rat(2, 10)];
        let (s, m) = max_mass_independent_set_rational(&c5, &w).unwrap();
        assert_eq!(m, rat(1, 2));
        assert_eq!(s, VertexSet::from_iter([0, 2]));
    }

    #[test]
    fn maximum_cliques_examples() {
        let (omega, cliques) = maximum_cliques(&builtins::cycle(5)).unwrap();
        assert_eq!((omega, cliques.len()), (2, 5));

        let (omega, cliques) = maximum_cliques(&builtins::complete(4)).unwrap();
        assert_eq!((omega, cliques.len()), (4, 1));

        // L(K4) is the octahedron: 8 triangles.
        let (l, _) = builtins::complete(4).line_graph().unwrap();
        let (omega, cliques) = maximum_cliques(&l).unwrap();
        assert_eq!((omega, cliques.len()), (3, 8));
    }

    #[test]
    fn bipartite_matching_examples() {
        let g = builtins::complete_bipartite(3, 3);
        let parts: (Vec<usize>, Vec<usize>) = ((0..3).collect(), (3..6).collect());
        let m = maximum_matching_bipartite(&g, (&parts.0, &parts.1)).unwrap();
        assert_eq!(m.len(), 3);

        let star = builtins::star(7);
        let (a, b) = star.bipartition().unwrap();
        assert_eq!(maximum_matching_bipartite(&star, (&a, &b)).unwrap().len(), 1);

        let c6 = builtins::cycle(6);
        let (a, b) = c6.bipartition().unwrap();
        assert_eq!(maximum_matching_bipartite(&c6, (&a, &b)).unwrap().len(), 3);

        assert!(maximum_matching_bipartite(&builtins::cycle(5), (&[0, 2], &[1, 3, 4])).is_err());
    }

    #[test]
    fn clique_cover_examples() {
        let cover = clique_cover_by_max_cliques(&builtins::cycle(6)).unwrap().unwrap();
        assert_eq!(cover.parts.len(), 3);
        assert!(cover.validate(&builtins::cycle(6), 2));

        assert_eq!(clique_cover_by_max_cliques(&builtins::star(3)).unwrap(), None);

        let k3 = builtins::complete(3);
        let (two_triangles, _) = Graph::disjoint_union(&[k3.clone(), k3]).unwrap();
        let cover = clique_cover_by_max_cliques(&two_triangles).unwrap().unwrap();
        assert!(cover.validate(&two_triangles, 3));
    }

    #[test]
    fn odd_cut_examples() {
        assert_eq!(all_odd_cuts_at_least(&builtins::petersen(), 3).unwrap(), (true, None));

        let (ok, witness) = all_odd_cuts_at_least(&builtins::fig3_bridged_cubic(), 3).unwrap();
        assert!(!ok);
        let u = witness.unwrap();
        // Bridge side: 5 vertices with a single crossing edge.
        assert_eq!(u.len() % 2, 1);
        let cut = builtins::fig3_bridged_cubic()
            .edges()
            .iter()
            .filter(|&&(a, b)| u.contains(a) != u.contains(b))
            .count();
        assert_eq!(cut, 1);
        assert_eq!(u, VertexSet::from_iter([0, 1, 2, 3, 4]));

        assert_eq!(all_odd_cuts_at_least(&builtins::complete(2), 1).unwrap(), (true, None));

        // Any k-regular graph fails against k' > k: singletons cut k edges.
        let (ok, witness) = all_odd_cuts_at_least(&builtins::petersen(), 4).unwrap();
        assert!(!ok);
        assert_eq!(witness.unwrap().len(), 1);
    }
}
