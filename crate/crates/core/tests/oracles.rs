//! Oracle equivalence: the solver against an independent simplex-descent
//! minimization on graphs with few maximal independent sets, and the
//! coloring branch and bound against exhaustive partition enumeration.

mod common;

use common::{exhaustive_min_coloring_entropy, h, random_dist, random_graph, simplex_descent_min};
use graph_entropy::{builtins, chromatic, combin, math};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn solver_matches_simplex_descent_on_small_set_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut done = 0;
    while done < 60 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(&mut rng, n, 0.7);
        let sets = combin::maximal_independent_sets(&g).unwrap();
        if sets.len() > 4 {
            continue;
        }
        let p = random_dist(&mut rng, n);
        assert!(math::abs(h(&g, &p) - simplex_descent_min(&g, &p)) <= 1e-6);
        done += 1;
    }
    // Named instances with small maximal-independent-set families.
    for g in [builtins::cycle(4), builtins::complete_bipartite(2, 3), builtins::star(5)] {
        let mut rng2 = ChaCha8Rng::seed_from_u64(22);
        let p = random_dist(&mut rng2, g.n());
        assert!(math::abs(h(&g, &p) - simplex_descent_min(&g, &p)) <= 1e-6);
    }
}

#[test]
fn coloring_matches_exhaustive_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let p = random_dist(&mut rng, n);
        let (coloring, value) = chromatic::min_entropy_coloring(&g, &p).unwrap();
        assert!(coloring.validate(&g));
        let brute = exhaustive_min_coloring_entropy(&g, &p);
        assert!(math::abs(value - brute) <= 1e-9, "{value} vs {brute}");
    }
}
