//! Named graphs used across tests and the CLI.

use alloc::vec::Vec;

use crate::graph::Graph;

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("valid")
}

/// Cycle `C_n` (`n >= 3`).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("valid")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("valid")
}

/// Star `K_{1,leaves}`; the center is vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).expect("valid")
}

/// Complete bipartite `K_{a,b}`; part `A` is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).expect("valid")
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid")
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("valid")
}

/// A bridgeless cubic graph on 6 vertices that is neither edge transitive
/// nor coverable by disjoint maximum cliques: an inner and an outer
/// triangle joined by a perfect matching between them.
pub fn fig2_bridgeless_cubic() -> Graph {
    Graph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("valid")
}

/// A cubic graph with exactly one bridge: two near-`K4` blocks joined by
/// the edge `{4, 5}`. 10 vertices, 15 edges.
pub fn fig3_bridged_cubic() -> Graph {
    let one_based = [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (3, 4),
        (2, 5),
        (4, 5),
        (5, 6),
        (6, 7),
        (6, 8),
        (7, 9),
        (8, 9),
        (7, 10),
        (8, 10),
        (9, 10),
    ];
    let edges: Vec<(usize, usize)> = one_based.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::new(10, &edges).expect("valid")
}

/// Disjoint union of `C4` and `C6` on 10 vertices.
pub fn c4c6() -> Graph {
    Graph::disjoint_union(&[cycle(4), cycle(6)]).expect("valid").0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_shapes() {
        assert_eq!((petersen().n(), petersen().m()), (10, 15));
        assert_eq!(petersen().regularity(), Some(3));
        let fig2 = fig2_bridgeless_cubic();
        assert_eq!((fig2.n(), fig2.m(), fig2.regularity()), (6, 9, Some(3)));
        let fig3 = fig3_bridged_cubic();
        assert_eq!((fig3.n(), fig3.m(), fig3.regularity()), (10, 15, Some(3)));
        assert_eq!((c4c6().n(), c4c6().m()), (10, 10));
        assert_eq!(star(7).degree(0), 7);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(complete_multipartite(&[2, 2, 2]).regularity(), Some(4));
    }
}
