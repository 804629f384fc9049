//! Shared helpers for the integration suites: deterministic random
//! graphs and distributions, and a solver wrapper with the default
//! tolerance.
#![allow(dead_code)]

use graph_entropy::{entropy, Distribution, Graph};
use rand::Rng;

pub const TOL: f64 = 1e-9;

/// Graph on `n` vertices from a flat upper-triangle adjacency selection.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if *bits.get(k).unwrap_or(&false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// Normalizes positive weights into a float distribution.
pub fn dist_from_weights(w: &[f64]) -> Distribution {
    let sum: f64 = w.iter().sum();
    Distribution::new_float(w.iter().map(|x| x / sum).collect()).expect("valid weights")
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let bits: Vec<bool> =
        (0..n * (n - 1) / 2).map(|_| rng.gen::<f64>() < density).collect();
    graph_from_bits(n, &bits)
}

pub fn random_dist<R: Rng>(rng: &mut R, n: usize) -> Distribution {
    let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() + 0.01).collect();
    dist_from_weights(&w)
}

pub fn h(g: &Graph, p: &Distribution) -> f64 {
    entropy::graph_entropy(g, p, TOL).expect("solver").value_bits
}

/// Independent minimization oracle: pairwise-exchange descent over the
/// maximal-independent-set simplex. The objective is convex and the
/// exchange directions span the simplex's feasible cone, so this reaches
/// the global minimum without the solver's machinery.
pub fn simplex_descent_min(g: &Graph, p: &Distribution) -> f64 {
    let sets = graph_entropy::combin::maximal_independent_sets(g).expect("enumeration");
    let pf = p.to_floats();
    let k = sets.len();
    let value = |lambda: &[f64]| -> f64 {
        let mut a = vec![0.0f64; g.n()];
        for (j, &s) in sets.iter().enumerate() {
            for v in s.iter() {
                a[v] += lambda[j];
            }
        }
        let mut total = 0.0;
        for i in 0..g.n() {
            if pf[i] > 0.0 {
                if a[i] <= 0.0 {
                    return f64::INFINITY;
                }
                total -= pf[i] * a[i].log2();
            }
        }
        total
    };
    let mut lambda = vec![1.0 / k as f64; k];
    let mut best = value(&lambda);
    let mut eps = 0.25f64;
    while eps > 1e-10 {
        let mut improved = false;
        for i in 0..k {
            for j in 0..k {
                if i == j || lambda[i] < eps {
                    continue;
                }
                let mut trial = lambda.clone();
                trial[i] -= eps;
                trial[j] += eps;
                let v = value(&trial);
                if v < best {
                    best = v;
                    lambda = trial;
                    improved = true;
                }
            }
        }
        if !improved {
            eps *= 0.5;
        }
    }
    best
}

/// Exhaustive minimum-entropy proper coloring by enumerating every
/// partition of the vertices into independent sets.
pub fn exhaustive_min_coloring_entropy(g: &Graph, p: &Distribution) -> f64 {
    fn rec(
        g: &Graph,
        p: &[f64],
        v: usize,
        classes: &mut Vec<graph_entropy::VertexSet>,
        best: &mut f64,
    ) {
        if v == g.n() {
            let masses: Vec<f64> = classes
                .iter()
                .map(|c| c.iter().map(|i| p[i]).sum())
                .collect();
            let e = graph_entropy::math::entropy_bits(&masses);
            if e < *best {
                *best = e;
            }
            return;
        }
        let nb = g.neighbors_set(v);
        for idx in 0..classes.len() {
            if classes[idx].is_disjoint(nb) {
                classes[idx].insert(v);
                rec(g, p, v + 1, classes, best);
                classes[idx].remove(v);
            }
        }
        classes.push(graph_entropy::VertexSet::singleton(v));
        rec(g, p, v + 1, classes, best);
        classes.pop();
    }
    let mut best = f64::INFINITY;
    rec(g, &p.to_floats(), 0, &mut Vec::new(), &mut best);
    best
}
