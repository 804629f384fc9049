//! Points of the vertex packing polytope, carried as explicit convex
//! combinations of independent-set indicator vectors so that membership
//! is certified by construction.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::math;

const COEF_TOL: f64 = 1e-12;

/// A point `a ∈ VP(G)` with its support decomposition
/// `a = Σ λ_J · 1_J` over independent sets `J`.
#[derive(Clone, Debug)]
pub struct PolytopePoint {
    support: Vec<(VertexSet, f64)>,
    dense: Vec<f64>,
}

impl PolytopePoint {
    /// Builds a point from its support, checking coefficient validity and
    /// that every support member is independent in `g`. Dense coordinates
    /// are derived from the support.
    pub fn from_support(g: &Graph, support: Vec<(VertexSet, f64)>) -> Result<Self, Error> {
        let mut total = 0.0f64;
        for &(set, lambda) in &support {
            if lambda < 0.0 || !lambda.is_finite() {
                return Err(Error::InfeasiblePoint(alloc::format!(
                    "negative coefficient {lambda}"
                )));
            }
            if !g.is_independent_set(set) {
                return Err(Error::InfeasiblePoint(alloc::format!(
                    "support member {set:?} is not independent"
                )));
            }
            total += lambda;
        }
        if math::abs(total - 1.0) > COEF_TOL {
            return Err(Error::InfeasiblePoint(alloc::format!(
                "coefficients sum to {total}"
            )));
        }
        let mut dense = vec![0.0f64; g.n()];
        for &(set, lambda) in &support {
            for v in set.iter() {
                dense[v] += lambda;
            }
        }
        Ok(PolytopePoint { support, dense })
    }

    #[inline]
    pub fn coord(&self, i: usize) -> f64 {
        self.dense[i]
    }

    pub fn dense(&self) -> &[f64] {
        &self.dense
    }

    pub fn support(&self) -> &[(VertexSet, f64)] {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.dense.len()
    }
}
