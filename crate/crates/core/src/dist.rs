//! Probability distributions over vertices (or over the edges of a root
//! graph when working on its line graph), in exact-rational or float mode.

use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::math;
use crate::rational::{self, Rational};

const FLOAT_SUM_TOL: f64 = 1e-12;

/// A probability vector. Rational mode validates exactly; float mode
/// within `1e-12` of total mass one.
#[derive(Clone, Debug, PartialEq)]
pub enum Distribution {
    Float(Vec<f64>),
    Rational(Vec<Rational>),
}

impl Distribution {
    /// Validates nonnegativity and unit total mass.
    pub fn new_float(weights: Vec<f64>) -> Result<Self, Error> {
        if let Some(i) = weights.iter().position(|&w| w < 0.0 || !w.is_finite()) {
            return Err(Error::NegativeEntry(i));
        }
        let sum: f64 = weights.iter().sum();
        if math::abs(sum - 1.0) > FLOAT_SUM_TOL {
            return Err(Error::SumNotOne);
        }
        Ok(Distribution::Float(weights))
    }

    pub fn new_rational(weights: Vec<Rational>) -> Result<Self, Error> {
        if let Some(i) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeEntry(i));
        }
        let sum: Rational = weights.iter().cloned().sum();
        if !sum.is_one() {
            return Err(Error::SumNotOne);
        }
        Ok(Distribution::Rational(weights))
    }

    /// Exact uniform distribution on `n` points.
    pub fn uniform(n: usize) -> Self {
        let w = rational::rat(1, n as i64);
        Distribution::Rational(alloc::vec![w; n])
    }

    pub fn len(&self) -> usize {
        match self {
            Distribution::Float(w) => w.len(),
            Distribution::Rational(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Distribution::Rational(_))
    }

    pub fn get_f64(&self, i: usize) -> f64 {
        match self {
            Distribution::Float(w) => w[i],
            Distribution::Rational(w) => rational::to_f64(&w[i]),
        }
    }

    pub fn to_floats(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.get_f64(i)).collect()
    }

    /// Exact weights when in rational mode.
    pub fn rationals(&self) -> Option<&[Rational]> {
        match self {
            Distribution::Rational(w) => Some(w),
            Distribution::Float(_) => None,
        }
    }

    /// Total mass of a vertex subset, as a float.
    pub fn mass_f64(&self, s: VertexSet) -> f64 {
        s.iter().map(|v| self.get_f64(v)).sum()
    }

    /// Total mass of a subset given as labels, exactly when rational.
    pub fn mass_rational(&self, vs: &[usize]) -> Option<Rational> {
        let w = self.rationals()?;
        Some(vs.iter().map(|&v| w[v].clone()).sum())
    }

    /// Support (indices with positive mass).
    pub fn support(&self) -> Vec<usize> {
        match self {
            Distribution::Float(w) => {
                (0..w.len()).filter(|&i| w[i] > 0.0).collect()
            }
            Distribution::Rational(w) => {
                (0..w.len()).filter(|&i| w[i].is_positive()).collect()
            }
        }
    }

    /// Distribution substitution `P_{v←Q}`: mass `P(x)` off the
    /// substituted block and `P(v)·Q(y)` on it, laid out to match
    /// [`crate::Graph::substitute`] (survivors first, then the block).
    pub fn substitute(&self, v: usize, q: &Distribution) -> Result<Distribution, Error> {
        if v >= self.len() {
            return Err(Error::UnknownVertex(v));
        }
        match (self, q) {
            (Distribution::Rational(p), Distribution::Rational(qw)) => {
                let mut out: Vec<Rational> = Vec::with_capacity(p.len() - 1 + qw.len());
                for (i, w) in p.iter().enumerate() {
                    if i != v {
                        out.push(w.clone());
                    }
                }
                for w in qw {
                    out.push(&p[v] * w);
                }
                Distribution::new_rational(out)
            }
            _ => {
                let p = self.to_floats();
                let qw = q.to_floats();
                let mut out: Vec<f64> = Vec::with_capacity(p.len() - 1 + qw.len());
                for (i, &w) in p.iter().enumerate() {
                    if i != v {
                        out.push(w);
                    }
                }
                for &w in &qw {
                    out.push(p[v] * w);
                }
                // Renormalization is deliberately absent; the product sums
                // to 1 up to float rounding, which validation tolerates.
                Distribution::new_float(out)
            }
        }
    }

    /// `n`-fold product distribution on tuples, mixed-radix encoded to
    /// match [`crate::Graph::or_product`] (last coordinate fastest).
    pub fn power(&self, depth: usize) -> Distribution {
        assert!(depth >= 1);
        match self {
            Distribution::Rational(w) => {
                let mut out = alloc::vec![rational::rat_one()];
                for _ in 0..depth {
                    let mut next = Vec::with_capacity(out.len() * w.len());
                    for a in &out {
                        for b in w {
                            next.push(a * b);
                        }
                    }
                    out = next;
                }
                Distribution::Rational(out)
            }
            Distribution::Float(w) => {
                let mut out = alloc::vec![1.0f64];
                for _ in 0..depth {
                    let mut next = Vec::with_capacity(out.len() * w.len());
                    for a in &out {
                        for b in w {
                            next.push(a * b);
                        }
                    }
                    out = next;
                }
                Distribution::Float(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn validation() {
        assert!(Distribution::new_float(alloc::vec![0.5, 0.5]).is_ok());
        assert_eq!(
            Distribution::new_float(alloc::vec![0.3, 0.3, 0.3]),
            Err(Error::SumNotOne)
        );
        assert_eq!(
            Distribution::new_float(alloc::vec![1.5, -0.5]),
            Err(Error::NegativeEntry(1))
        );
        assert!(Distribution::new_rational(alloc::vec![rat(1, 3); 3]).is_ok());
        assert_eq!(
            Distribution::new_rational(alloc::vec![rat(1, 3); 2]),
            Err(Error::SumNotOne)
        );
    }

    #[test]
    fn substitution_arithmetic() {
        // Uniform C5 with uniform K3 substituted at vertex 0: survivors
        // keep 1/5, the block splits 1/5 into three 1/15.
        let p = Distribution::uniform(5);
        let q = Distribution::uniform(3);
        let s = p.substitute(0, &q).unwrap();
        let w = s.rationals().unwrap();
        assert_eq!(w[..4], alloc::vec![rat(1, 5); 4]);
        assert_eq!(w[4..], alloc::vec![rat(1, 15); 3]);
    }

    #[test]
    fn power_is_product_measure() {
        let p = Distribution::new_rational(alloc::vec![rat(1, 4), rat(3, 4)]).unwrap();
        let p2 = p.power(2);
        let w = p2.rationals().unwrap();
        assert_eq!(w[0], rat(1, 16));
        assert_eq!(w[1], rat(3, 16));
        assert_eq!(w[2], rat(3, 16));
        assert_eq!(w[3], rat(9, 16));
    }
}
