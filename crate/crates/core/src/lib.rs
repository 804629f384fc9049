//! Graph entropy and related invariants, computed exactly at desk scale.
//!
//! The central object is the entropy of a probabilistic graph `(G, P)`,
//! defined as the minimum of `Σ p_i log₂(1/a_i)` over the vertex packing
//! polytope of `G` (the convex hull of independent-set indicator vectors).
//! Around it this crate provides:
//!
//! * graph constructions (complement, union, line graph, OR product,
//!   vertex substitution) and structural queries ([`graph`]),
//! * exact enumeration oracles over independent sets, cliques, matchings
//!   and odd cuts ([`combin`]),
//! * a Frank–Wolfe solver for the entropy program with a certified
//!   duality gap ([`entropy`]),
//! * closed-form entropy evaluations for complete, complete multipartite,
//!   disconnected and bipartite graphs ([`closed`]),
//! * exact-rational fractional chromatic and fractional edge-chromatic
//!   numbers ([`fractional`]),
//! * minimum-entropy colorings by branch and bound ([`chromatic`]),
//! * certification of "symmetric with respect to graph entropy", with
//!   machine-checkable certificates ([`certify`]).
//!
//! All values are reported in bits (logarithms base 2). Everything here is
//! `no_std` with `alloc`; the companion CLI crate carries IO and formats.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod builtins;
pub mod certify;
pub mod chromatic;
pub mod closed;
pub mod combin;
pub mod dist;
pub mod entropy;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod math;
pub mod polytope;
pub mod rational;
mod simplex;

pub use bitset::VertexSet;
pub use dist::Distribution;
pub use error::Error;
pub use graph::Graph;
pub use polytope::PolytopePoint;
pub use rational::Rational;
