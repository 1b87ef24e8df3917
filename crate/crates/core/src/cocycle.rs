//! The canonical degree-1 cocycle `ν([(g, h)]) = g h̄ - 1` on the bar
//! complex of `G × G`, and its cup powers.
//!
//! Coefficients are F2, so the integral sign `(-1)^{n(n-1)/2}` of the power
//! formula disappears.

use rayon::prelude::*;

use crate::bar::BarChain;
use crate::error::{Error, Result};
use crate::f2::F2Sum;
use crate::group::{Group, Pair};
use crate::ring::IdealElement;
use crate::tensor::TensorElement;

/// `ν([(g, h)]) = g h̄ - 1`; zero exactly when `g = h`.
pub fn nu<G: Group>(entry: &Pair<G, G>) -> IdealElement<G> {
    IdealElement::minus_one(entry.left.mul_inv(&entry.right))
}

/// `ν^n` on a single tuple `[(g1,h1)|...|(gn,hn)]`:
///
/// ```text
/// ⊗_i (g1...g(i-1)) (u_i - 1) (h̄(i-1)...h̄1),   u_i = g_i h̄_i,
/// ```
///
/// expanded in the `(g - 1)` basis. Factor `i` equals
/// `(P u_i Q - 1) + (P Q - 1)` with `P`, `Q` the running prefixes.
pub fn nu_power_tuple<G: Group>(tuple: &[Pair<G, G>]) -> TensorElement<G> {
    let mut left_prefix = G::identity();
    let mut right_suffix = G::identity();
    let mut bases = Vec::with_capacity(tuple.len());
    for entry in tuple {
        let u = entry.left.mul_inv(&entry.right);
        let moved = left_prefix.mul(&u).mul(&right_suffix);
        let fixed = left_prefix.mul(&right_suffix);
        let factor: F2Sum<G> = [moved, fixed].into_iter().filter(|g| !g.is_identity()).collect();
        if factor.is_zero() {
            return TensorElement::zero(tuple.len());
        }
        bases.push(factor.to_vec());
        left_prefix = left_prefix.mul(&entry.left);
        right_suffix = entry.right.inverse().mul(&right_suffix);
    }
    TensorElement::expand_bases(&bases)
}

/// `ν^n` evaluated on a degree-`n` chain, extended linearly.
pub fn nu_power<G: Group>(n: usize, chain: &BarChain<Pair<G, G>>) -> Result<TensorElement<G>> {
    if chain.degree() != n && !chain.is_zero() {
        return Err(Error::DegreeMismatch { expected: n, found: chain.degree() });
    }
    let tuples: Vec<&Vec<Pair<G, G>>> = chain.terms().iter().collect();
    let terms = tuples
        .par_iter()
        .fold(F2Sum::zero, |mut acc, t| {
            acc += nu_power_tuple(t).terms().clone();
            acc
        })
        .reduce(F2Sum::zero, |a, b| a + b);
    TensorElement::from_terms(n, terms)
}
