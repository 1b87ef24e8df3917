//! Tensor powers `I(G; F2)^{⊗m}` in the `(g - 1)` basis.
//!
//! A basis tensor `(g1 - 1) ⊗ ... ⊗ (gm - 1)` is stored as the tuple
//! `(g1, ..., gm)` of non-identity elements.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::F2Sum;
use crate::group::{Dihedral, DihedralQuotient, Group};
use crate::ring::{IdealElement, RingElement};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorElement<G: Group> {
    arity: usize,
    terms: F2Sum<Vec<G>>,
}

/// A per-factor group homomorphism.
pub type FactorMap<'a, G, H> = &'a (dyn Fn(&G) -> H + Sync);

impl<G: Group> TensorElement<G> {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, terms: F2Sum::zero() }
    }

    pub fn basis(tuple: Vec<G>) -> Self {
        let mut t = Self::zero(tuple.len());
        t.toggle(tuple);
        t
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = Vec<G>>) -> Result<Self> {
        let mut t = Self::zero(arity);
        for tuple in terms {
            if tuple.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: tuple.len() });
            }
            t.toggle(tuple);
        }
        Ok(t)
    }

    pub(crate) fn toggle(&mut self, tuple: Vec<G>) {
        debug_assert_eq!(tuple.len(), self.arity);
        if tuple.iter().all(|g| !g.is_identity()) {
            self.terms.toggle(tuple);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &F2Sum<Vec<G>> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        if other.is_zero() {
            return Ok(());
        }
        if self.arity != other.arity {
            if self.is_zero() {
                *self = other.clone();
                return Ok(());
            }
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        self.terms += &other.terms;
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    /// Expands a pure tensor of augmentation-ideal elements.
    pub fn expand(factors: &[IdealElement<G>]) -> Self {
        let bases: Vec<Vec<G>> = factors.iter().map(|f| f.basis().to_vec()).collect();
        Self::expand_bases(&bases)
    }

    /// Expands a pure tensor of ring elements; every factor must have
    /// augmentation zero.
    pub fn expand_ring(factors: &[RingElement<G>]) -> Result<Self> {
        let ideals = factors
            .iter()
            .enumerate()
            .map(|(index, r)| IdealElement::new(r.clone()).map_err(|_| Error::NonzeroAugmentation { index }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::expand(&ideals))
    }

    pub(crate) fn expand_bases(bases: &[Vec<G>]) -> Self {
        let mut out = Self::zero(bases.len());
        if bases.is_empty() {
            out.toggle(Vec::new());
            return out;
        }
        if bases.iter().any(|b| b.is_empty()) {
            return out;
        }
        for tuple in bases.iter().map(|b| b.iter().cloned()).multi_cartesian_product() {
            out.toggle(tuple);
        }
        out
    }

    /// Applies `homs[i]` to factor `i`. In the basis, `(g - 1) ↦ (h(g) - 1)`,
    /// which vanishes when `h(g) = 1`.
    pub fn map_factors<H: Group>(&self, homs: &[FactorMap<'_, G, H>]) -> Result<TensorElement<H>> {
        if homs.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: homs.len() });
        }
        let mut out = TensorElement::zero(self.arity);
        for t in &self.terms {
            out.toggle(t.iter().zip(homs).map(|(g, h)| h(g)).collect());
        }
        Ok(out)
    }

    /// Applies one homomorphism to every factor.
    pub fn map_all<H: Group>(&self, hom: impl Fn(&G) -> H) -> TensorElement<H> {
        let mut out = TensorElement::zero(self.arity);
        for t in &self.terms {
            out.toggle(t.iter().map(&hom).collect());
        }
        out
    }

    /// The diagonal action of `(a, b) ∈ G × G`: every factor is sent to
    /// `a (g - 1) b̄ = (a g b̄ - 1) + (a b̄ - 1)`.
    pub fn diagonal_action(&self, a: &G, b: &G) -> Self {
        let b_inv = b.inverse();
        let shift = a.mul(&b_inv);
        let mut out = Self::zero(self.arity);
        for t in &self.terms {
            let bases: Vec<Vec<G>> = t
                .iter()
                .map(|g| {
                    let moved: F2Sum<G> = [a.mul(g).mul(&b_inv), shift.clone()]
                        .into_iter()
                        .filter(|h| !h.is_identity())
                        .collect();
                    moved.to_vec()
                })
                .collect();
            out.add_assign(&Self::expand_bases(&bases)).expect("same arity");
        }
        out
    }

    /// Concatenates factors: `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for s in &self.terms {
            for t in &other.terms {
                let mut tuple = s.clone();
                tuple.extend_from_slice(t);
                out.toggle(tuple);
            }
        }
        out
    }
}

impl TensorElement<Dihedral> {
    /// The image under `D → D_m`, with entries reduced to `0 <= k < m`.
    pub fn finite_quotient(&self, quotient: &DihedralQuotient) -> Self {
        self.map_all(|g| quotient.reduce(g))
    }
}

impl<G: Group> fmt::Display for TensorElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            for (j, g) in t.iter().enumerate() {
                if j > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "({g}-1)")?;
            }
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for TensorElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"(x-1)⊗(1-x) + x(yx-1)⊗(x+yx)"`: a sum of pure tensors whose
/// factors are ring expressions separated by `⊗` (or `*`). Top-level `+`
/// separates pure tensors.
pub fn parse_tensor<G: crate::group::ElementSyntax>(text: &str, arity: usize) -> Result<TensorElement<G>> {
    let mut out = TensorElement::zero(arity);
    for pure in split_top_level(text, &['+']) {
        let pure = pure.trim();
        if pure.is_empty() || pure == "0" {
            continue;
        }
        let factors = split_top_level(pure, &['⊗', '*'])
            .into_iter()
            .map(|f| crate::ring::parse_ring::<G>(f.trim()))
            .collect::<Result<Vec<_>>>()?;
        if factors.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: factors.len() });
        }
        out.add_assign(&TensorElement::expand_ring(&factors)?)?;
    }
    Ok(out)
}

fn split_top_level<'a>(text: &'a str, seps: &[char]) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if depth == 0 && seps.contains(&c) => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}
