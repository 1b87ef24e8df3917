//! The projection `I^{⊗4} → I ⊗ Λ³ I` and the element
//! `s = (x-1)∧(yx-1)∧(y-ȳ)`.
//!
//! Over F2 the exterior cube has basis `e_a∧e_b∧e_c` for strictly increasing
//! triples under the global element order; a repeated factor kills a term and
//! reordering costs no sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::F2Sum;
use crate::group::{project_d_to_y, Dihedral, Group};
use crate::ring::IdealElement;
use crate::tensor::TensorElement;

/// A sorted triple of distinct non-identity elements.
pub type WedgeTriple<G> = [G; 3];

/// An element of `Λ³ I(G; F2)`.
pub type Exterior3<G> = F2Sum<WedgeTriple<G>>;

/// An element of `I(G; F2) ⊗ Λ³ I(G; F2)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WedgeElement<G: Group> {
    terms: F2Sum<(G, WedgeTriple<G>)>,
}

/// Sorts three basis elements; `None` if two coincide or one is trivial.
pub fn sorted_triple<G: Group>(a: G, b: G, c: G) -> Option<WedgeTriple<G>> {
    let mut t = [a, b, c];
    t.sort();
    let distinct = t[0] != t[1] && t[1] != t[2];
    let nontrivial = t.iter().all(|g| !g.is_identity());
    (distinct && nontrivial).then_some(t)
}

impl<G: Group> WedgeElement<G> {
    pub fn zero() -> Self {
        WedgeElement { terms: F2Sum::zero() }
    }

    pub fn terms(&self) -> &F2Sum<(G, WedgeTriple<G>)> {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.terms += &other.terms;
        out
    }

    /// `u ⊗ (a ∧ b ∧ c)` built from ideal elements, expanded in the basis.
    pub fn from_factors(u: &IdealElement<G>, a: &IdealElement<G>, b: &IdealElement<G>, c: &IdealElement<G>) -> Self {
        let wedge = wedge3(a, b, c);
        let mut out = Self::zero();
        for first in &u.basis() {
            for triple in &wedge {
                out.terms.toggle((first.clone(), triple.clone()));
            }
        }
        out
    }

    /// Pushes the first factor through `hom` into `I(Y; F2) ≅ F2` (or any
    /// target), keeping the exterior part. Terms whose first factor dies are
    /// dropped; surviving first factors are forgotten, so the target must be
    /// one-dimensional for this to be meaningful.
    pub fn first_factor_to_line<H: Group>(&self, hom: impl Fn(&G) -> H) -> Exterior3<G> {
        self.terms.filter_map(|(u, triple)| (!hom(u).is_identity()).then(|| triple.clone()))
    }
}

/// `a ∧ b ∧ c` in the basis.
pub fn wedge3<G: Group>(a: &IdealElement<G>, b: &IdealElement<G>, c: &IdealElement<G>) -> Exterior3<G> {
    let mut out = F2Sum::zero();
    for p in &a.basis() {
        for q in &b.basis() {
            for r in &c.basis() {
                if let Some(t) = sorted_triple(p.clone(), q.clone(), r.clone()) {
                    out.toggle(t);
                }
            }
        }
    }
    out
}

/// Keeps factor 1 and wedges factors 2–4.
pub fn wedge_project<G: Group>(t: &TensorElement<G>) -> Result<WedgeElement<G>> {
    if t.arity() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: t.arity() });
    }
    let mut out = WedgeElement::zero();
    for tuple in t.terms() {
        if let Some(triple) = sorted_triple(tuple[1].clone(), tuple[2].clone(), tuple[3].clone()) {
            out.terms.toggle((tuple[0].clone(), triple));
        }
    }
    Ok(out)
}

/// The composite used for the final step of the argument: wedge the last
/// three factors, then send the first factor to `I(Y; F2) ≅ F2` by `x ↦ 1`.
pub fn wedge_then_y(t: &TensorElement<Dihedral>) -> Result<Exterior3<Dihedral>> {
    Ok(wedge_project(t)?.first_factor_to_line(project_d_to_y))
}

/// `s = (x-1)∧(yx-1)∧(y-ȳ)` with `y - ȳ = (y-1) + (ȳ-1)` over F2.
pub fn s_element() -> Exterior3<Dihedral> {
    let y_minus_ybar = IdealElement::new([Dihedral::y(), Dihedral::y().inverse()].into_iter().collect())
        .expect("two terms have augmentation zero");
    wedge3(&IdealElement::minus_one(Dihedral::x()), &IdealElement::minus_one(Dihedral::yx()), &y_minus_ybar)
}

/// The basis wedges of `s` and whether `s ≠ 0`.
pub fn s_element_nonzero() -> (Vec<WedgeTriple<Dihedral>>, bool) {
    let s = s_element();
    let nonzero = !s.is_zero();
    (s.to_vec(), nonzero)
}

pub fn format_exterior<G: Group>(e: &Exterior3<G>) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.iter()
        .map(|[a, b, c]| format!("({a}-1)∧({b}-1)∧({c}-1)"))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl<G: Group> fmt::Display for WedgeElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, (u, [a, b, c])) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({u}-1)⊗({a}-1)∧({b}-1)∧({c}-1)")?;
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for WedgeElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
