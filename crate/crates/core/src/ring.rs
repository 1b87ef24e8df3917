//! The mod-2 group ring `F2[G]` and its augmentation ideal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::F2Sum;
use crate::group::{ElementSyntax, Group};

/// An element of `F2[G]`, stored as the set of group elements with
/// coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement<G: Group> {
    terms: F2Sum<G>,
}

impl<G: Group> RingElement<G> {
    pub fn zero() -> Self {
        RingElement { terms: F2Sum::zero() }
    }

    pub fn one() -> Self {
        Self::from_element(G::identity())
    }

    pub fn from_element(g: G) -> Self {
        RingElement { terms: F2Sum::singleton(g) }
    }

    pub fn from_terms(terms: F2Sum<G>) -> Self {
        RingElement { terms }
    }

    /// `g - 1`, which equals `g + 1` over F2.
    pub fn minus_one(g: G) -> Self {
        [g, G::identity()].into_iter().collect()
    }

    pub fn terms(&self) -> &F2Sum<G> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.terms += &other.terms;
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = F2Sum::zero();
        for g in &self.terms {
            for h in &other.terms {
                out.toggle(g.mul(h));
            }
        }
        RingElement { terms: out }
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, a: &G) -> Self {
        self.terms.iter().map(|g| a.mul(g)).collect()
    }

    /// Right multiplication by a group element.
    pub fn right_mul(&self, b: &G) -> Self {
        self.terms.iter().map(|g| g.mul(b)).collect()
    }

    /// The augmentation `ε`: sum of coefficients in F2.
    pub fn augmentation(&self) -> bool {
        self.terms.parity()
    }

    pub fn in_augmentation_ideal(&self) -> bool {
        !self.augmentation()
    }

    /// The `G × G` action `(a, b) · Σ g = Σ a g b̄`.
    pub fn biaction(&self, a: &G, b: &G) -> Self {
        let b_inv = b.inverse();
        self.terms.iter().map(|g| a.mul(g).mul(&b_inv)).collect()
    }

    /// The ring map induced by a group homomorphism.
    pub fn map<H: Group>(&self, hom: impl Fn(&G) -> H) -> RingElement<H> {
        self.terms.iter().map(hom).collect()
    }
}

impl<G: Group> FromIterator<G> for RingElement<G> {
    fn from_iter<I: IntoIterator<Item = G>>(iter: I) -> Self {
        RingElement { terms: iter.into_iter().collect() }
    }
}

impl<G: Group> fmt::Display for RingElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for RingElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the augmentation ideal `I(G; F2)`.
///
/// `{g - 1 : g ≠ 1}` is a basis of the ideal and `Σ c_g g = Σ c_g (g - 1)`
/// whenever `Σ c_g = 0`, so the basis coordinates are the support minus the
/// identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdealElement<G: Group>(RingElement<G>);

impl<G: Group> IdealElement<G> {
    pub fn new(r: RingElement<G>) -> Result<Self> {
        if r.augmentation() {
            Err(Error::NonzeroAugmentation { index: 0 })
        } else {
            Ok(IdealElement(r))
        }
    }

    pub fn minus_one(g: G) -> Self {
        IdealElement(RingElement::minus_one(g))
    }

    pub fn as_ring(&self) -> &RingElement<G> {
        &self.0
    }

    pub fn into_ring(self) -> RingElement<G> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Coordinates in the `(g - 1)` basis.
    pub fn basis(&self) -> F2Sum<G> {
        self.0.terms.filter_map(|g| (!g.is_identity()).then(|| g.clone()))
    }
}

impl<G: Group> fmt::Display for IdealElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis();
        if basis.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in basis.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({g}-1)")?;
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for IdealElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a ring expression such as `"x + yx + 1"`, `"(1-x)yx"` or
/// `"x(yx-1)"`. Subtraction is addition over F2; juxtaposition multiplies.
pub fn parse_ring<G: ElementSyntax>(text: &str) -> Result<RingElement<G>> {
    let mut parser = RingParser { src: text, chars: text.char_indices().collect(), pos: 0 };
    let r = parser.sum()?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(r)
}

struct RingParser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> RingParser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn is_sign(c: char) -> bool {
        matches!(c, '+' | '-' | '−')
    }

    fn sum<G: ElementSyntax>(&mut self) -> Result<RingElement<G>> {
        self.skip_ws();
        if self.peek().is_some_and(Self::is_sign) {
            self.pos += 1;
        }
        let mut acc = self.product()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if Self::is_sign(c) => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product<G: ElementSyntax>(&mut self) -> Result<RingElement<G>> {
        let mut acc: Option<RingElement<G>> = None;
        loop {
            self.skip_ws();
            let atom = match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sum()?;
                    self.skip_ws();
                    if self.peek() != Some(')') {
                        return Err(Error::Parse(format!("unbalanced parenthesis in {:?}", self.src)));
                    }
                    self.pos += 1;
                    inner
                }
                Some('0') => {
                    self.pos += 1;
                    RingElement::zero()
                }
                Some(c) if !Self::is_sign(c) && c != ')' => RingElement::from_element(self.word()?),
                _ => break,
            };
            acc = Some(match acc {
                None => atom,
                Some(a) => a.mul(&atom),
            });
        }
        acc.ok_or_else(|| Error::Parse(format!("expected a term in {:?}", self.src)))
    }

    fn word<G: ElementSyntax>(&mut self) -> Result<G> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == '(' || c == ')' || c.is_whitespace() || Self::is_sign(c) {
                break;
            }
            self.pos += 1;
            if c == '^' && self.peek().is_some_and(Self::is_sign) {
                self.pos += 1;
            }
        }
        let begin = self.chars[start].0;
        let end = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        G::parse_element(&self.src[begin..end])
    }
}
