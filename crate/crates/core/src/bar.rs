//! The normalized bar complex with trivial F2 coefficients.
//!
//! A chain of degree `m` is an F2-combination of tuples `[g1|...|gm]` of
//! non-identity elements. Tuples with an identity entry are zero and are
//! never stored.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::F2Sum;
use crate::group::{Dihedral, ElementSyntax, FreeProductWord, Group, Pair};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarChain<G: Group> {
    degree: usize,
    terms: F2Sum<Vec<G>>,
}

impl<G: Group> BarChain<G> {
    pub fn zero(degree: usize) -> Self {
        BarChain { degree, terms: F2Sum::zero() }
    }

    /// The degree-0 generator `[]`.
    pub fn unit() -> Self {
        BarChain { degree: 0, terms: F2Sum::singleton(Vec::new()) }
    }

    /// A single bar tuple; zero if some entry is the identity.
    pub fn from_tuple(tuple: Vec<G>) -> Self {
        let mut c = Self::zero(tuple.len());
        c.toggle(tuple);
        c
    }

    pub fn from_tuples(degree: usize, tuples: impl IntoIterator<Item = Vec<G>>) -> Result<Self> {
        let mut c = Self::zero(degree);
        for t in tuples {
            if t.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: t.len() });
            }
            c.toggle(t);
        }
        Ok(c)
    }

    /// Adds one tuple, dropping degenerate ones.
    fn toggle(&mut self, tuple: Vec<G>) {
        debug_assert_eq!(tuple.len(), self.degree);
        if tuple.iter().all(|g| !g.is_identity()) {
            self.terms.toggle(tuple);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        out.terms += &other.terms;
        Ok(out)
    }

    /// Boundary with trivial coefficients: the leading face `g1·[g2|...]`
    /// loses its group action in the coinvariants, signs vanish mod 2, and
    /// faces with an identity entry are dropped.
    pub fn boundary(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeZeroBoundary);
        }
        let mut out = Self::zero(self.degree - 1);
        for t in &self.terms {
            for face in faces(t) {
                out.toggle(face);
            }
        }
        Ok(out)
    }

    /// Applies a group homomorphism entrywise; tuples that acquire an
    /// identity entry vanish.
    pub fn map<H: Group>(&self, hom: impl Fn(&G) -> H) -> BarChain<H> {
        let mut out = BarChain::zero(self.degree);
        for t in &self.terms {
            out.toggle(t.iter().map(&hom).collect());
        }
        out
    }
}

fn faces<G: Group>(t: &[G]) -> Vec<Vec<G>> {
    let m = t.len();
    let mut out = Vec::with_capacity(m + 1);
    out.push(t[1..].to_vec());
    for i in 0..m - 1 {
        let mut face = Vec::with_capacity(m - 1);
        face.extend_from_slice(&t[..i]);
        face.push(t[i].mul(&t[i + 1]));
        face.extend_from_slice(&t[i + 2..]);
        out.push(face);
    }
    out.push(t[..m - 1].to_vec());
    out
}

/// `[g|g|...|g]` with `i` entries. This is a cycle when `g² = 1`: the outer
/// faces cancel and every inner face contains `g² = 1`.
pub fn constant_cycle<G: Group>(g: &G, i: usize) -> Result<BarChain<G>> {
    if !g.mul(g).is_identity() {
        return Err(Error::NotAnInvolution { element: g.to_string() });
    }
    Ok(BarChain::from_tuple(vec![g.clone(); i]))
}

/// `α'_i = [x|...|x]` in the dihedral presentation.
pub fn alpha_cycle(i: usize) -> BarChain<Dihedral> {
    BarChain::from_tuple(vec![Dihedral::x(); i])
}

/// `β'_i = [yx|...|yx]` in the dihedral presentation.
pub fn beta_cycle(i: usize) -> BarChain<Dihedral> {
    BarChain::from_tuple(vec![Dihedral::yx(); i])
}

/// `α'_i + β'_i`, representing the image of the top class in degree `i`.
///
/// In degree 0 both summands are the same generator, so the sum is not a
/// meaningful representative there.
pub fn gamma_cycle(i: usize) -> Result<BarChain<Dihedral>> {
    if i == 0 {
        return Err(Error::Unsupported("gamma cycle needs degree >= 1".into()));
    }
    alpha_cycle(i).add(&beta_cycle(i))
}

/// `[t|...|t]` for generator `letter` of the free product.
pub fn letter_cycle(letter: u8, i: usize) -> BarChain<FreeProductWord> {
    BarChain::from_tuple(vec![FreeProductWord::generator(letter); i])
}

/// `Σ_{j=1..g} [t_j|...|t_j]` in degree `i` over the free product of rank `g`.
pub fn top_class_cycle(g: u8, i: usize) -> BarChain<FreeProductWord> {
    let mut out = BarChain::zero(i);
    for letter in 1..=g {
        out.terms += letter_cycle(letter, i).terms;
    }
    out
}

/// The Eilenberg–Zilber shuffle map `B(A) ⊗ B(B) → B(A × B)`.
///
/// For pure tuples `[g1|...|gi] ⊗ [h1|...|hj]` this sums, over all
/// `(i, j)`-shuffles, the interleavings of the letters `(g, 1)` and `(1, h)`.
/// A shuffle is determined by the set of positions carrying left letters.
pub fn ez<A: Group, B: Group>(c: &BarChain<A>, d: &BarChain<B>) -> BarChain<Pair<A, B>> {
    let i = c.degree;
    let j = d.degree;
    let mut out = BarChain::zero(i + j);
    for left in &c.terms {
        for right in &d.terms {
            shuffle_into(left, right, &mut out);
        }
    }
    out
}

fn shuffle_into<A: Group, B: Group>(left: &[A], right: &[B], out: &mut BarChain<Pair<A, B>>) {
    let n = left.len() + right.len();
    for positions in (0..n).combinations(left.len()) {
        let mut tuple = Vec::with_capacity(n);
        let (mut l, mut r) = (left.iter(), right.iter());
        let mut next = positions.iter().peekable();
        for k in 0..n {
            if next.peek() == Some(&&k) {
                next.next();
                tuple.push(Pair::left_only(l.next().unwrap().clone()));
            } else {
                tuple.push(Pair::right_only(r.next().unwrap().clone()));
            }
        }
        out.toggle(tuple);
    }
}

/// An F2-combination of pure tensors of bar tuples `u ⊗ v`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiChain<G: Group> {
    terms: F2Sum<(Vec<G>, Vec<G>)>,
}

impl<G: Group> BiChain<G> {
    pub fn zero() -> Self {
        BiChain { terms: F2Sum::zero() }
    }

    pub fn tensor(c: &BarChain<G>, d: &BarChain<G>) -> Self {
        let mut out = Self::zero();
        for u in &c.terms {
            for v in &d.terms {
                out.terms.toggle((u.clone(), v.clone()));
            }
        }
        out
    }

    fn toggle(&mut self, u: Vec<G>, v: Vec<G>) {
        if u.iter().chain(v.iter()).all(|g| !g.is_identity()) {
            self.terms.toggle((u, v));
        }
    }

    pub fn terms(&self) -> &F2Sum<(Vec<G>, Vec<G>)> {
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

    /// Keeps only the summands of bidegree `(i, j)`.
    pub fn kunneth_project(&self, i: usize, j: usize) -> Self {
        BiChain {
            terms: self.terms.filter_map(|(u, v)| (u.len() == i && v.len() == j).then(|| (u.clone(), v.clone()))),
        }
    }

    /// The bidegrees present, in increasing order.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        self.terms.iter().map(|(u, v)| (u.len(), v.len())).dedup().collect::<std::collections::BTreeSet<_>>().into_iter().collect()
    }

    /// `∂(u ⊗ v) = ∂u ⊗ v + u ⊗ ∂v`, with `∂ = 0` in degree 0.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero();
        for (u, v) in &self.terms {
            if !u.is_empty() {
                for face in faces(u) {
                    out.toggle(face, v.clone());
                }
            }
            if !v.is_empty() {
                for face in faces(v) {
                    out.toggle(u.clone(), face);
                }
            }
        }
        out
    }

    /// Component-wise coproduct on the left factor: `(AW ⊗ 1)`, giving
    /// triples `(u1, u2, v)`.
    pub fn aw_left(&self) -> F2Sum<(Vec<G>, Vec<G>, Vec<G>)> {
        let mut out = F2Sum::zero();
        for (u, v) in &self.terms {
            for i in 0..=u.len() {
                out.toggle((u[..i].to_vec(), u[i..].to_vec(), v.clone()));
            }
        }
        out
    }

    /// `(1 ⊗ AW)`, giving triples `(u, v1, v2)`.
    pub fn aw_right(&self) -> F2Sum<(Vec<G>, Vec<G>, Vec<G>)> {
        let mut out = F2Sum::zero();
        for (u, v) in &self.terms {
            for i in 0..=v.len() {
                out.toggle((u.clone(), v[..i].to_vec(), v[i..].to_vec()));
            }
        }
        out
    }
}

/// The Alexander–Whitney coproduct
/// `[g1|...|gm] ↦ Σ_i [g1|...|gi] ⊗ [g(i+1)|...|gm]`.
pub fn aw<G: Group>(c: &BarChain<G>) -> BiChain<G> {
    let mut out = BiChain::zero();
    for t in &c.terms {
        for i in 0..=t.len() {
            out.terms.toggle((t[..i].to_vec(), t[i..].to_vec()));
        }
    }
    out
}

fn write_tuple<G: fmt::Display>(f: &mut fmt::Formatter<'_>, t: &[G]) -> fmt::Result {
    write!(f, "[")?;
    for (i, g) in t.iter().enumerate() {
        if i > 0 {
            write!(f, "|")?;
        }
        write!(f, "{g}")?;
    }
    write!(f, "]")
}

impl<G: Group> fmt::Display for BarChain<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_tuple(f, t)?;
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for BarChain<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BarChain<{}>({self})", self.degree)
    }
}

impl<G: Group> fmt::Display for BiChain<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, (u, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_tuple(f, u)?;
            write!(f, "⊗")?;
            write_tuple(f, v)?;
        }
        Ok(())
    }
}

impl<G: Group> fmt::Debug for BiChain<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"[x|x] + [yx|x]"`; pair entries are written `(x,1)`. `"[]"` is
/// the degree-0 generator and `"0"` the zero chain of the given degree.
pub fn parse_chain<G: ElementSyntax>(text: &str, degree: usize) -> Result<BarChain<G>> {
    let text = text.trim();
    if text == "0" {
        return Ok(BarChain::zero(degree));
    }
    let mut tuples = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, c) in text.char_indices() {
        match c {
            '[' if depth == 0 => {
                start = Some(i + 1);
                depth += 1;
            }
            '(' | '[' => depth += 1,
            ')' => depth -= 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let body = &text[start.take().unwrap()..i];
                    tuples.push(parse_tuple::<G>(body)?);
                }
            }
            '+' | ' ' if depth == 0 => {}
            _ if depth == 0 => return Err(Error::Parse(format!("unexpected {c:?} in {text:?}"))),
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
    }
    BarChain::from_tuples(degree, tuples)
}

fn parse_tuple<G: ElementSyntax>(body: &str) -> Result<Vec<G>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split('|').map(G::parse_element).collect()
}
