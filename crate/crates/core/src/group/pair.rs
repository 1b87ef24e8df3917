use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ElementSyntax, Group};
use crate::error::{Error, Result};

/// An element `(left, right)` of a direct product `A × B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Group, B: Group> Pair<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Pair { left, right }
    }

    /// `(g, 1)`.
    pub fn left_only(left: A) -> Self {
        Pair::new(left, B::identity())
    }

    /// `(1, h)`.
    pub fn right_only(right: B) -> Self {
        Pair::new(A::identity(), right)
    }
}

impl<A: Group, B: Group> Group for Pair<A, B> {
    fn identity() -> Self {
        Pair::new(A::identity(), B::identity())
    }

    fn mul(&self, other: &Self) -> Self {
        Pair::new(self.left.mul(&other.left), self.right.mul(&other.right))
    }

    fn inverse(&self) -> Self {
        Pair::new(self.left.inverse(), self.right.inverse())
    }

    fn is_identity(&self) -> bool {
        self.left.is_identity() && self.right.is_identity()
    }
}

impl<A: ElementSyntax, B: ElementSyntax> ElementSyntax for Pair<A, B> {
    fn parse_element(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (g,h), found {text:?}")))?;
        let (l, r) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected (g,h), found {text:?}")))?;
        Ok(Pair::new(A::parse_element(l)?, B::parse_element(r)?))
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Debug for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
