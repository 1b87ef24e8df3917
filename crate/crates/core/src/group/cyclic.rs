use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Group, WordSyntax};

/// The group of order two generated by the symbol `S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Cyclic2<const S: char> {
    odd: bool,
}

/// `Y = <y | y^2 = 1>`.
pub type Y = Cyclic2<'y'>;
/// `Z = <z | z^2 = 1>`.
pub type Z = Cyclic2<'z'>;

impl<const S: char> Cyclic2<S> {
    pub const fn generator() -> Self {
        Cyclic2 { odd: true }
    }

    pub const fn from_parity(odd: bool) -> Self {
        Cyclic2 { odd }
    }

    pub const fn is_generator(&self) -> bool {
        self.odd
    }
}

impl<const S: char> Group for Cyclic2<S> {
    fn identity() -> Self {
        Cyclic2 { odd: false }
    }

    fn mul(&self, other: &Self) -> Self {
        Cyclic2 { odd: self.odd ^ other.odd }
    }

    fn inverse(&self) -> Self {
        *self
    }
}

impl<const S: char> WordSyntax for Cyclic2<S> {
    fn generator(symbol: char) -> Option<Self> {
        (symbol == S).then(Self::generator)
    }
}

impl<const S: char> fmt::Display for Cyclic2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.odd {
            write!(f, "{S}")
        } else {
            write!(f, "1")
        }
    }
}

impl<const S: char> fmt::Debug for Cyclic2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
