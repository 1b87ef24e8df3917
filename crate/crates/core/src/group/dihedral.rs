use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Group, WordSyntax};

/// An element `y^k x^e` of the infinite dihedral group
/// `D = <x, y | yxy = x, x^2 = 1>`.
///
/// From `yxy = x` we get `x y = y^{-1} x`, hence `x y^m = y^{-m} x` and
///
/// ```text
/// (y^k x^e)(y^m x^f) = y^{k + (-1)^e m} x^{e + f}.
/// ```
///
/// The pair `(k, e)` is a normal form. The derived order is lexicographic on
/// `(k, e)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dihedral {
    k: i64,
    e: bool,
}

impl Dihedral {
    pub const fn new(k: i64, e: bool) -> Self {
        Dihedral { k, e }
    }

    pub const fn x() -> Self {
        Dihedral::new(0, true)
    }

    pub const fn y() -> Self {
        Dihedral::new(1, false)
    }

    pub const fn yx() -> Self {
        Dihedral::new(1, true)
    }

    pub const fn k(&self) -> i64 {
        self.k
    }

    pub const fn e(&self) -> bool {
        self.e
    }

    pub fn is_involution(&self) -> bool {
        self.e || self.k == 0
    }
}

impl Group for Dihedral {
    fn identity() -> Self {
        Dihedral::new(0, false)
    }

    fn mul(&self, other: &Self) -> Self {
        let m = if self.e { -other.k } else { other.k };
        Dihedral::new(self.k + m, self.e ^ other.e)
    }

    fn inverse(&self) -> Self {
        if self.e {
            *self
        } else {
            Dihedral::new(-self.k, false)
        }
    }

    fn is_identity(&self) -> bool {
        self.k == 0 && !self.e
    }
}

impl WordSyntax for Dihedral {
    fn generator(symbol: char) -> Option<Self> {
        match symbol {
            'x' => Some(Dihedral::x()),
            'y' => Some(Dihedral::y()),
            _ => None,
        }
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = if self.e { "x" } else { "" };
        match self.k {
            0 if !self.e => write!(f, "1"),
            0 => write!(f, "x"),
            1 => write!(f, "y{x}"),
            -1 => write!(f, "ȳ{x}"),
            k => write!(f, "y^{k}{}{x}", if self.e { " " } else { "" }),
        }
    }
}

impl fmt::Debug for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The finite dihedral quotient `D_m = D / <y^m>` of order `2m`.
///
/// Elements of `D_m` are represented by `Dihedral` values with
/// `0 <= k < m`; multiplication is carried out in `D` and reduced, which is
/// valid because reduction is a homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralQuotient {
    m: u32,
}

impl DihedralQuotient {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1, "dihedral quotient needs m >= 1");
        DihedralQuotient { m }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m as usize
    }

    pub fn reduce(&self, u: &Dihedral) -> Dihedral {
        Dihedral::new(u.k.rem_euclid(i64::from(self.m)), u.e)
    }

    pub fn mul(&self, u: &Dihedral, v: &Dihedral) -> Dihedral {
        self.reduce(&u.mul(v))
    }

    /// All elements in increasing order.
    pub fn elements(&self) -> Vec<Dihedral> {
        (0..i64::from(self.m))
            .flat_map(|k| [Dihedral::new(k, false), Dihedral::new(k, true)])
            .collect()
    }

    /// All non-identity elements in increasing order; these index the
    /// `(g - 1)` basis of the augmentation ideal of `D_m`.
    pub fn nontrivial_elements(&self) -> Vec<Dihedral> {
        self.elements().into_iter().filter(|g| !g.is_identity()).collect()
    }
}
