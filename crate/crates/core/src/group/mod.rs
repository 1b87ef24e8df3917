//! Exact arithmetic in the groups that appear in the certificate pipeline:
//! free products of copies of Z2, the infinite dihedral group and its finite
//! quotients, the order-two groups Y and Z, and direct products.

mod cyclic;
mod dihedral;
mod free_product;
mod pair;

use std::fmt;
use std::hash::Hash;

pub use cyclic::{Cyclic2, Y, Z};
pub use dihedral::{Dihedral, DihedralQuotient};
pub use free_product::{FreeProductWord, MAX_LETTER};
pub use pair::Pair;

use crate::error::{Error, Result};

/// A group with canonical, totally ordered element representatives.
///
/// `Ord` must be a fixed global order: it drives the sorting of wedge factors
/// and the pivot order of coinvariant elimination.
pub trait Group: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn identity() -> Self;

    fn mul(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self^k` for any integer `k`.
    fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `self * other^{-1}`.
    fn mul_inv(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    fn product<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        items.into_iter().fold(Self::identity(), |acc, g| acc.mul(g))
    }
}

/// Groups whose elements can be written as words in single-character
/// generators, optionally raised to integer powers (`y^-3 x`).
pub trait WordSyntax: Group {
    fn generator(symbol: char) -> Option<Self>;
}

/// Parses a word such as `"a b a"`, `"yx"`, `"y^-3 x"`, `"ȳ"` or `"1"`.
///
/// Whitespace between generators is optional.
pub fn parse_word<G: WordSyntax>(text: &str) -> Result<G> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse(format!("empty word {text:?}")));
    }
    let mut acc = G::identity();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let base = match c {
            '1' => G::identity(),
            'ȳ' => G::generator('y')
                .map(|g| g.inverse())
                .ok_or_else(|| Error::Parse(format!("unknown generator 'ȳ' in {text:?}")))?,
            _ => G::generator(c)
                .ok_or_else(|| Error::Parse(format!("unknown generator {c:?} in {text:?}")))?,
        };
        let mut exponent = 1i64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '−') {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&c| if c == '−' { '-' } else { c }).collect();
            exponent = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {digits:?} in {text:?}")))?;
        }
        acc = acc.mul(&base.pow(exponent));
    }
    Ok(acc)
}

/// Text syntax for group elements used by the chain and tensor parsers.
pub trait ElementSyntax: Group {
    fn parse_element(text: &str) -> Result<Self>;
}

impl<G: WordSyntax> ElementSyntax for G {
    fn parse_element(text: &str) -> Result<Self> {
        parse_word(text)
    }
}

/// The isomorphism Z2 * Z2 → D, a ↦ x, b ↦ yx.
pub fn iso_to_dihedral(word: &FreeProductWord) -> Result<Dihedral> {
    let mut acc = Dihedral::identity();
    for &letter in word.letters() {
        let image = match letter {
            1 => Dihedral::x(),
            2 => Dihedral::yx(),
            _ => return Err(Error::LetterOutOfRange { letter, rank: 2 }),
        };
        acc = acc.mul(&image);
    }
    Ok(acc)
}

/// D → Y, x ↦ 1, y ↦ y.
pub fn project_d_to_y(u: &Dihedral) -> Y {
    Cyclic2::from_parity(u.k().rem_euclid(2) == 1)
}

/// D → Z, x ↦ z, y ↦ z. In particular yx ↦ 1.
pub fn project_d_to_z(u: &Dihedral) -> Z {
    Cyclic2::from_parity((u.k() + i64::from(u.e())).rem_euclid(2) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(letters: &[u8]) -> FreeProductWord {
        FreeProductWord::from_letters(letters.iter().copied()).unwrap()
    }

    #[test]
    fn iso_examples() {
        assert_eq!(iso_to_dihedral(&fp(&[1])).unwrap(), Dihedral::new(0, true));
        assert_eq!(iso_to_dihedral(&fp(&[2])).unwrap(), Dihedral::new(1, true));
        assert_eq!(iso_to_dihedral(&fp(&[1, 2])).unwrap(), Dihedral::new(-1, false));
        assert!(iso_to_dihedral(&fp(&[1, 1])).unwrap().is_identity());
        assert!(iso_to_dihedral(&fp(&[2, 2])).unwrap().is_identity());
        assert!(iso_to_dihedral(&fp(&[3])).is_err());
    }

    #[test]
    fn projections_to_order_two_groups() {
        assert!(project_d_to_y(&Dihedral::x()).is_identity());
        assert_eq!(project_d_to_y(&Dihedral::yx()), Y::generator());
        assert!(project_d_to_z(&Dihedral::yx()).is_identity());
        assert_eq!(project_d_to_z(&Dihedral::x()), Z::generator());
        assert_eq!(project_d_to_z(&Dihedral::y()), Z::generator());
    }

    #[test]
    fn word_parsing() {
        let d: Dihedral = parse_word("y^-3 x").unwrap();
        assert_eq!(d, Dihedral::new(-3, true));
        let d: Dihedral = parse_word("yx").unwrap();
        assert_eq!(d, Dihedral::yx());
        let d: Dihedral = parse_word("ȳ").unwrap();
        assert_eq!(d, Dihedral::new(-1, false));
        let d: Dihedral = parse_word("xyx").unwrap();
        assert_eq!(d, Dihedral::new(-1, false));
        let w: FreeProductWord = parse_word("a b a").unwrap();
        assert_eq!(w, fp(&[1, 2, 1]));
        let w: FreeProductWord = parse_word("1").unwrap();
        assert!(w.is_identity());
        assert!(parse_word::<Dihedral>("q").is_err());
        assert!(parse_word::<Dihedral>("").is_err());
    }
}
