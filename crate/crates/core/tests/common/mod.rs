#![allow(dead_code)]

use proptest::prelude::*;
use tccert::bar::BarChain;
use tccert::ring::RingElement;
use tccert::{Dihedral, FreeProductWord, Group, Pair};

pub const CASES: u32 = 1000;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() }
}

pub fn dihedral() -> impl Strategy<Value = Dihedral> {
    (-6i64..=6, any::<bool>()).prop_map(|(k, e)| Dihedral::new(k, e))
}

pub fn nontrivial_dihedral() -> impl Strategy<Value = Dihedral> {
    dihedral().prop_filter("nontrivial", |g| !g.is_identity())
}

/// Elements `y^k x^e` with `|k| <= 2`, for chains that must stay small.
pub fn small_dihedral() -> impl Strategy<Value = Dihedral> {
    (-2i64..=2, any::<bool>()).prop_map(|(k, e)| Dihedral::new(k, e)).prop_filter("nontrivial", |g| !g.is_identity())
}

pub fn word(rank: u8, max_len: usize) -> impl Strategy<Value = FreeProductWord> {
    prop::collection::vec(1..=rank, 0..=max_len).prop_map(|l| FreeProductWord::from_letters(l).unwrap())
}

pub fn dihedral_pair() -> impl Strategy<Value = Pair<Dihedral, Dihedral>> {
    (dihedral(), dihedral()).prop_map(|(a, b)| Pair::new(a, b))
}

pub fn small_pair() -> impl Strategy<Value = Pair<Dihedral, Dihedral>> {
    ((-2i64..=2, any::<bool>()), (-2i64..=2, any::<bool>()))
        .prop_map(|((k, e), (l, f))| Pair::new(Dihedral::new(k, e), Dihedral::new(l, f)))
        .prop_filter("nontrivial", |p| !p.is_identity())
}

pub fn chain<G: Group, S: Strategy<Value = G>>(element: S, degree: usize, max_terms: usize) -> impl Strategy<Value = BarChain<G>> {
    prop::collection::vec(prop::collection::vec(element, degree), 0..=max_terms)
        .prop_map(move |tuples| BarChain::from_tuples(degree, tuples).unwrap())
}

pub fn ring_element() -> impl Strategy<Value = RingElement<Dihedral>> {
    prop::collection::vec(dihedral(), 0..6).prop_map(|v| v.into_iter().collect())
}

pub fn ideal_ring_element() -> impl Strategy<Value = RingElement<Dihedral>> {
    ring_element().prop_map(|r| {
        if r.augmentation() {
            r.add(&RingElement::one())
        } else {
            r
        }
    })
}
