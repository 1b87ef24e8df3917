mod common;

use common::*;
use proptest::prelude::*;
use tccert::group::{iso_to_dihedral, project_d_to_y, project_d_to_z};
use tccert::{Dihedral, DihedralQuotient, FreeProductWord, Group};

proptest! {
    #![proptest_config(config())]

    #[test]
    fn dihedral_group_laws(a in dihedral(), b in dihedral(), c in dihedral()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Dihedral::identity()), a);
        prop_assert_eq!(Dihedral::identity().mul(&a), a);
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
    }

    #[test]
    fn dihedral_relations(k in -20i64..=20) {
        let x = Dihedral::x();
        let y = Dihedral::y();
        prop_assert!(x.mul(&x).is_identity());
        prop_assert_eq!(y.mul(&x).mul(&y), x);
        prop_assert_eq!(y.pow(k).mul(&x), Dihedral::new(k, true));
        prop_assert_eq!(Dihedral::new(k, true).mul(&Dihedral::new(k, true)), Dihedral::identity());
    }

    #[test]
    fn word_group_laws(a in word(4, 8), b in word(4, 8), c in word(4, 8)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&FreeProductWord::identity()), a.clone());
        for w in a.letters().windows(2) {
            prop_assert_ne!(w[0], w[1]);
        }
    }

    #[test]
    fn pair_group_laws(a in dihedral_pair(), b in dihedral_pair(), c in dihedral_pair()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn iso_is_a_homomorphism(u in word(2, 12), v in word(2, 12)) {
        let lhs = iso_to_dihedral(&u.mul(&v)).unwrap();
        let rhs = iso_to_dihedral(&u).unwrap().mul(&iso_to_dihedral(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn iso_has_trivial_kernel(u in word(2, 12)) {
        prop_assert_eq!(iso_to_dihedral(&u).unwrap().is_identity(), u.is_empty());
    }

    #[test]
    fn iso_rejects_extra_letters(u in word(3, 12)) {
        prop_assert_eq!(iso_to_dihedral(&u).is_ok(), u.max_letter() <= 2);
    }

    #[test]
    fn projections_are_homomorphisms(a in dihedral(), b in dihedral()) {
        prop_assert_eq!(project_d_to_y(&a.mul(&b)), project_d_to_y(&a).mul(&project_d_to_y(&b)));
        prop_assert_eq!(project_d_to_z(&a.mul(&b)), project_d_to_z(&a).mul(&project_d_to_z(&b)));
        prop_assert!(project_d_to_y(&Dihedral::x()).is_identity());
        prop_assert!(!project_d_to_z(&Dihedral::x()).is_identity());
    }

    #[test]
    fn killing_a_generator_is_a_homomorphism(g in 2u8..=5, u in word(5, 10), v in word(5, 10)) {
        let kill = |w: &FreeProductWord| w.project_last_generator(g);
        prop_assert_eq!(kill(&u.mul(&v)), kill(&u).mul(&kill(&v)));
        prop_assert!(kill(&FreeProductWord::generator(g)).is_identity());
    }

    #[test]
    fn quotient_reduction_is_a_homomorphism(m in 1u32..=7, a in dihedral(), b in dihedral()) {
        let q = DihedralQuotient::new(m);
        prop_assert_eq!(q.reduce(&a.mul(&b)), q.mul(&q.reduce(&a), &q.reduce(&b)));
        prop_assert!(q.reduce(&Dihedral::y().pow(m as i64)).is_identity());
    }

    #[test]
    fn parse_display_round_trip(a in dihedral()) {
        let back: Dihedral = tccert::group::parse_word(&a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn quotient_has_order_2m() {
    for m in 1..=6u32 {
        let q = DihedralQuotient::new(m);
        assert_eq!(q.elements().len(), 2 * m as usize);
        assert_eq!(q.nontrivial_elements().len(), 2 * m as usize - 1);
    }
}
