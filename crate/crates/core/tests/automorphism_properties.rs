mod common;

use common::{bpoly, word};
use derivkit::automorphism::ElementaryMap;
use derivkit::{rat, BPoly, Derivation, UPoly};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_words_cancel(w in word(3)) {
        prop_assert!(w.compose(&w.invert()).expand().is_identity());
        prop_assert!(w.invert().compose(&w).expand().is_identity());
    }

    #[test]
    fn jacobian_is_a_nonzero_constant(w in word(3)) {
        prop_assert!(w.expand().has_unit_jacobian());
    }

    #[test]
    fn action_is_a_ring_homomorphism(w in word(2), f in bpoly(2), g in bpoly(2)) {
        let rho = w.expand();
        prop_assert_eq!(rho.apply(&(&f * &g)), &rho.apply(&f) * &rho.apply(&g));
        prop_assert_eq!(rho.apply(&(&f + &g)), &rho.apply(&f) + &rho.apply(&g));
    }

    #[test]
    fn composition_acts_as_product(w1 in word(2), w2 in word(2), f in bpoly(2)) {
        // (ρ1 ρ2)(f) = ρ1(ρ2(f))
        let lhs = w1.compose(&w2).apply(&f);
        prop_assert_eq!(lhs.clone(), w1.apply(&w2.apply(&f)));
        prop_assert_eq!(lhs, w1.expand().compose(&w2.expand()).apply(&f));
    }

    #[test]
    fn conjugation_is_a_left_action(w1 in word(2), w2 in word(2), dx in bpoly(1), dy in bpoly(1)) {
        let d = Derivation::new(dx, dy);
        let lhs = w1.compose(&w2).conjugate(&d);
        prop_assert_eq!(lhs, w1.conjugate(&w2.conjugate(&d)));
    }

    #[test]
    fn commuting_means_fixed_by_conjugation(w in word(2), dx in bpoly(1), dy in bpoly(1)) {
        let d = Derivation::new(dx, dy);
        prop_assert_eq!(w.commutes(&d), w.conjugate(&d) == d);
    }

    #[test]
    fn translations_commute_with_partial_x(c in -5i64..=5, d in 1i64..=4) {
        let rho = derivkit::Automorphism::letter(
            ElementaryMap::shift_scale(rat(c), rat(d), rat(0)).unwrap(),
        );
        prop_assert!(rho.commutes(&Derivation::partial_x()));
        prop_assert!(rho.conjugate(&Derivation::partial_x()) == Derivation::partial_x());
    }
}

#[test]
fn conjugate_straightens_shamsuddin_field_with_zero_a() {
    let b = UPoly::from_ints(&[1, 0, 3]);
    let sigma =
        derivkit::Automorphism::letter(ElementaryMap::elem_y(b.antiderivative(), rat(1)).unwrap());
    let d = Derivation::new(BPoly::one(), BPoly::from_x(b));
    assert_eq!(sigma.conjugate(&d), Derivation::partial_x());
}
