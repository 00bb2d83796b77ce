mod common;

use proptest::prelude::*;
use sd_core::catalog::Catalog;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        ring_axioms(&p, &q, &r)?;
    }

    #[test]
    fn substitution_is_a_ring_map(s in substitution(), p in small_poly(), q in small_poly()) {
        substitution_homomorphism(&s, &p, &q)?;
    }
}

proptest! {
    #[test]
    fn bh_transpose_is_an_involution(e in exponent_matrix()) {
        transpose_involution(&e)?;
    }

    #[test]
    fn saito_dual_is_an_involution((d, f) in divisor_frame()) {
        saito_involution(d, &f)?;
    }

    #[test]
    fn polynomial_text_round_trips(p in polynomial(6, 5)) {
        poly_round_trip(&p)?;
    }

    #[test]
    fn frame_text_round_trips(f in frame()) {
        frame_round_trip(&f)?;
    }

    #[test]
    fn derivative_obeys_leibniz(p in small_poly(), q in small_poly()) {
        for v in sd_core::poly::Var::ALL {
            let lhs = (&p * &q).derivative(v);
            let rhs = &(&p.derivative(v) * &q) + &(&p * &q.derivative(v));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn poincare_series_are_nonnegative() {
    let cat = Catalog::shipped();
    let systems = catalog_weight_systems(&cat);
    assert!(systems.len() >= 8);
    for ws in systems {
        assert_eq!(first_negative(&ws, 60), None, "{ws}");
    }
}
