mod common;

use adjcore::{covolume, howald_adjoint, integral_closure, is_complete, mixed_e1, multiplicity, MonomialIdeal};
use common::{brute_adjoint, brute_closure, complete, m_primary};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// e(I) from the colengths of I, I² and I³ when they follow the Hilbert polynomial.
fn hilbert_multiplicity(i: &MonomialIdeal, n: u32) -> BigInt {
    let l = |k: u32| i.power(k).colength().unwrap();
    // Second difference of λ(R/I^k) eventually equals e.
    l(n + 2) - l(n + 1) * 2 + l(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_matches_lattice_points_of_the_region(i in m_primary(7)) {
        prop_assert_eq!(integral_closure(&i).unwrap(), brute_closure(&i));
    }

    #[test]
    fn closure_is_extensive_and_idempotent(i in m_primary(7)) {
        let c = integral_closure(&i).unwrap();
        prop_assert!(i.is_subset_of(&c));
        prop_assert_eq!(integral_closure(&c).unwrap(), c.clone());
        prop_assert!(is_complete(&c).unwrap());
    }

    #[test]
    fn multiplicity_is_twice_the_covolume(i in m_primary(7)) {
        let e = multiplicity(&i).unwrap();
        prop_assert_eq!(BigRational::from_integer(e.clone()), covolume(&i).unwrap() * BigRational::from_integer(2.into()));
        prop_assert_eq!(multiplicity(&integral_closure(&i).unwrap()).unwrap(), e);
    }

    #[test]
    fn multiplicity_matches_hilbert_growth(i in complete(5)) {
        // Complete ideals in two variables are normal, so the Hilbert
        // polynomial holds from n = 1.
        prop_assert_eq!(hilbert_multiplicity(&i, 1), multiplicity(&i).unwrap());
    }

    #[test]
    fn multiplicity_scales_quadratically(i in m_primary(6), n in 1u32..4) {
        let n2 = BigInt::from(n * n);
        prop_assert_eq!(multiplicity(&i.power(n)).unwrap(), n2 * multiplicity(&i).unwrap());
    }

    #[test]
    fn mixed_multiplicity_is_bilinear_and_closure_invariant(
        i in m_primary(5), j in m_primary(5), r in 1u32..3, s in 1u32..3
    ) {
        let e1 = mixed_e1(&i, &j).unwrap();
        prop_assert_eq!(mixed_e1(&j, &i).unwrap(), e1.clone());
        prop_assert_eq!(mixed_e1(&i.power(r), &j.power(s)).unwrap(), BigInt::from(r * s) * &e1);
        let (ci, cj) = (integral_closure(&i).unwrap(), integral_closure(&j).unwrap());
        prop_assert_eq!(mixed_e1(&ci, &cj).unwrap(), e1);
        prop_assert_eq!(mixed_e1(&i, &i).unwrap(), multiplicity(&i).unwrap());
    }

    #[test]
    fn products_of_complete_ideals_are_complete(i in complete(5), j in complete(5)) {
        prop_assert!(is_complete(&i.product(&j)).unwrap());
    }

    #[test]
    fn howald_adjoint_matches_interior_points(i in m_primary(7)) {
        prop_assert_eq!(howald_adjoint(&i).unwrap(), brute_adjoint(&i));
    }

    #[test]
    fn adjoint_sits_above_the_closure(i in m_primary(7)) {
        let c = integral_closure(&i).unwrap();
        let adj = howald_adjoint(&i).unwrap();
        prop_assert!(c.is_subset_of(&adj));
        prop_assert_eq!(howald_adjoint(&c).unwrap(), adj);
    }
}
