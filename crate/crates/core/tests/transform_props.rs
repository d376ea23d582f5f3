mod common;

use adjcore::{
    hd_colength, hd_e1, hd_multiplicity, hilbert_coefficients, integral_closure, is_complete, m_power,
    mixed_e1, multiplicity, point_basis, transform, ChartDirection, MonomialIdeal,
};
use common::{complete, m_primary};
use num_bigint::BigInt;
use proptest::prelude::*;

fn choose2(n: i64) -> BigInt {
    BigInt::from(n * (n - 1) / 2)
}

#[test]
fn maximal_powers_have_a_single_point() {
    for n in 1..=6 {
        let tree = point_basis(&m_power(n)).unwrap();
        assert_eq!(tree.orders(), vec![(n, 1)]);
    }
}

#[test]
fn incomplete_input_is_rejected() {
    let i = MonomialIdeal::from_pairs(&[(2, 0), (0, 2)]);
    assert!(hd_colength(&i).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn point_basis_sums_match_direct_values(i in complete(7)) {
        let e = multiplicity(&i).unwrap();
        let lambda = i.colength().unwrap();
        prop_assert_eq!(hd_colength(&i).unwrap(), lambda.clone());
        prop_assert_eq!(hd_multiplicity(&i).unwrap(), e.clone());
        // λ(R/I) = e − e₁ for complete I.
        prop_assert_eq!(hd_e1(&i).unwrap(), &e - &lambda);
        prop_assert_eq!(hilbert_coefficients(&i).unwrap(), (e.clone(), e - lambda));
    }

    #[test]
    fn transforms_lower_the_order_and_stay_complete(i in complete(7)) {
        for dir in ChartDirection::BOTH {
            let t = transform(&i, dir).unwrap();
            prop_assert!(t.order() <= i.order());
            if !t.is_unit() {
                prop_assert!(is_complete(&t).unwrap());
            }
        }
    }

    #[test]
    fn root_of_the_point_basis_has_the_order(i in m_primary(7)) {
        let tree = point_basis(&i).unwrap();
        prop_assert_eq!(tree.root.order_rt, i.order());
        prop_assert!(tree.nodes().iter().all(|n| n.order_rt >= 1));
    }

    #[test]
    fn product_colengths_follow_the_bilinear_formula(
        i in complete(4), j in complete(4), r in 1i64..4, s in 1i64..4
    ) {
        let ij = i.power(r as u32).product(&j.power(s as u32));
        let expected = choose2(r) * multiplicity(&i).unwrap()
            + i.colength().unwrap() * r
            + mixed_e1(&i, &j).unwrap() * (r * s)
            + choose2(s) * multiplicity(&j).unwrap()
            + j.colength().unwrap() * s;
        prop_assert_eq!(ij.colength().unwrap(), expected);
    }

    #[test]
    fn closure_commutes_with_the_point_basis(i in m_primary(6)) {
        let c = integral_closure(&i).unwrap();
        prop_assert_eq!(point_basis(&i).unwrap().orders(), point_basis(&c).unwrap().orders());
    }
}
