mod common;

use adjcore::corpus::generic_element;
use adjcore::local::{
    colength_poly, multiplicity_parameter_pair, truncation_certificate, DEFAULT_TRUNCATION_CAP,
};
use adjcore::{integral_closure, mixed_e1, multiplicity, Error, LocalPolynomial, PolynomialIdeal};
use common::{complete, dense_rank, m_primary};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: u64 = DEFAULT_TRUNCATION_CAP;

fn monomials_below(d: u64) -> Vec<(u64, u64)> {
    (0..d).flat_map(|t| (0..=t).map(move |j| (t - j, j))).collect()
}

/// dim R/(J + m^d) by dense elimination over all multiples of the generators.
fn dense_colength(ideal: &PolynomialIdeal, d: u64) -> usize {
    let cols = monomials_below(d);
    let index = |e: (u64, u64)| cols.iter().position(|&c| c == e);
    let mut rows = Vec::new();
    for g in ideal.generators() {
        for (a, b) in &cols {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (e, c) in g.terms() {
                if let Some(k) = index((e.i + a, e.j + b)) {
                    row[k] += c;
                }
            }
            rows.push(row);
        }
    }
    cols.len() - dense_rank(rows)
}

fn generic_pair(i: &adjcore::MonomialIdeal, j: &adjcore::MonomialIdeal, seed: u64) -> (LocalPolynomial, LocalPolynomial) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (generic_element(i, &mut rng), generic_element(j, &mut rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomial_input_matches_the_staircase(i in m_primary(6)) {
        let gens = i.generators().iter().map(|&g| LocalPolynomial::monomial(g)).collect();
        let ideal = PolynomialIdeal::new(gens).unwrap();
        prop_assert_eq!(colength_poly(&ideal, CAP).unwrap(), i.colength().unwrap());
    }

    #[test]
    fn certificate_agrees_with_dense_elimination(i in complete(4), j in complete(4), seed in any::<u64>()) {
        let (a, b) = generic_pair(&i, &j, seed);
        let ideal = PolynomialIdeal::pair(&a, &b).unwrap();
        let cert = match truncation_certificate(&ideal, CAP) {
            Ok(cert) => cert,
            Err(Error::NotCertified { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let n = cert.degree();
        let colength = cert.colength();
        prop_assert_eq!(BigInt::from(dense_colength(&ideal, n)), colength.clone());
        prop_assert_eq!(BigInt::from(dense_colength(&ideal, n + 1)), colength.clone());
        if n > 0 {
            prop_assert!(BigInt::from(dense_colength(&ideal, n - 1)) < colength);
        }
    }

    #[test]
    fn generic_elements_realize_the_mixed_multiplicity(i in complete(4), j in complete(4), seed in any::<u64>()) {
        let (a, b) = generic_pair(&i, &j, seed);
        let e = multiplicity_parameter_pair(&a, &b, CAP).unwrap();
        // Any pair from I × J has e(a, b) ≥ e₁(I|J); generic pairs attain it.
        prop_assert!(e >= mixed_e1(&i, &j).unwrap());
        let (c, d) = generic_pair(&i, &i, seed);
        prop_assert!(multiplicity_parameter_pair(&c, &d, CAP).unwrap() >= multiplicity(&i).unwrap());
    }

    #[test]
    fn parameter_multiplicity_scales_with_powers(i in complete(3), j in complete(3), seed in any::<u64>(), r in 1u32..3, s in 1u32..3) {
        let (a, b) = generic_pair(&i, &j, seed);
        let e = multiplicity_parameter_pair(&a, &b, CAP).unwrap();
        let scaled = multiplicity_parameter_pair(&a.pow(r), &b.pow(s), CAP).unwrap();
        prop_assert_eq!(scaled, e * BigInt::from(r * s));
    }

    #[test]
    fn joint_reductions_contain_the_closed_product(i in complete(4), j in complete(4), seed in any::<u64>()) {
        let (a, b) = generic_pair(&i, &j, seed);
        let cert = truncation_certificate(&PolynomialIdeal::pair(&a, &b).unwrap(), CAP).unwrap();
        prop_assume!(cert.colength() == mixed_e1(&i, &j).unwrap());
        let closure = integral_closure(&i.product(&j)).unwrap();
        for &g in closure.generators() {
            prop_assert!(cert.contains(&LocalPolynomial::monomial(g)));
        }
    }
}
