//! Seeded random complete m-primary monomial ideals.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::local::LocalPolynomial;
use crate::newton::{integral_closure, newton_diagram};
use crate::staircase::{Exponent, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_order: u64,
    pub max_exponent: u64,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        CorpusSpec { seed, count, max_order: 5, max_exponent: 12 }
    }
}

fn random_staircase(rng: &mut ChaCha8Rng, max_order: u64, max_exponent: u64) -> MonomialIdeal {
    let order = rng.gen_range(1..=max_order.min(max_exponent).max(1));
    let p = rng.gen_range(order..=max_exponent.max(order));
    let q = rng.gen_range(order..=max_exponent.max(order));
    let k = rng.gen_range(0..=order);
    let mut gens = vec![Exponent::new(p, 0), Exponent::new(0, q), Exponent::new(k, order - k)];
    for _ in 0..rng.gen_range(0..=3) {
        let a = rng.gen_range(0..=p);
        let b = rng.gen_range(0..=q);
        if a + b >= order {
            gens.push(Exponent::new(a, b));
        }
    }
    MonomialIdeal::new(gens).expect("nonempty")
}

/// `spec.count` complete m-primary monomial ideals, deterministic in the seed.
pub fn random_complete_ideal(spec: &CorpusSpec) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let raw = random_staircase(&mut rng, spec.max_order.max(1), spec.max_exponent.max(1));
            integral_closure(&raw).expect("random staircases are m-primary")
        })
        .collect()
}

/// A random combination of the Newton-diagram vertices of `ideal` with
/// coefficients in `1..=97`; generic enough to serve as a (joint)
/// reduction element with high probability.
pub fn generic_element(ideal: &MonomialIdeal, rng: &mut impl Rng) -> LocalPolynomial {
    let diagram = newton_diagram(ideal).expect("m-primary ideal");
    LocalPolynomial::from_terms(
        diagram
            .vertices()
            .iter()
            .map(|&v| (v, BigRational::from_integer(rng.gen_range(1i64..=97).into()))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::is_complete;

    #[test]
    fn corpus_is_complete_and_deterministic() {
        let spec = CorpusSpec::new(7, 3);
        let a = random_complete_ideal(&spec);
        assert_eq!(a.len(), 3);
        for i in &a {
            assert!(is_complete(i).unwrap());
            assert!(i.pure_x_power().is_some() && i.pure_y_power().is_some());
        }
        assert_eq!(a, random_complete_ideal(&spec));
        assert_ne!(a, random_complete_ideal(&CorpusSpec::new(8, 3)));
    }

    #[test]
    fn respects_bounds() {
        let spec = CorpusSpec { seed: 1, count: 50, max_order: 3, max_exponent: 6 };
        for i in random_complete_ideal(&spec) {
            assert!(i.order() <= 3);
            assert!(i.pure_x_power().unwrap() <= 6 && i.pure_y_power().unwrap() <= 6);
        }
    }
}
