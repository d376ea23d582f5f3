//! Monomial ideals of k[[x, y]] stored as staircases.
//!
//! A [`MonomialIdeal`] is the antichain of its minimal generators sorted by
//! strictly decreasing x-exponent (hence strictly increasing y-exponent).
//! That sorted antichain is the canonical form, so derived `PartialEq` is
//! ideal equality.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent pair of the monomial `x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponent {
    pub i: u64,
    pub j: u64,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { i: 0, j: 0 };

    pub const fn new(i: u64, j: u64) -> Self {
        Exponent { i, j }
    }

    pub fn degree(self) -> u64 {
        self.i + self.j
    }

    /// `self` divides `other`.
    pub fn divides(self, other: Exponent) -> bool {
        self.i <= other.i && self.j <= other.j
    }


    pub fn lcm(self, other: Exponent) -> Exponent {
        Exponent::new(self.i.max(other.i), self.j.max(other.j))
    }

    pub fn gcd(self, other: Exponent) -> Exponent {
        Exponent::new(self.i.min(other.i), self.j.min(other.j))
    }

    /// Quotient `self / other` in the monoid sense, clamped at zero.
    pub fn saturating_div(self, other: Exponent) -> Exponent {
        Exponent::new(self.i.saturating_sub(other.i), self.j.saturating_sub(other.j))
    }
}

/// Monomial product.
impl Mul for Exponent {
    type Output = Exponent;

    fn mul(self, other: Exponent) -> Exponent {
        Exponent::new(self.i + other.i, self.j + other.j)
    }
}

impl From<(u64, u64)> for Exponent {
    fn from((i, j): (u64, u64)) -> Self {
        Exponent::new(i, j)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u64) -> fmt::Result {
            match e {
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, 0) => var(f, 'x', i),
            (0, j) => var(f, 'y', j),
            (i, j) => {
                var(f, 'x', i)?;
                write!(f, "*")?;
                var(f, 'y', j)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary nonempty generating set.
    pub fn new<I, E>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Exponent>,
    {
        let raw: Vec<Exponent> = raw.into_iter().map(Into::into).collect();
        if raw.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        Ok(Self::minimalize_nonempty(raw))
    }

    /// Convenience constructor for literal pairs; panics on an empty slice.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        Self::new(pairs.iter().copied()).expect("nonempty generator list")
    }

    pub fn unit() -> Self {
        MonomialIdeal { generators: vec![Exponent::ONE] }
    }

    /// The maximal ideal m = (x, y).
    pub fn maximal() -> Self {
        m_power(1)
    }

    pub fn principal(e: Exponent) -> Self {
        MonomialIdeal { generators: vec![e] }
    }

    fn minimalize_nonempty(mut raw: Vec<Exponent>) -> Self {
        // Ascending i, then ascending j: a point survives iff its j beats
        // every j seen so far.
        raw.sort_unstable();
        let mut out: Vec<Exponent> = Vec::with_capacity(raw.len());
        for e in raw {
            match out.last() {
                Some(last) if last.j <= e.j => {}
                _ => out.push(e),
            }
        }
        out.reverse();
        MonomialIdeal { generators: out }
    }

    /// Minimal generators, sorted by strictly decreasing x-exponent.
    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn num_min_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn is_unit(&self) -> bool {
        self.generators[0] == Exponent::ONE
    }

    pub fn is_m_primary(&self) -> bool {
        self.generators[0].j == 0 && self.generators[self.generators.len() - 1].i == 0
    }

    /// `x^p`, the pure x-power generator, when present.
    pub fn pure_x_power(&self) -> Option<u64> {
        let first = self.generators[0];
        (first.j == 0).then_some(first.i)
    }

    pub fn pure_y_power(&self) -> Option<u64> {
        let last = self.generators[self.generators.len() - 1];
        (last.i == 0).then_some(last.j)
    }

    pub fn contains_monomial(&self, e: Exponent) -> bool {
        // Generators with g.i <= e.i form a suffix; its first element has
        // the smallest j among them.
        let start = self.generators.partition_point(|g| g.i > e.i);
        self.generators.get(start).is_some_and(|g| g.j <= e.j)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|&g| other.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let raw = self.generators.iter().chain(other.generators.iter()).copied().collect();
        Self::minimalize_nonempty(raw)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for &a in &self.generators {
            for &b in &other.generators {
                raw.push(a * b);
            }
        }
        Self::minimalize_nonempty(raw)
    }

    /// `self^n`; `n = 0` gives the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for &a in &self.generators {
            for &b in &other.generators {
                raw.push(a.lcm(b));
            }
        }
        Self::minimalize_nonempty(raw)
    }

    /// `self : g` for a single monomial `g`.
    pub fn quotient_by_monomial(&self, g: Exponent) -> MonomialIdeal {
        Self::minimalize_nonempty(self.generators.iter().map(|a| a.saturating_div(g)).collect())
    }

    /// `self : other`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        other
            .generators
            .iter()
            .map(|&g| self.quotient_by_monomial(g))
            .reduce(|acc, q| acc.intersect(&q))
            .expect("ideals are nonempty")
    }

    /// Multiplies by the monomial `e`.
    pub fn shift(&self, e: Exponent) -> MonomialIdeal {
        MonomialIdeal { generators: self.generators.iter().map(|g| *g * e).collect() }
    }

    /// Greatest common divisor of the generators.
    pub fn monomial_gcd(&self) -> Exponent {
        self.generators.iter().copied().reduce(Exponent::gcd).expect("nonempty")
    }

    /// The m-adic order: minimal total degree of a generator.
    pub fn order(&self) -> u64 {
        self.generators.iter().map(|g| g.degree()).min().expect("nonempty")
    }

    /// λ(R/I): the number of monomials outside the staircase.
    pub fn colength(&self) -> Result<BigInt> {
        if !self.is_m_primary() {
            return Err(Error::InfiniteColength(self.to_string()));
        }
        // Columns i_{k+1} <= i < i_k have staircase height j_{k+1}.
        let total = self
            .generators
            .windows(2)
            .map(|w| BigInt::from(w[0].i - w[1].i) * BigInt::from(w[1].j))
            .fold(BigInt::zero(), |acc, v| acc + v);
        Ok(total)
    }

    /// Swaps the roles of x and y.
    pub fn swap_variables(&self) -> MonomialIdeal {
        let mut gens: Vec<Exponent> = self.generators.iter().map(|e| Exponent::new(e.j, e.i)).collect();
        gens.reverse();
        MonomialIdeal { generators: gens }
    }
}

/// `m^n`; `m_power(0)` is the unit ideal.
pub fn m_power(n: u64) -> MonomialIdeal {
    MonomialIdeal { generators: (0..=n).map(|k| Exponent::new(n - k, k)).collect() }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(p: &[(u64, u64)]) -> MonomialIdeal {
        MonomialIdeal::from_pairs(p)
    }

    fn gens(i: &MonomialIdeal) -> Vec<(u64, u64)> {
        i.generators().iter().map(|e| (e.i, e.j)).collect()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(gens(&ideal(&[(2, 0), (1, 1), (2, 2), (0, 3)])), vec![(2, 0), (1, 1), (0, 3)]);
        assert_eq!(gens(&ideal(&[(0, 0), (5, 7)])), vec![(0, 0)]);
        assert_eq!(gens(&ideal(&[(3, 0), (1, 1), (0, 2)])), vec![(3, 0), (1, 1), (0, 2)]);
        assert_eq!(MonomialIdeal::new(Vec::<Exponent>::new()), Err(Error::EmptyGeneratingSet));
    }

    #[test]
    fn minimalize_drops_duplicates() {
        assert_eq!(gens(&ideal(&[(1, 1), (1, 1), (1, 2)])), vec![(1, 1)]);
    }

    #[test]
    fn membership() {
        let i = ideal(&[(2, 0), (1, 1), (0, 3)]);
        assert!(i.contains_monomial(Exponent::new(1, 1)));
        assert!(!i.contains_monomial(Exponent::new(0, 2)));
        assert!(i.contains_monomial(Exponent::new(4, 0)));
        assert!(!i.contains_monomial(Exponent::new(1, 0)));
        assert!(MonomialIdeal::unit().contains_monomial(Exponent::ONE));
    }

    #[test]
    fn products_and_intersections() {
        let m = MonomialIdeal::maximal();
        assert_eq!(m.product(&m), m_power(2));
        // Family pair at u = 3.
        let i = ideal(&[(3, 0), (1, 1), (0, 4)]);
        let k = ideal(&[(4, 0), (1, 1), (0, 3)]);
        assert_eq!(gens(&i.product(&k)), vec![(7, 0), (4, 1), (2, 2), (1, 4), (0, 7)]);
        let a = ideal(&[(1, 0), (0, 3)]);
        let b = ideal(&[(0, 1), (2, 0)]);
        assert_eq!(gens(&a.intersect(&b)), vec![(2, 0), (1, 1), (0, 3)]);
    }

    #[test]
    fn colon_by_monomial_ideal() {
        let i = ideal(&[(2, 0), (1, 1), (0, 3)]);
        let m = MonomialIdeal::maximal();
        // I : m = (x, y^2).
        assert_eq!(gens(&i.colon(&m)), vec![(1, 0), (0, 2)]);
        assert!(i.colon(&i).is_unit());
    }

    #[test]
    fn colengths() {
        assert_eq!(MonomialIdeal::maximal().colength().unwrap(), BigInt::from(1));
        assert_eq!(ideal(&[(2, 0), (1, 1), (0, 3)]).colength().unwrap(), BigInt::from(4));
        assert_eq!(ideal(&[(3, 0), (1, 1), (0, 4)]).colength().unwrap(), BigInt::from(6));
        assert_eq!(MonomialIdeal::unit().colength().unwrap(), BigInt::from(0));
        assert!(matches!(ideal(&[(1, 0)]).colength(), Err(Error::InfiniteColength(_))));
        assert!(matches!(ideal(&[(1, 1)]).colength(), Err(Error::InfiniteColength(_))));
    }

    #[test]
    fn colength_of_m_powers() {
        for n in 0..=50u64 {
            assert_eq!(m_power(n).colength().unwrap(), BigInt::from(n * (n + 1) / 2));
        }
    }

    #[test]
    fn orders_and_generator_counts() {
        let i = ideal(&[(2, 0), (1, 1), (0, 3)]);
        assert_eq!(MonomialIdeal::maximal().order(), 1);
        assert_eq!(i.order(), 2);
        assert_eq!(m_power(7).order(), 7);
        assert_eq!(i.num_min_gens(), 3);
        assert_eq!(i.power(2).num_min_gens(), 5);
        assert_eq!(gens(&m_power(3)), vec![(3, 0), (2, 1), (1, 2), (0, 3)]);
        assert!(m_power(0).is_unit());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ideal(&[(0, 3), (1, 1), (2, 0)]).to_string(), "x^2,x*y,y^3");
        assert_eq!(MonomialIdeal::unit().to_string(), "1");
        assert_eq!(ideal(&[(1, 0), (0, 1)]).to_string(), "x,y");
    }

    #[test]
    fn power_matches_iterated_product() {
        let i = ideal(&[(3, 0), (1, 1), (0, 4)]);
        let mut acc = MonomialIdeal::unit();
        for n in 0..6 {
            assert_eq!(i.power(n), acc);
            acc = acc.product(&i);
        }
    }
}
