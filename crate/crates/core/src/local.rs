//! Polynomial ideals of the local ring k[[x, y]] over ℚ, handled through
//! exact linear algebra in the truncations k[x, y]/m^N.
//!
//! An ideal `J` is certified m-primary once every monomial of some degree `N`
//! lies in `J + m^{N+1}`; Nakayama then gives `m^N ⊆ J`, and colength and
//! membership reduce to rank computations on the span of the truncated
//! monomial multiples of the generators.
//!
//! Matrix columns are monomials in graded order (total degree, then
//! decreasing x-exponent). With that order the row echelon form of one
//! truncation at degree `H` answers every question at degrees `N < H`: the
//! image of `J` in `R/m^N` has dimension equal to the number of pivots of
//! degree below `N`.
//!
//! Two-generated m-primary ideals of the regular ring are parameter ideals,
//! so for them the colength equals the multiplicity, `λ = e`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::newton::{mixed_e1, multiplicity};
use crate::staircase::{Exponent, MonomialIdeal};

pub const DEFAULT_TRUNCATION_CAP: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LocalPolynomial {
    terms: BTreeMap<Exponent, BigRational>,
}

impl LocalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Exponent::ONE)
    }

    pub fn monomial(e: Exponent) -> Self {
        Self::term(e, BigRational::one())
    }

    pub fn term(e: Exponent, coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `x^i y^j` with integer coefficients, e.g. `&[(1, (1, 1)), (1, (3, 0))]`
    /// for `xy + x^3`.
    pub fn from_int_terms(terms: &[(i64, (u64, u64))]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, e)| (e.into(), BigRational::from_integer(c.into()))))
    }

    fn add_term(&mut self, e: Exponent, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Minimal total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// The single term's exponent when the polynomial is a nonzero scalar
    /// multiple of a monomial.
    pub fn as_monomial(&self) -> Option<Exponent> {
        match self.terms.len() {
            1 => self.terms.keys().next().copied(),
            _ => None,
        }
    }

    pub fn shift(&self, e: Exponent) -> Self {
        LocalPolynomial { terms: self.terms.iter().map(|(k, c)| (*k * e, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Terms of degree at most `max_degree`.
    pub fn truncate(&self, max_degree: u64) -> Self {
        LocalPolynomial {
            terms: self.terms.iter().filter(|(e, _)| e.degree() <= max_degree).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }
}

impl From<Exponent> for LocalPolynomial {
    fn from(e: Exponent) -> Self {
        Self::monomial(e)
    }
}

impl Add for &LocalPolynomial {
    type Output = LocalPolynomial;
    fn add(self, rhs: &LocalPolynomial) -> LocalPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LocalPolynomial {
    type Output = LocalPolynomial;
    fn sub(self, rhs: &LocalPolynomial) -> LocalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LocalPolynomial {
    type Output = LocalPolynomial;
    fn neg(self) -> LocalPolynomial {
        LocalPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LocalPolynomial {
    type Output = LocalPolynomial;
    fn mul(self, rhs: &LocalPolynomial) -> LocalPolynomial {
        let mut out = LocalPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(*a * *b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LocalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| column_key(**e));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == Exponent::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{magnitude}*{e}")?;
            }
        }
        Ok(())
    }
}

/// Finitely generated ideal of k[[x, y]] with nonzero polynomial generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialIdeal {
    generators: Vec<LocalPolynomial>,
}

impl PolynomialIdeal {
    pub fn new(generators: Vec<LocalPolynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        if generators.iter().any(LocalPolynomial::is_zero) {
            return Err(Error::ZeroGenerator);
        }
        Ok(PolynomialIdeal { generators })
    }

    pub fn pair(a: &LocalPolynomial, b: &LocalPolynomial) -> Result<Self> {
        Self::new(vec![a.clone(), b.clone()])
    }

    pub fn generators(&self) -> &[LocalPolynomial] {
        &self.generators
    }

    /// `f · M` for a monomial ideal `M`.
    pub fn scaled_monomial_ideal(f: &LocalPolynomial, m: &MonomialIdeal) -> Result<Self> {
        Self::new(m.generators().iter().map(|&g| f.shift(g)).collect())
    }

    pub fn sum(&self, other: &PolynomialIdeal) -> PolynomialIdeal {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        PolynomialIdeal { generators }
    }
}

impl From<&MonomialIdeal> for PolynomialIdeal {
    fn from(m: &MonomialIdeal) -> Self {
        PolynomialIdeal { generators: m.generators().iter().map(|&e| LocalPolynomial::monomial(e)).collect() }
    }
}

impl fmt::Display for PolynomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Graded column order: degree first, then decreasing x-exponent.
fn column_key(e: Exponent) -> (u64, u64) {
    (e.degree(), e.j)
}

fn column_index(e: Exponent) -> usize {
    let d = e.degree() as usize;
    d * (d + 1) / 2 + e.j as usize
}

/// Number of monomials of degree below `n`.
fn monomials_below(n: u64) -> usize {
    let n = n as usize;
    n * (n + 1) / 2
}

type SparseRow = Vec<(usize, BigInt)>;

/// Primitive integer row with positive leading coefficient.
fn normalize(mut row: SparseRow) -> SparseRow {
    let content = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    let negative = row.first().is_some_and(|(_, v)| v.is_negative());
    if !content.is_one() && !content.is_zero() {
        for (_, v) in &mut row {
            *v /= &content;
        }
    }
    if negative {
        for (_, v) in &mut row {
            *v = -std::mem::take(v);
        }
    }
    row
}

/// Row of a polynomial, cleared of denominators.
fn row_of(p: &LocalPolynomial) -> SparseRow {
    let denom = p.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut row: SparseRow =
        p.terms.iter().map(|(e, c)| (column_index(*e), c.numer() * (&denom / c.denom()))).collect();
    row.sort_unstable_by_key(|(col, _)| *col);
    normalize(row)
}

/// `p·row − q·pivot` for sorted sparse rows.
fn combine(p: &BigInt, row: &[(usize, BigInt)], q: &BigInt, pivot: &[(usize, BigInt)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (row.iter().peekable(), pivot.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, p * va));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -(q * vb)));
                    b.next();
                } else {
                    let v = p * va - q * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, p * va));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(q * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Fraction-free row echelon form keyed by pivot column.
#[derive(Debug, Clone, Default)]
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Eliminates the leading entry of `row` until it is not a pivot column
    /// or reaches `limit`. The result is a nonzero multiple of the residue.
    fn reduce(&self, mut row: SparseRow, limit: usize) -> SparseRow {
        while let Some((col, lead)) = row.first() {
            if *col >= limit {
                break;
            }
            match self.pivots.get(col) {
                Some(pivot) => {
                    let g = lead.gcd(&pivot[0].1);
                    let (p, q) = (&pivot[0].1 / &g, lead / &g);
                    row = normalize(combine(&p, &row[1..], &q, &pivot[1..]));
                }
                None => break,
            }
        }
        row
    }

    fn insert(&mut self, row: SparseRow) {
        let row = self.reduce(row, usize::MAX);
        if let Some((col, _)) = row.first() {
            self.pivots.insert(*col, row);
        }
    }

    fn pivots_below(&self, limit: usize) -> usize {
        self.pivots.range(..limit).count()
    }
}

/// Proof that `m^N` lies in an ideal, with the echelon data of its image in
/// `k[x, y]/m^H` for some `H > N`.
#[derive(Debug, Clone)]
pub struct TruncationCertificate {
    degree: u64,
    horizon: u64,
    basis: Echelon,
}

impl TruncationCertificate {
    /// The smallest `N` with `m^N ⊆ J`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.basis.pivots_below(monomials_below(self.degree))
    }

    /// λ(R/J) = dim R/m^N − dim J/m^N.
    pub fn colength(&self) -> BigInt {
        BigInt::from(monomials_below(self.degree) - self.rank())
    }

    /// `f ∈ J` iff `f ≡ 0` modulo the image of `J` in `R/m^N`.
    pub fn contains(&self, f: &LocalPolynomial) -> bool {
        let limit = monomials_below(self.degree);
        let row = self.basis.reduce(row_of(&f.truncate(self.degree.saturating_sub(1))), limit);
        row.first().is_none_or(|(col, _)| *col >= limit)
    }
}

fn monomials_up_to(degree: u64) -> impl Iterator<Item = Exponent> {
    (0..=degree).flat_map(|d| (0..=d).map(move |j| Exponent::new(d - j, j)))
}

fn build_echelon(ideal: &PolynomialIdeal, horizon: u64) -> (Echelon, Vec<SparseRow>) {
    let mut rows = Vec::new();
    for g in &ideal.generators {
        let order = g.order().expect("generators are nonzero");
        if order > horizon {
            continue;
        }
        let g = g.truncate(horizon);
        for u in monomials_up_to(horizon - order) {
            rows.push(row_of(&g.shift(u).truncate(horizon)));
        }
    }
    rows.sort_by_key(|r| r.first().map(|(c, _)| *c));
    let mut echelon = Echelon::default();
    for row in &rows {
        echelon.insert(row.clone());
    }
    (echelon, rows)
}

/// Finds the smallest `N <= cap` with `m^N ⊆ J`.
pub fn truncation_certificate(ideal: &PolynomialIdeal, cap: u64) -> Result<TruncationCertificate> {
    let max_deg = ideal.generators.iter().filter_map(LocalPolynomial::max_degree).max().unwrap_or(0);
    let mut horizon = (2 * max_deg + 2).clamp(4, cap + 1);
    loop {
        let (echelon, rows) = build_echelon(ideal, horizon);
        // m^N ⊆ J + m^{N+1} iff all N + 1 columns of degree N are pivots.
        let found = (0..horizon).find(|&n| {
            let lo = monomials_below(n);
            (lo..monomials_below(n + 1)).all(|c| echelon.pivots.contains_key(&c))
        });
        if let Some(degree) = found.filter(|&n| n <= cap) {
            let cert = TruncationCertificate { degree, horizon, basis: echelon };
            cert.self_check(&rows)?;
            return Ok(cert);
        }
        if horizon > cap {
            return Err(Error::NotCertified { cap });
        }
        horizon = (horizon * 2).min(cap + 1);
    }
}

impl TruncationCertificate {
    fn self_check(&self, rows: &[SparseRow]) -> Result<()> {
        // Colength at N + 1 must agree with N.
        let next = monomials_below(self.degree + 1) - self.basis.pivots_below(monomials_below(self.degree + 1));
        if BigInt::from(next) != self.colength() || self.degree >= self.horizon {
            return Err(Error::Invariant("truncation certificate unstable at N + 1".into()));
        }
        // Spot-check that reduction really annihilates original rows.
        for k in [0, rows.len() / 2, rows.len().saturating_sub(1)] {
            if let Some(row) = rows.get(k) {
                if !self.basis.reduce(row.clone(), usize::MAX).is_empty() {
                    return Err(Error::Invariant(format!("row {k} does not reduce to zero")));
                }
            }
        }
        Ok(())
    }
}

/// λ(R/J) for a polynomial ideal.
pub fn colength_poly(ideal: &PolynomialIdeal, cap: u64) -> Result<BigInt> {
    Ok(truncation_certificate(ideal, cap)?.colength())
}

/// e(a, b) = λ(R/(a, b)).
pub fn multiplicity_parameter_pair(a: &LocalPolynomial, b: &LocalPolynomial, cap: u64) -> Result<BigInt> {
    colength_poly(&PolynomialIdeal::pair(a, b)?, cap)
}

pub fn contains(ideal: &PolynomialIdeal, f: &LocalPolynomial, cap: u64) -> Result<bool> {
    Ok(truncation_certificate(ideal, cap)?.contains(f))
}

pub fn ideals_equal(a: &PolynomialIdeal, b: &PolynomialIdeal, cap: u64) -> Result<bool> {
    let ca = truncation_certificate(a, cap)?;
    let cb = truncation_certificate(b, cap)?;
    Ok(b.generators.iter().all(|g| ca.contains(g)) && a.generators.iter().all(|g| cb.contains(g)))
}

/// Equality of a polynomial ideal with a monomial ideal.
pub fn ideals_equal_monomial(a: &PolynomialIdeal, m: &MonomialIdeal, cap: u64) -> Result<bool> {
    let ca = truncation_certificate(a, cap)?;
    let m_in_a = m.generators().iter().all(|&g| ca.contains(&LocalPolynomial::monomial(g)));
    Ok(m_in_a && a.generators.iter().all(|g| monomial_ideal_contains(m, g)))
}

/// Term-by-term membership of a polynomial in a monomial ideal.
pub fn monomial_ideal_contains(m: &MonomialIdeal, f: &LocalPolynomial) -> bool {
    f.terms().all(|(e, _)| m.contains_monomial(*e))
}

fn require_member(m: &MonomialIdeal, f: &LocalPolynomial) -> Result<()> {
    if monomial_ideal_contains(m, f) {
        Ok(())
    } else {
        Err(Error::NotContained { element: f.to_string(), ideal: m.to_string() })
    }
}

/// Outcome of a (joint) reduction test by the multiplicity criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    /// e(a, b); `None` when `(a, b)` could not be certified m-primary.
    pub pair_multiplicity: Option<BigInt>,
    /// e(I) for a reduction, e₁(I|J) for a joint reduction.
    pub target: BigInt,
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.pair_multiplicity.as_ref() == Some(&self.target)
    }
}

fn pair_multiplicity_or_none(a: &LocalPolynomial, b: &LocalPolynomial, cap: u64) -> Result<Option<BigInt>> {
    match multiplicity_parameter_pair(a, b, cap) {
        Ok(e) => Ok(Some(e)),
        Err(Error::NotCertified { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `(a, b)` is a reduction of `I` iff e(a, b) = e(I).
pub fn reduction_check(a: &LocalPolynomial, b: &LocalPolynomial, ideal: &MonomialIdeal, cap: u64) -> Result<ReductionCheck> {
    require_member(ideal, a)?;
    require_member(ideal, b)?;
    Ok(ReductionCheck { pair_multiplicity: pair_multiplicity_or_none(a, b, cap)?, target: multiplicity(ideal)? })
}

pub fn is_reduction(a: &LocalPolynomial, b: &LocalPolynomial, ideal: &MonomialIdeal, cap: u64) -> Result<bool> {
    Ok(reduction_check(a, b, ideal, cap)?.holds())
}

/// `{a, b}` is a joint reduction of `{I, J}` iff e(a, b) = e₁(I|J).
pub fn joint_reduction_check(
    a: &LocalPolynomial,
    b: &LocalPolynomial,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    cap: u64,
) -> Result<ReductionCheck> {
    require_member(i, a)?;
    require_member(j, b)?;
    Ok(ReductionCheck { pair_multiplicity: pair_multiplicity_or_none(a, b, cap)?, target: mixed_e1(i, j)? })
}

pub fn is_joint_reduction(
    a: &LocalPolynomial,
    b: &LocalPolynomial,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    cap: u64,
) -> Result<bool> {
    Ok(joint_reduction_check(a, b, i, j, cap)?.holds())
}
