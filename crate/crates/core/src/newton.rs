//! Newton diagrams of m-primary monomial ideals.
//!
//! The region of a diagram is the convex hull of the generator exponents plus
//! the positive quadrant. Integral closure, multiplicity (twice the area
//! under the diagram) and the interior-point adjoint all read off the edges
//! of its lower-left boundary.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::staircase::{Exponent, MonomialIdeal};

/// Vertices of the lower-left boundary, by strictly decreasing x-exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonDiagram {
    vertices: Vec<Exponent>,
}

/// Supporting line `db*a + da*b = c` of one boundary edge, oriented so the
/// region lies on the `>= c` side.
#[derive(Debug, Clone, Copy)]
struct Edge {
    lo: i128,
    hi: i128,
    da: i128,
    db: i128,
    c: i128,
}

impl Edge {
    fn new(v: Exponent, w: Exponent) -> Self {
        let (a1, b1) = (v.i as i128, v.j as i128);
        let (a2, b2) = (w.i as i128, w.j as i128);
        let da = a1 - a2;
        let db = b2 - b1;
        Edge { lo: a2, hi: a1, da, db, c: db * a1 + da * b1 }
    }

    /// Numerator over `da` of the boundary height at column `a`.
    fn height_num(&self, a: i128) -> i128 {
        self.c - self.db * a
    }
}

impl NewtonDiagram {
    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Twice the area between the axes and the boundary.
    fn doubled_area(&self) -> BigInt {
        self.vertices
            .windows(2)
            .map(|w| BigInt::from(w[0].i) * BigInt::from(w[1].j) - BigInt::from(w[1].i) * BigInt::from(w[0].j))
            .fold(BigInt::zero(), |acc, t| acc + t)
    }
}

fn require_m_primary(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_m_primary() {
        Ok(())
    } else {
        Err(Error::InfiniteColength(ideal.to_string()))
    }
}

pub fn newton_diagram(ideal: &MonomialIdeal) -> Result<NewtonDiagram> {
    require_m_primary(ideal)?;
    let mut hull: Vec<Exponent> = Vec::new();
    for &c in ideal.generators() {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.i as i128 - a.i as i128) * (c.j as i128 - a.j as i128)
                - (b.j as i128 - a.j as i128) * (c.i as i128 - a.i as i128);
            // b stays only if it lies strictly on the origin side of a--c.
            if cross < 0 {
                break;
            }
            hull.pop();
        }
        hull.push(c);
    }
    Ok(NewtonDiagram { vertices: hull })
}

/// Integral closure: all lattice points on or above the diagram.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let diagram = newton_diagram(ideal)?;
    let mut points: Vec<Exponent> = diagram.vertices.clone();
    for edge in diagram.edges() {
        for a in edge.lo..=edge.hi {
            let b = Integer::div_ceil(&edge.height_num(a), &edge.da);
            points.push(Exponent::new(a as u64, b.max(0) as u64));
        }
    }
    MonomialIdeal::new(points)
}

pub fn is_complete(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

/// Area under the diagram, in lattice units.
pub fn covolume(ideal: &MonomialIdeal) -> Result<BigRational> {
    let diagram = newton_diagram(ideal)?;
    Ok(BigRational::new(diagram.doubled_area(), BigInt::from(2)))
}

/// e(I) = 2 · covolume.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<BigInt> {
    let doubled = covolume(ideal)? * BigInt::from(2);
    if !doubled.is_integer() {
        return Err(Error::Invariant(format!("non-integral doubled covolume for `{ideal}`")));
    }
    Ok(doubled.to_integer())
}

/// e₁(I|J) = (e(IJ) − e(I) − e(J)) / 2.
pub fn mixed_e1(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<BigInt> {
    let diff = multiplicity(&i.product(j))? - multiplicity(i)? - multiplicity(j)?;
    if diff.is_negative() || diff.is_odd() {
        return Err(Error::Invariant(format!("mixed multiplicity parity breach for `{i}` and `{j}`: {diff}")));
    }
    Ok(diff / 2)
}

/// Adjoint by the interior-point rule: `x^a y^b` belongs iff `(a+1, b+1)`
/// lies strictly inside the Newton region.
pub fn howald_adjoint(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let diagram = newton_diagram(ideal)?;
    if ideal.is_unit() {
        return Ok(MonomialIdeal::unit());
    }
    let mut points = Vec::new();
    for edge in diagram.edges() {
        for shifted_a in edge.lo.max(1)..=edge.hi {
            let shifted_b = (Integer::div_floor(&edge.height_num(shifted_a), &edge.da) + 1).max(1);
            points.push(Exponent::new((shifted_a - 1) as u64, (shifted_b - 1) as u64));
        }
    }
    MonomialIdeal::new(points)
}
