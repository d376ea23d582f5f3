//! Random ideals and brute-force oracles shared by the property tests.
#![allow(dead_code)]

use adjcore::{integral_closure, Exponent, MonomialIdeal};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// m-primary monomial ideals with pure powers below `max`.
pub fn m_primary(max: u64) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max, 1..=max, prop::collection::vec((0..=max, 0..=max), 0..5)).prop_map(|(p, q, extra)| {
        let mut gens = vec![(p, 0), (0, q)];
        gens.extend(extra.into_iter().filter(|&(a, b)| a + b > 0));
        MonomialIdeal::new(gens).expect("nonempty")
    })
}

pub fn complete(max: u64) -> impl Strategy<Value = MonomialIdeal> {
    m_primary(max).prop_map(|i| integral_closure(&i).expect("m-primary"))
}

/// Membership by divisibility against every generator.
pub fn brute_contains(ideal: &MonomialIdeal, a: u64, b: u64) -> bool {
    ideal.generators().iter().any(|g| g.i <= a && g.j <= b)
}

/// Points of the box `[0, x) × [0, y)` outside the ideal, where `x^x` and
/// `y^y` are its pure powers.
pub fn brute_colength(ideal: &MonomialIdeal) -> u64 {
    let p = ideal.generators()[0].i;
    let q = ideal.generators()[ideal.generators().len() - 1].j;
    let mut count = 0;
    for a in 0..p {
        for b in 0..q {
            if !brute_contains(ideal, a, b) {
                count += 1;
            }
        }
    }
    count
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Whether `(pa, pb)` dominates a point of the segment between two
/// generators, i.e. lies in the convex hull plus the quadrant. Feasibility of
/// `t ∈ [0, 1]` is solved exactly in rationals.
pub fn in_region(ideal: &MonomialIdeal, pa: &BigRational, pb: &BigRational) -> bool {
    let gens = ideal.generators();
    for g in gens {
        for h in gens {
            // p >= t*g + (1 - t)*h coordinatewise.
            let (mut lo, mut hi) = (BigRational::zero(), BigRational::one());
            let mut feasible = true;
            for (p, gv, hv) in [(pa, g.i as i64, h.i as i64), (pb, g.j as i64, h.j as i64)] {
                let slope = rat(gv - hv);
                let rest = p - rat(hv);
                if slope.is_zero() {
                    feasible &= !rest.is_negative();
                } else if slope.is_positive() {
                    hi = hi.min(&rest / &slope);
                } else {
                    lo = lo.max(&rest / &slope);
                }
            }
            if feasible && lo <= hi {
                return true;
            }
        }
    }
    false
}

fn box_bounds(ideal: &MonomialIdeal) -> (u64, u64) {
    (ideal.generators()[0].i, ideal.generators()[ideal.generators().len() - 1].j)
}

/// Integral closure from the region test on every lattice point of the box.
pub fn brute_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let (p, q) = box_bounds(ideal);
    let mut gens = vec![Exponent::new(p, 0), Exponent::new(0, q)];
    for a in 0..=p {
        for b in 0..=q {
            if in_region(ideal, &rat(a as i64), &rat(b as i64)) {
                gens.push(Exponent::new(a, b));
            }
        }
    }
    MonomialIdeal::new(gens).expect("nonempty")
}

/// Interior-point adjoint: `(a+1, b+1) − (ε, ε)` in the region for a small
/// enough rational `ε`. Boundary edges have integer endpoints below `box`, so
/// `ε = 1/(4·(box + 1)²)` separates interior points from boundary points.
pub fn brute_adjoint(ideal: &MonomialIdeal) -> MonomialIdeal {
    let (p, q) = box_bounds(ideal);
    let bound = p.max(q) as i64 + 1;
    let eps = BigRational::new(1.into(), (4 * bound * bound).into());
    let mut gens = vec![Exponent::new(p, 0), Exponent::new(0, q)];
    for a in 0..=p {
        for b in 0..=q {
            let pa = rat(a as i64 + 1) - &eps;
            let pb = rat(b as i64 + 1) - &eps;
            if in_region(ideal, &pa, &pb) {
                gens.push(Exponent::new(a, b));
            }
        }
    }
    MonomialIdeal::new(gens).expect("nonempty")
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let lead = rows[rank][c].clone();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = &row[c] / &lead;
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *entry -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
