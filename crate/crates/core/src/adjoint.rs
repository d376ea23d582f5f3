//! Adjoint ideals by the blow-up recursion, and cores.
//!
//! For an ideal `I` of a two-dimensional regular ring with `m = (x, y)`,
//!
//! ```text
//! adj(I) = ((1/x)·adj(I·R[m/x]) ∩ R) ∩ ((1/y)·adj(I·R[m/y]) ∩ R)
//! ```
//!
//! and `adj(g·I) = g·adj(I)` for any element `g`. On a monomial ideal the
//! chart ideal is `x^{o(I)}` times the transform, whose adjoint is computed
//! recursively at the chart origin. The recursion bottoms out at order one,
//! where the adjoint is the whole ring.

use crate::error::{Error, Result};
use crate::newton::{integral_closure, is_complete};
use crate::staircase::{Exponent, MonomialIdeal};
use crate::transform::{check_edge, transform, ChartDirection};

/// One level of the adjoint recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointTrace {
    pub input: MonomialIdeal,
    /// Monomial gcd removed before recursing.
    pub stripped_factor: Exponent,
    /// Contractions to `R` of the X- and Y-chart adjoints; `None` in the
    /// base case.
    pub chart_results: Option<(MonomialIdeal, MonomialIdeal)>,
    pub result: MonomialIdeal,
}

/// Contraction `(1/x_dir)·A ∩ R` of a monomial ideal `A` living in the chart
/// coordinates of `dir`.
fn contract(chart_ideal: &MonomialIdeal, dir: ChartDirection) -> MonomialIdeal {
    let mut points = Vec::new();
    for &g in chart_ideal.generators() {
        match dir {
            // x^i y^j -> x^{i+j} v^j; need x^{i+j+1} v^j in A.
            ChartDirection::X => {
                for j in g.j..=g.j.max(g.i.saturating_sub(1)) {
                    points.push(Exponent::new(g.i.saturating_sub(j + 1), j));
                }
            }
            // x^i y^j -> u^i y^{i+j}; need u^i y^{i+j+1} in A.
            ChartDirection::Y => {
                for i in g.i..=g.i.max(g.j.saturating_sub(1)) {
                    points.push(Exponent::new(i, g.j.saturating_sub(i + 1)));
                }
            }
        }
    }
    MonomialIdeal::new(points).expect("chart ideals are nonempty")
}

fn step(ideal: &MonomialIdeal) -> Result<AdjointTrace> {
    let g = ideal.monomial_gcd();
    let stripped = ideal.quotient_by_monomial(g);
    if stripped.order() <= 1 {
        return Ok(AdjointTrace {
            input: ideal.clone(),
            stripped_factor: g,
            chart_results: None,
            result: MonomialIdeal::principal(g),
        });
    }
    if !stripped.is_m_primary() {
        return Err(Error::Invariant(format!("gcd-free part `{stripped}` of `{ideal}` is not m-primary")));
    }
    let order = stripped.order();
    let measure = integral_closure(&stripped)?.colength()?;
    let mut contractions = Vec::with_capacity(2);
    for dir in ChartDirection::BOTH {
        let t = transform(&stripped, dir)?;
        check_edge(&stripped, &measure, &t)?;
        let chart_adjoint = step(&t)?.result.shift(dir.exceptional_power(order));
        contractions.push(contract(&chart_adjoint, dir));
    }
    let (cx, cy) = (contractions.swap_remove(0), contractions.swap_remove(0));
    let core_result = cx.intersect(&cy);
    if !stripped.is_subset_of(&core_result) || !is_complete(&core_result)? {
        return Err(Error::Invariant(format!(
            "adjoint `{core_result}` of `{stripped}` is not a complete ideal containing it"
        )));
    }
    Ok(AdjointTrace {
        input: ideal.clone(),
        stripped_factor: g,
        result: core_result.shift(g),
        chart_results: Some((cx, cy)),
    })
}

/// The top level of the recursion, with both chart contributions.
pub fn adjoint_traced(ideal: &MonomialIdeal) -> Result<AdjointTrace> {
    if !(ideal.is_unit() || ideal.is_m_primary()) {
        return Err(Error::InfiniteColength(ideal.to_string()));
    }
    step(ideal)
}

pub fn adjoint(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    Ok(adjoint_traced(ideal)?.result)
}

/// core(I) = I · adj(I) for complete m-primary `I`.
pub fn core(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_m_primary() {
        return Err(Error::InfiniteColength(ideal.to_string()));
    }
    if !is_complete(ideal)? {
        return Err(Error::CoreRequiresComplete(ideal.to_string()));
    }
    Ok(ideal.product(&adjoint(ideal)?))
}

fn require_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn agree(claim: &str, built: MonomialIdeal, direct: MonomialIdeal) -> Result<MonomialIdeal> {
    if built != direct {
        return Err(Error::Invariant(format!("{claim}: decomposition `{built}` differs from direct `{direct}`")));
    }
    Ok(built)
}

/// adj(Iⁿ) = I^{n−1} · adj(I).
pub fn adjoint_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    require_positive("n", n)?;
    let built = ideal.power(n - 1).product(&adjoint(ideal)?);
    agree("adjoint_power", built, adjoint(&ideal.power(n))?)
}

/// adj(IʳJˢ) = Iʳ · adj(Jˢ) + Jˢ · adj(Iʳ).
pub fn adj_product(i: &MonomialIdeal, j: &MonomialIdeal, r: u32, s: u32) -> Result<MonomialIdeal> {
    require_positive("r", r)?;
    require_positive("s", s)?;
    let (ir, js) = (i.power(r), j.power(s));
    let built = ir.product(&adjoint(&js)?).sum(&js.product(&adjoint(&ir)?));
    agree("adj_product", built, adjoint(&ir.product(&js))?)
}

/// core(IʳJˢ) = I²ʳ · core(Jˢ) + core(Iʳ) · J²ˢ.
pub fn core_product(i: &MonomialIdeal, j: &MonomialIdeal, r: u32, s: u32) -> Result<MonomialIdeal> {
    require_positive("r", r)?;
    require_positive("s", s)?;
    let (ir, js) = (i.power(r), j.power(s));
    let built = i.power(2 * r).product(&core(&js)?).sum(&core(&ir)?.product(&j.power(2 * s)));
    agree("core_product", built, core(&ir.product(&js))?)
}
