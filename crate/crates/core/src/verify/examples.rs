//! Closed-form values for two worked pairs of ideals.
//!
//! The fixed pair is `I = (x², xy, y³)`, `K = (x³, xy, y²)`. The family, for
//! `u >= 3`, is `I = (xᵘ, xy, yᵘ⁺¹)`, `K = (xᵘ⁺¹, xy, yᵘ)`. In both, adjoints
//! and cores of `IʳKˢ` are a fixed factor times powers of `I` and `K`, and
//! their colengths are explicit quadratics in `r` and `s`.

use num_bigint::BigInt;

use super::identities::JointReduction;
use super::{Recorder, Value, VerificationReport};
use crate::adjoint::{adjoint, core};
use crate::error::{Error, Result};
use crate::local::{
    colength_poly, joint_reduction_check, reduction_check, ideals_equal_monomial, LocalPolynomial, PolynomialIdeal,
    ReductionCheck, DEFAULT_TRUNCATION_CAP,
};
use crate::newton::{mixed_e1, multiplicity};
use crate::staircase::{m_power, MonomialIdeal};

/// Largest `n` at which `adj(Iⁿ⁺¹) = (a, b)·adj(Iⁿ)` and its core analogue
/// are checked through truncated linear algebra.
const MINIMAL_REDUCTION_MAX: u32 = 3;
/// Largest `r`, `s` for the polynomial joint-reduction forms in the family,
/// for adjoints and for cores.
const FAMILY_JOINT_FORM_MAX: (u32, u32) = (3, 2);

fn c2(n: i64) -> i64 {
    n * (n + 1) / 2
}

fn ideal(pairs: &[(u64, u64)]) -> MonomialIdeal {
    MonomialIdeal::from_pairs(pairs)
}

fn poly(terms: &[(i64, (u64, u64))]) -> LocalPolynomial {
    LocalPolynomial::from_int_terms(terms)
}

type Quadratic = Box<dyn Fn(i64, i64) -> i64>;

struct Example {
    prefix: &'static str,
    i: MonomialIdeal,
    k: MonomialIdeal,
    e: i64,
    colength: i64,
    mixed: i64,
    /// adj(IʳKˢ) = factor · Iʳ⁻¹Kˢ⁻¹ and core(IʳKˢ) = factor · I²ʳ⁻¹K²ˢ⁻¹.
    factor: MonomialIdeal,
    adj_power_colength: Box<dyn Fn(i64) -> i64>,
    adj_colength: Quadratic,
    core_colength: Quadratic,
    joint: JointReduction,
    minimal: [JointReduction; 2],
    /// Largest `r`, `s` at which the adjoint and core joint-reduction forms
    /// are checked.
    joint_form_max: (u32, u32),
}

fn id(prefix: &str, claim: &str) -> String {
    format!("{prefix}.{claim}")
}

fn check_value(check: &ReductionCheck) -> Value {
    match &check.pair_multiplicity {
        Some(e) => Value::Int(e.clone()),
        None => Value::Text("not certified m-primary".into()),
    }
}

fn polynomial_equality(poly: &PolynomialIdeal, expected: &MonomialIdeal) -> Result<(Value, Value)> {
    let lhs = Value::from(expected);
    if ideals_equal_monomial(poly, expected, DEFAULT_TRUNCATION_CAP)? {
        Ok((lhs.clone(), lhs))
    } else {
        Ok((lhs, Value::Text(poly.to_string())))
    }
}

fn pair_times(red: &JointReduction, pa: u32, pb: u32, ma: &MonomialIdeal, mb: &MonomialIdeal) -> Result<PolynomialIdeal> {
    Ok(PolynomialIdeal::scaled_monomial_ideal(&red.a.pow(pa), ma)?
        .sum(&PolynomialIdeal::scaled_monomial_ideal(&red.b.pow(pb), mb)?))
}

fn require_positive(values: &[(&str, u32)]) -> Result<()> {
    for (name, v) in values {
        if *v == 0 {
            return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
        }
    }
    Ok(())
}

impl Example {
    fn run(&self, rec: &mut Recorder, rs: &[(u32, u32)], ns: &[u32]) {
        let p = self.prefix;
        let m = MonomialIdeal::maximal();
        for (label, x, min_red) in [(1i64, &self.i, &self.minimal[0]), (2, &self.k, &self.minimal[1])] {
            let lbl = [("ideal", label)];
            rec.check(&id(p, "e"), &lbl, || Ok((multiplicity(x)?, BigInt::from(self.e))));
            rec.check(&id(p, "colength"), &lbl, || Ok((x.colength()?, BigInt::from(self.colength))));
            rec.check(&id(p, "e1"), &lbl, || Ok((multiplicity(x)? - x.colength()?, BigInt::from(self.e - self.colength))));
            rec.check(&id(p, "reduction"), &lbl, || {
                let check = reduction_check(&min_red.a, &min_red.b, x, DEFAULT_TRUNCATION_CAP)?;
                Ok((check_value(&check), check.target))
            });
            for &n in ns {
                let pn = [("ideal", label), ("n", n.into())];
                rec.check(&id(p, "adj_power"), &pn, || Ok((adjoint(&x.power(n))?, m.product(&x.power(n - 1)))));
                rec.check(&id(p, "adj_power.colength"), &pn, || {
                    Ok((adjoint(&x.power(n))?.colength()?, BigInt::from((self.adj_power_colength)(n.into()))))
                });
                if n <= MINIMAL_REDUCTION_MAX {
                    rec.check(&id(p, "adj_power.minimal_reduction"), &pn, || {
                        let adj_n = adjoint(&x.power(n))?;
                        polynomial_equality(&pair_times(min_red, 1, 1, &adj_n, &adj_n)?, &adjoint(&x.power(n + 1))?)
                    });
                    rec.check(&id(p, "core_power.minimal_reduction"), &pn, || {
                        let core_n = core(&x.power(n))?;
                        polynomial_equality(&pair_times(min_red, 2, 2, &core_n, &core_n)?, &core(&x.power(n + 1))?)
                    });
                }
            }
        }
        rec.check(&id(p, "mixed_e1"), &[], || Ok((mixed_e1(&self.i, &self.k)?, BigInt::from(self.mixed))));
        rec.check(&id(p, "joint_reduction"), &[], || {
            let check = joint_reduction_check(&self.joint.a, &self.joint.b, &self.i, &self.k, DEFAULT_TRUNCATION_CAP)?;
            Ok((check_value(&check), check.target))
        });
        rec.check(&id(p, "joint_reduction.multiplicity"), &[], || {
            let check = joint_reduction_check(&self.joint.a, &self.joint.b, &self.i, &self.k, DEFAULT_TRUNCATION_CAP)?;
            Ok((check_value(&check), BigInt::from(self.mixed)))
        });
        for &(r, s) in rs {
            let prs = [("r", r.into()), ("s", s.into())];
            let (ri, si) = (i64::from(r), i64::from(s));
            let (ir, ks) = (self.i.power(r), self.k.power(s));
            let irks = ir.product(&ks);
            rec.check(&id(p, "adj_product"), &prs, || {
                Ok((adjoint(&irks)?, self.factor.product(&self.i.power(r - 1)).product(&self.k.power(s - 1))))
            });
            rec.check(&id(p, "adj_product.colength"), &prs, || {
                Ok((adjoint(&irks)?.colength()?, BigInt::from((self.adj_colength)(ri, si))))
            });
            rec.check(&id(p, "core_product"), &prs, || {
                Ok((core(&irks)?, self.factor.product(&self.i.power(2 * r - 1)).product(&self.k.power(2 * s - 1))))
            });
            rec.check(&id(p, "core_product.colength"), &prs, || {
                Ok((core(&irks)?.colength()?, BigInt::from((self.core_colength)(ri, si))))
            });
            if r.max(s) <= self.joint_form_max.0 {
                rec.check(&id(p, "adj_product.joint_reduction"), &prs, || {
                    let poly = pair_times(&self.joint, r, s, &adjoint(&ks)?, &adjoint(&ir)?)?;
                    polynomial_equality(&poly, &adjoint(&irks)?)
                });
            }
            if r.max(s) <= self.joint_form_max.1 {
                rec.check(&id(p, "core_product.joint_reduction"), &prs, || {
                    let poly = pair_times(&self.joint, 2 * r, 2 * s, &core(&ks)?, &core(&ir)?)?;
                    polynomial_equality(&poly, &core(&irks)?)
                });
            }
        }
    }
}

fn fixed_pair() -> Example {
    Example {
        prefix: "fixed",
        i: ideal(&[(2, 0), (1, 1), (0, 3)]),
        k: ideal(&[(3, 0), (1, 1), (0, 2)]),
        e: 5,
        colength: 4,
        mixed: 4,
        factor: m_power(3),
        adj_power_colength: Box::new(|n| 5 * c2(n) - 4 * n),
        adj_colength: Box::new(|r, s| 5 * c2(r) + 4 * r * s + 5 * c2(s) - 4 * r - 4 * s),
        core_colength: Box::new(|r, s| 20 * c2(r) + 16 * r * s + 20 * c2(s) - 13 * r - 13 * s),
        joint: JointReduction::new(poly(&[(1, (2, 0))]), poly(&[(1, (0, 2))])),
        minimal: [
            JointReduction::new(poly(&[(1, (1, 1))]), poly(&[(1, (2, 0)), (1, (0, 3))])),
            JointReduction::new(poly(&[(1, (1, 1))]), poly(&[(1, (0, 2)), (1, (3, 0))])),
        ],
        joint_form_max: (u32::MAX, u32::MAX),
    }
}

fn family(u: u64) -> Example {
    let ui = u as i64;
    let e = 2 * ui + 1;
    Example {
        prefix: "family",
        i: ideal(&[(u, 0), (1, 1), (0, u + 1)]),
        k: ideal(&[(u + 1, 0), (1, 1), (0, u)]),
        e,
        colength: 2 * ui,
        mixed: 2 * ui,
        factor: MonomialIdeal::maximal().product(&ideal(&[(u, 0), (1, 1), (0, u)])),
        adj_power_colength: Box::new(move |n| e * c2(n) - 2 * ui * n),
        adj_colength: Box::new(move |r, s| e * c2(r) + 2 * ui * r * s + e * c2(s) - 2 * ui * r - 2 * ui * s),
        core_colength: Box::new(move |r, s| {
            4 * e * c2(r) + 8 * ui * r * s + 4 * e * c2(s) - (6 * ui + 1) * r - (6 * ui + 1) * s
        }),
        joint: JointReduction::new(poly(&[(1, (1, 1)), (1, (u, 0))]), poly(&[(1, (1, 1)), (1, (0, u))])),
        minimal: [
            JointReduction::new(poly(&[(1, (u, 0)), (1, (0, u + 1))]), poly(&[(1, (1, 1))])),
            JointReduction::new(poly(&[(1, (u + 1, 0)), (1, (0, u))]), poly(&[(1, (1, 1))])),
        ],
        joint_form_max: FAMILY_JOINT_FORM_MAX,
    }
}

fn fixed_pair_reports(rs: &[(u32, u32)], ns: &[u32]) -> Vec<VerificationReport> {
    let mut rec = Recorder::default();
    fixed_pair().run(&mut rec, rs, ns);
    let x = poly(&[(1, (1, 0))]);
    let y = poly(&[(1, (0, 1))]);
    let f = poly(&[(1, (2, 0)), (1, (0, 3))]);
    for (part, first, expected) in [(1i64, &x, 3i64), (2, &y, 2)] {
        rec.check("fixed.lech_split", &[("part", part)], || {
            Ok((colength_poly(&PolynomialIdeal::pair(first, &f)?, DEFAULT_TRUNCATION_CAP)?, BigInt::from(expected)))
        });
    }
    rec.check("fixed.lech_split.total", &[], || {
        let xy = poly(&[(1, (1, 1))]);
        Ok((colength_poly(&PolynomialIdeal::pair(&xy, &f)?, DEFAULT_TRUNCATION_CAP)?, BigInt::from(5)))
    });
    rec.finish()
}

/// The fixed pair at one parameter tuple.
pub fn fixed_pair_suite(r: u32, s: u32, n: u32) -> Result<Vec<VerificationReport>> {
    require_positive(&[("r", r), ("s", s), ("n", n)])?;
    Ok(fixed_pair_reports(&[(r, s)], &[n]))
}

/// The fixed pair over `1..=r_max × 1..=s_max` and `1..=n_max`.
pub fn fixed_pair_suite_upto(r_max: u32, s_max: u32, n_max: u32) -> Result<Vec<VerificationReport>> {
    require_positive(&[("r", r_max), ("s", s_max), ("n", n_max)])?;
    let rs: Vec<_> = (1..=r_max).flat_map(|r| (1..=s_max).map(move |s| (r, s))).collect();
    let ns: Vec<_> = (1..=n_max).collect();
    Ok(fixed_pair_reports(&rs, &ns))
}

/// `K_n = (x^{2n−3}, x^{n−2}y, y²)`, whose adjoint is `(x^{n−2}, y)`.
fn k_n(n: u64) -> MonomialIdeal {
    ideal(&[(2 * n - 3, 0), (n - 2, 1), (0, 2)])
}

fn family_reports(u: u64, rs: &[(u32, u32)], ns: &[u32]) -> Result<Vec<VerificationReport>> {
    if u < 3 {
        return Err(Error::InvalidParameter(format!("u must be at least 3, got {u}")));
    }
    let mut rec = Recorder::default();
    let ex = family(u);
    ex.run(&mut rec, rs, ns);
    let pu = [("u", u as i64)];
    rec.check("family.adj_ik", &pu, || {
        Ok((adjoint(&ex.i.product(&ex.k))?, ideal(&[(u + 1, 0), (2, 1), (1, 2), (0, u + 1)])))
    });
    for n in 2..=8u64 {
        rec.check("family.adj_k_n", &[("n", n as i64)], || Ok((adjoint(&k_n(n))?, ideal(&[(n - 2, 0), (0, 1)]))));
    }
    let mut reports = rec.finish();
    for r in &mut reports {
        r.params.insert("u".into(), u as i64);
    }
    Ok(reports)
}

/// The family at one parameter tuple; `u < 3` is rejected.
pub fn family_suite(u: u64, r: u32, s: u32, n: u32) -> Result<Vec<VerificationReport>> {
    require_positive(&[("r", r), ("s", s), ("n", n)])?;
    family_reports(u, &[(r, s)], &[n])
}

/// The family over `1..=r_max × 1..=s_max` and `1..=n_max`.
pub fn family_suite_upto(u: u64, r_max: u32, s_max: u32, n_max: u32) -> Result<Vec<VerificationReport>> {
    require_positive(&[("r", r_max), ("s", s_max), ("n", n_max)])?;
    let rs: Vec<_> = (1..=r_max).flat_map(|r| (1..=s_max).map(move |s| (r, s))).collect();
    let ns: Vec<_> = (1..=n_max).collect();
    family_reports(u, &rs, &ns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::all_passed;

    fn find<'a>(reports: &'a [VerificationReport], claim: &str) -> &'a VerificationReport {
        reports.iter().find(|r| r.claim_id == claim).unwrap_or_else(|| panic!("missing {claim}"))
    }

    #[test]
    fn fixed_pair_single_tuples() {
        let r = fixed_pair_suite(1, 1, 1).unwrap();
        assert!(all_passed(&r), "{:#?}", r.iter().filter(|r| !r.passed).collect::<Vec<_>>());
        assert_eq!(find(&r, "fixed.core_product.colength").lhs, Value::from(30));
        let r = fixed_pair_suite(1, 1, 5).unwrap();
        assert_eq!(find(&r, "fixed.adj_power.colength").lhs, Value::from(55));
        assert!(all_passed(&fixed_pair_suite(2, 3, 4).unwrap()));
        assert!(fixed_pair_suite(0, 1, 1).is_err());
    }

    #[test]
    fn family_single_tuples() {
        let r = family_suite(3, 1, 1, 1).unwrap();
        assert!(all_passed(&r), "{:#?}", r.iter().filter(|r| !r.passed).collect::<Vec<_>>());
        assert_eq!(find(&r, "family.adj_product.colength").lhs, Value::from(8));
        assert!(all_passed(&family_suite(5, 2, 1, 1).unwrap()));
        assert!(matches!(family_suite(2, 1, 1, 1), Err(Error::InvalidParameter(_))));
    }
}
