//! Quadratic transforms at chart origins and the point basis.
//!
//! A monomial ideal is torus-invariant, so after blowing up the closed point
//! its transform can only have base points at the origins of the two affine
//! charts. The tree of transforms at those origins therefore carries the whole
//! point basis, and every residue field extension is trivial. The
//! Hoskin–Deligne identities checked in the tests certify this continuously:
//! a missed base point would break `hd_colength == colength`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::newton::{integral_closure, is_complete};
use crate::staircase::{Exponent, MonomialIdeal};

/// Which affine chart of the blow-up a transform is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChartDirection {
    /// Chart `R[m/x]`, coordinates `(x, v = y/x)`.
    X,
    /// Chart `R[m/y]`, coordinates `(u = x/y, y)`.
    Y,
}

impl ChartDirection {
    pub const BOTH: [ChartDirection; 2] = [ChartDirection::X, ChartDirection::Y];

    /// Chart coordinates of the monomial `x^i y^j` before dividing out
    /// the exceptional divisor.
    pub fn total_transform(self, e: Exponent) -> Exponent {
        match self {
            ChartDirection::X => Exponent::new(e.i + e.j, e.j),
            ChartDirection::Y => Exponent::new(e.i, e.i + e.j),
        }
    }

    /// The monomial `x^k` (X-chart) or `y^k` (Y-chart) in chart coordinates.
    pub fn exceptional_power(self, k: u64) -> Exponent {
        match self {
            ChartDirection::X => Exponent::new(k, 0),
            ChartDirection::Y => Exponent::new(0, k),
        }
    }
}

impl fmt::Display for ChartDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartDirection::X => write!(f, "X"),
            ChartDirection::Y => write!(f, "Y"),
        }
    }
}

fn path_string(path: &[ChartDirection]) -> String {
    path.iter().map(ToString::to_string).collect()
}

/// `I^T = x^{-o(I)} · I T` at the origin of the chosen chart, in chart
/// exponent coordinates.
pub fn transform(ideal: &MonomialIdeal, dir: ChartDirection) -> Result<MonomialIdeal> {
    if ideal.is_unit() {
        return Ok(MonomialIdeal::unit());
    }
    if !ideal.is_m_primary() {
        return Err(Error::InfiniteColength(ideal.to_string()));
    }
    let order = ideal.order();
    let out = MonomialIdeal::new(ideal.generators().iter().map(|&g| {
        let t = dir.total_transform(g);
        match dir {
            ChartDirection::X => Exponent::new(t.i - order, t.j),
            ChartDirection::Y => Exponent::new(t.i, t.j - order),
        }
    }))?;
    if !(out.is_unit() || out.is_m_primary()) {
        return Err(Error::Invariant(format!("transform of `{ideal}` in chart {dir} is not m-primary: `{out}`")));
    }
    Ok(out)
}

/// λ(R/Ī), the termination measure along transform edges.
fn closure_colength(ideal: &MonomialIdeal) -> Result<BigInt> {
    integral_closure(ideal)?.colength()
}

/// Guards one edge of a transform tree: the closure colength must drop.
pub(crate) fn check_edge(parent: &MonomialIdeal, parent_measure: &BigInt, child: &MonomialIdeal) -> Result<BigInt> {
    let measure = closure_colength(child)?;
    if measure >= *parent_measure {
        return Err(Error::Invariant(format!(
            "transform termination breach: λ(R/closure) {measure} of `{child}` does not drop below {parent_measure} of `{parent}`"
        )));
    }
    Ok(measure)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointBasisNode {
    pub path: Vec<ChartDirection>,
    pub ideal_at_point: MonomialIdeal,
    pub order_rt: u64,
    /// `[T:R]`; always 1 for monomial input.
    pub residue_degree: u64,
    pub children: Vec<PointBasisNode>,
}

impl PointBasisNode {
    fn build(path: Vec<ChartDirection>, ideal: MonomialIdeal, measure: BigInt) -> Result<Self> {
        let mut children = Vec::new();
        if !ideal.is_unit() {
            for dir in ChartDirection::BOTH {
                let child = transform(&ideal, dir)?;
                if child.is_unit() {
                    continue;
                }
                let child_measure = check_edge(&ideal, &measure, &child)?;
                let mut child_path = path.clone();
                child_path.push(dir);
                children.push(PointBasisNode::build(child_path, child, child_measure)?);
            }
        }
        Ok(PointBasisNode { path, order_rt: ideal.order(), ideal_at_point: ideal, residue_degree: 1, children })
    }

    /// Preorder traversal, X-children before Y-children.
    pub fn nodes(&self) -> Vec<&PointBasisNode> {
        let mut out = vec![self];
        for child in &self.children {
            out.extend(child.nodes());
        }
        out
    }
}

impl Serialize for PointBasisNode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PointBasisNode", 3)?;
        s.serialize_field("path", &path_string(&self.path))?;
        s.serialize_field("order", &self.order_rt)?;
        s.serialize_field("children", &self.children)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PointBasisTree {
    pub root: PointBasisNode,
}

impl PointBasisTree {
    pub fn nodes(&self) -> Vec<&PointBasisNode> {
        self.root.nodes()
    }

    /// `(r_T, [T:R])` for every infinitely near point with `r_T >= 1`.
    pub fn orders(&self) -> Vec<(u64, u64)> {
        self.nodes().iter().map(|n| (n.order_rt, n.residue_degree)).collect()
    }

    /// Σ f(r_T)·[T:R] over the tree.
    pub fn weighted_sum(&self, f: impl Fn(&BigInt) -> BigInt) -> BigInt {
        self.orders()
            .into_iter()
            .map(|(r, deg)| f(&BigInt::from(r)) * BigInt::from(deg))
            .fold(BigInt::zero(), |acc, v| acc + v)
    }
}

pub fn point_basis(ideal: &MonomialIdeal) -> Result<PointBasisTree> {
    if !ideal.is_m_primary() {
        return Err(Error::InfiniteColength(ideal.to_string()));
    }
    let measure = closure_colength(ideal)?;
    Ok(PointBasisTree { root: PointBasisNode::build(Vec::new(), ideal.clone(), measure)? })
}

fn complete_point_basis(ideal: &MonomialIdeal) -> Result<PointBasisTree> {
    if !ideal.is_m_primary() {
        return Err(Error::InfiniteColength(ideal.to_string()));
    }
    if !is_complete(ideal)? {
        return Err(Error::HdRequiresComplete(ideal.to_string()));
    }
    point_basis(ideal)
}

/// λ(R/I) = Σ C(r_T + 1, 2)·[T:R].
pub fn hd_colength(ideal: &MonomialIdeal) -> Result<BigInt> {
    Ok(complete_point_basis(ideal)?.weighted_sum(|r| r * (r + 1) / 2))
}

/// e(I) = Σ r_T²·[T:R].
pub fn hd_multiplicity(ideal: &MonomialIdeal) -> Result<BigInt> {
    Ok(complete_point_basis(ideal)?.weighted_sum(|r| r * r))
}

/// e₁(I) = Σ C(r_T, 2)·[T:R].
pub fn hd_e1(ideal: &MonomialIdeal) -> Result<BigInt> {
    Ok(complete_point_basis(ideal)?.weighted_sum(crate::choose2))
}

/// Node of the merged point-basis tree of two ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointPointBasisNode {
    pub path: Vec<ChartDirection>,
    pub orders: (u64, u64),
    pub residue_degree: u64,
    pub children: Vec<JointPointBasisNode>,
}

impl JointPointBasisNode {
    fn build(path: Vec<ChartDirection>, pair: (MonomialIdeal, MonomialIdeal), measure: BigInt) -> Result<Self> {
        let (i, j) = pair;
        let mut children = Vec::new();
        for dir in ChartDirection::BOTH {
            let ti = transform(&i, dir)?;
            let tj = transform(&j, dir)?;
            if ti.is_unit() && tj.is_unit() {
                continue;
            }
            let product = ti.product(&tj);
            let child_measure = check_edge(&i.product(&j), &measure, &product)?;
            let mut child_path = path.clone();
            child_path.push(dir);
            children.push(JointPointBasisNode::build(child_path, (ti, tj), child_measure)?);
        }
        Ok(JointPointBasisNode { path, orders: (i.order(), j.order()), residue_degree: 1, children })
    }

    pub fn nodes(&self) -> Vec<&JointPointBasisNode> {
        let mut out = vec![self];
        for child in &self.children {
            out.extend(child.nodes());
        }
        out
    }
}

/// Merged tree of `(r_T(I), r_T(J))`, expanded wherever either order is positive.
pub fn joint_point_basis(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<JointPointBasisNode> {
    for ideal in [i, j] {
        if !ideal.is_m_primary() {
            return Err(Error::InfiniteColength(ideal.to_string()));
        }
    }
    // The transform of a product is the product of transforms, so the
    // product's closure colength bounds the merged tree.
    let measure = closure_colength(&i.product(j))?;
    JointPointBasisNode::build(Vec::new(), (i.clone(), j.clone()), measure)
}

/// e₁(I|J) = Σ r_T(I)·r_T(J)·[T:R].
pub fn hd_mixed_e1(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<BigInt> {
    for ideal in [i, j] {
        if !is_complete(ideal)? {
            return Err(Error::HdRequiresComplete(ideal.to_string()));
        }
    }
    Ok(joint_point_basis(i, j)?
        .nodes()
        .iter()
        .map(|n| BigInt::from(n.orders.0) * BigInt::from(n.orders.1) * BigInt::from(n.residue_degree))
        .fold(BigInt::zero(), |acc, v| acc + v))
}

/// `(e, e₁)` from λ(R/Iⁿ) = e·C(n+1, 2) − e₁·n at n = 1, 2, checked at n = 3
/// and against the point-basis sums.
pub fn hilbert_coefficients(ideal: &MonomialIdeal) -> Result<(BigInt, BigInt)> {
    if !is_complete(ideal)? {
        return Err(Error::HdRequiresComplete(ideal.to_string()));
    }
    let l1 = ideal.colength()?;
    let l2 = ideal.power(2).colength()?;
    let l3 = ideal.power(3).colength()?;
    let e = &l2 - &l1 * 2;
    let e1 = &e - &l1;
    if l3 != &e * 6 - &e1 * 3 {
        return Err(Error::Invariant(format!("Hilbert polynomial of `{ideal}` fails at n = 3")));
    }
    if e != hd_multiplicity(ideal)? || e1 != hd_e1(ideal)? {
        return Err(Error::Invariant(format!("Hilbert coefficients of `{ideal}` disagree with the point basis")));
    }
    Ok((e, e1))
}
