//! Exact computations with m-primary monomial ideals in the two-variable
//! regular local ring k[[x, y]].
//!
//! The crate covers staircase arithmetic ([`staircase`]), Newton diagrams and
//! integral closure ([`newton`]), quadratic transforms and point bases with
//! the Hoskin–Deligne sums ([`transform`]), adjoint and core ideals
//! ([`adjoint`]), exact linear algebra in truncated local rings for
//! polynomial ideals ([`local`]), plus a parser, a seeded random corpus and
//! the identity-checking suites used by the `adjcore` command line tool.
//!
//! All arithmetic is exact. Exponents are `u64`; every derived scalar
//! (colength, multiplicity, mixed multiplicity, Hilbert coefficients) is a
//! [`num_bigint::BigInt`].

pub mod adjoint;
pub mod corpus;
mod error;
pub mod local;
pub mod newton;
pub mod parse;
pub mod staircase;
pub mod transform;
pub mod verify;

pub use adjoint::{adj_product, adjoint, adjoint_power, adjoint_traced, core, core_product, AdjointTrace};
pub use corpus::{random_complete_ideal, CorpusSpec};
pub use error::{Error, Result};
pub use local::{LocalPolynomial, PolynomialIdeal, TruncationCertificate};
pub use newton::{
    covolume, howald_adjoint, integral_closure, is_complete, mixed_e1, multiplicity, newton_diagram,
    NewtonDiagram,
};
pub use parse::{parse_ideal, parse_polynomial, ParsedIdeal};
pub use staircase::{m_power, Exponent, MonomialIdeal};
pub use transform::{
    hd_colength, hd_e1, hd_mixed_e1, hd_multiplicity, hilbert_coefficients, joint_point_basis,
    point_basis, transform, ChartDirection, JointPointBasisNode, PointBasisNode, PointBasisTree,
};
pub use verify::{Value, VerificationReport};

/// Binomial coefficient `C(n, 2)` for a possibly negative or small `n`,
/// with the convention `C(0, 2) = C(1, 2) = 0`.
pub fn choose2(n: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::{One, Zero};
    if *n <= num_bigint::BigInt::one() {
        return num_bigint::BigInt::zero();
    }
    n * (n - 1) / 2
}
