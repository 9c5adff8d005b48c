//! Exact scalars: rationals, Laurent polynomials in `q`, the field `Q(q)`,
//! quantum integers and the sign parameter `ε`.

mod laurent;
mod parse;
mod ratfunc;
mod cyclo;

use std::fmt::{Debug, Display};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use laurent::LaurentPoly;
pub(crate) use parse::parse_ratfunc_at;
pub(crate) use cyclo::FactoredDen;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Arbitrary-precision rationals, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// The sign parameter: `Odd` (`ε = −1`) for the odd theory, `Classical`
/// (`ε = +1`) for the ordinary Temperley-Lieb specialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Epsilon {
    Odd,
    Classical,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Odd => -1,
            Epsilon::Classical => 1,
        }
    }

    /// `ε^k`, for any integer `k`.
    pub fn pow(self, k: i64) -> i64 {
        if self == Epsilon::Odd && k.rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            -1 => Ok(Epsilon::Odd),
            1 => Ok(Epsilon::Classical),
            _ => Err(Error::InvalidArgument(format!("epsilon must be ±1, got {v}"))),
        }
    }
}

/// The quantum integer `[n] = (qⁿ − (εq)⁻ⁿ)/(q − εq⁻¹)`.
///
/// For `n ≥ 0` this is `Σ_{j<n} ε^j q^{n−1−2j}`; negative arguments use `[−n] = −εⁿ[n]`.
pub fn quantum_int(n: i64, eps: Epsilon) -> LaurentPoly {
    if n < 0 {
        let p = quantum_int(-n, eps);
        return if eps.pow(n) == 1 { -p } else { p };
    }
    LaurentPoly::from_terms((0..n).map(|j| {
        (n - 1 - 2 * j, Rational::from_integer(eps.pow(j).into()))
    }))
}

/// The loop value `δ = −[2] = −(q + εq⁻¹)`.
pub fn delta(eps: Epsilon) -> LaurentPoly {
    -quantum_int(2, eps)
}

/// `[a]/[b]` as a rational function; fails with a root-of-unity error if `[b] = 0`.
pub fn qint_ratio(a: i64, b: i64, eps: Epsilon) -> Result<RatFunc> {
    let den = quantum_int(b, eps);
    if den.is_zero() {
        return Err(Error::RootOfUnity(b));
    }
    RatFunc::new(quantum_int(a, eps), den)
}

/// The operations the linear-algebra layer needs from a coefficient field.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(c: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(c: i64) -> Self {
        Rational::from_integer(c.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(c: i64) -> Self {
        RatFunc::from_int(c)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
}

/// Evaluation `Q(q) → Q` at a rational `q` that is not a root of unity.
///
/// Over `Q` the only roots of unity are `±1`, and `q = 0` is excluded because
/// negative powers occur; so the guard is `|q| ∉ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    q: Rational,
}

impl Specialization {
    pub fn new(q: Rational) -> Result<Self> {
        if Zero::is_zero(&q) || q.abs().is_one() {
            return Err(Error::InvalidArgument(format!("q = {q} is zero or a root of unity")));
        }
        Ok(Self { q })
    }

    pub fn at_int(q: i64) -> Result<Self> {
        Self::new(Rational::from_integer(q.into()))
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn apply(&self, x: &RatFunc) -> Result<Rational> {
        x.evaluate(&self.q)
    }

    pub fn apply_poly(&self, x: &LaurentPoly) -> Result<Rational> {
        x.evaluate(&self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_quantum_integers() {
        let e = Epsilon::Odd;
        assert!(quantum_int(0, e).is_zero());
        assert!(quantum_int(1, e).is_one());
        assert_eq!(quantum_int(2, e), lp("q - q^-1"));
        assert_eq!(quantum_int(3, e), lp("q^2 - 1 + q^-2"));
        assert_eq!(quantum_int(-3, e), lp("q^2 - 1 + q^-2"));
        assert_eq!(quantum_int(2, Epsilon::Classical), lp("q + q^-1"));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(Epsilon::Odd).to_string(), "-q + q^-1");
        assert_eq!(delta(Epsilon::Classical).to_string(), "-q - q^-1");
    }

    #[test]
    fn closed_form_agrees_with_quotient() {
        // (qⁿ − (εq)⁻ⁿ) = [n]·(q − εq⁻¹)
        for eps in [Epsilon::Odd, Epsilon::Classical] {
            let e = eps.value();
            let denom = &LaurentPoly::q() - &LaurentPoly::monomial(Rational::from_integer(e.into()), -1);
            for n in -12i64..=12 {
                let lhs = &LaurentPoly::monomial(<Rational as One>::one(), n)
                    - &LaurentPoly::monomial(Rational::from_integer(eps.pow(n).into()), -n);
                assert_eq!(lhs, &quantum_int(n, eps) * &denom, "n = {n}");
            }
        }
    }

    #[test]
    fn specialization_guard() {
        assert!(Specialization::at_int(1).is_err());
        assert!(Specialization::at_int(-1).is_err());
        assert!(Specialization::at_int(0).is_err());
        let s = Specialization::at_int(2).unwrap();
        let three = RatFunc::from_poly(quantum_int(3, Epsilon::Odd));
        assert_eq!(s.apply(&three).unwrap(), Rational::new(13.into(), 4.into()));
    }
}
