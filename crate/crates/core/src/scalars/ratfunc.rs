use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// An element of `Q(q)`, kept in reduced normal form.
///
/// Normal form: `num` and `den` are coprime in `Q[q, q⁻¹]`, `den` has lowest
/// exponent zero and lowest coefficient `1`. Two equal rational functions
/// therefore have identical representations, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        Self::rescale(num, den)
    }

    /// Moves powers of `q` to the numerator and makes the denominator's
    /// lowest coefficient `1`. Assumes `num/den` already coprime.
    pub(crate) fn rescale(num: LaurentPoly, den: LaurentPoly) -> Self {
        let shift = den.low_degree().unwrap();
        let c = den.lowest_coeff().unwrap().recip();
        let (num, den) = if c.is_one() {
            (num.shift(-shift), den.shift(-shift))
        } else {
            (num.scale(&c).shift(-shift), den.scale(&c).shift(-shift))
        };
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Re-reduces an already normal value; the identity on normal forms.
    pub fn normalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::rescale(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        match c {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => Self { num: self.num.scale(&Rational::from_integer(c.into())), den: self.den.clone() },
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(Self { num: base.num.pow(e.unsigned_abs()), den: base.den.pow(e.unsigned_abs()) })
    }

    pub fn evaluate(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(q)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(q)? / d)
    }

    /// Parses `Display` output and, more generally, any rational expression in
    /// `q` built from integers, `+ - * /`, `^` with integer exponents and parentheses.
    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel; both inputs are reduced, so the product is too
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap());
        let (n2, d1) = (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap());
        RatFunc::rescale(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        let x = r("(q^2 - 1)/(q - 1)");
        assert_eq!(x, r("q + 1"));
        assert!(x.is_polynomial());
    }

    #[test]
    fn denominator_normalized() {
        let x = r("1/(2*q^3 + 4*q^4)");
        assert_eq!(x.den().low_degree(), Some(0));
        assert!(x.den().lowest_coeff().unwrap().is_one());
        assert_eq!(x.to_string(), "(1/2*q^-3)/(2*q + 1)");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn field_inverse() {
        let x = r("(q^3 - 2*q + 5)/(q^2 + q^-1)");
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["(q^2 - 1)/(q^2 + 1)", "-q + q^-1", "(1/3)/(1 - q)"] {
            let x = r(s);
            assert_eq!(r(&x.to_string()), x);
        }
    }
}
