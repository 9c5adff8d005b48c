use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^(low + i)`. The vector
/// is trimmed at both ends, so the zero polynomial is the empty vector and
/// no zero coefficient sits at either end.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: vec![c] }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a nonzero constant times a power of `q` — the units of `Q[q, q⁻¹]`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn highest_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The substitution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        match self.high_degree() {
            None => Self::zero(),
            Some(h) => {
                let coeffs = self.coeffs.iter().rev().cloned().collect();
                Self { low: -h, coeffs }
            }
        }
    }

    /// Evaluates at a rational `q`. Fails only when `q = 0` and a negative
    /// power of `q` occurs.
    pub fn evaluate(&self, q: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if q.is_zero() {
            if self.low < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        Ok(acc * pow_rational(q, self.low))
    }

    /// Primitive integer polynomial associated with `self`: lowest power of
    /// `q` stripped, denominators cleared, content removed, leading
    /// coefficient positive. Ascending coefficients.
    pub(crate) fn primitive_int(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        primitive_part(ints)
    }

    pub(crate) fn from_int_coeffs(low: i64, coeffs: &[BigInt]) -> Self {
        Self::from_dense(
            low,
            coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect(),
        )
    }

    /// Gcd in `Q[q, q⁻¹]`, normalized to an integer-primitive polynomial with
    /// nonzero constant term and positive leading coefficient. Powers of `q`
    /// are units and are ignored. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return Self::from_int_coeffs(0, &other.primitive_int()),
            (false, true) => return Self::from_int_coeffs(0, &self.primitive_int()),
            _ => {}
        }
        if self.is_monomial() || other.is_monomial() {
            return Self::one();
        }
        Self::from_int_coeffs(0, &int_poly_gcd(self.primitive_int(), other.primitive_int()))
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `Q[q, q⁻¹]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_monomial() {
            let c = divisor.coeffs[0].recip();
            return Some(Self { low: self.low - divisor.low, coeffs: self.coeffs.iter().map(|x| x * &c).collect() });
        }
        let n = self.coeffs.len();
        let d = divisor.coeffs.len();
        if n < d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); n - d + 1];
        let lead = divisor.coeffs[d - 1].recip();
        for i in (0..=n - d).rev() {
            let c = &rem[i + d - 1] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    /// Parses the textual form produced by `Display`, e.g. `q^2 - 1 + q^-2`.
    pub fn parse(s: &str) -> Result<Self> {
        let f = super::parse::parse_ratfunc(s)?;
        if !f.den().is_one() {
            return Err(Error::Parse { pos: 0, msg: format!("`{s}` is not a Laurent polynomial") });
        }
        Ok(f.num().clone())
    }
}

pub(crate) fn pow_rational(q: &Rational, e: i64) -> Rational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim_int(&mut v);
    let lead = v.iter().take_while(|c| c.is_zero()).count();
    v.drain(..lead);
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (ascending coefficients, `b` nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim_int(&mut r);
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim_int(&mut r);
    }
    r
}

/// Gcd of two primitive integer polynomials by the primitive PRS.
fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    loop {
        if b.is_empty() {
            return primitive_part(a);
        }
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive_part(prem(&a, &b));
        a = b;
        b = r;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high_degree().unwrap().max(b.high_degree().unwrap());
    let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_roundtrip() {
        for s in ["q^2 - 1 + q^-2", "-q + q^-1", "0", "1", "3/2*q^3 - 2", "-1/2*q^-1"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = p("q^2 - 1");
        let b = p("q^3 - q^2 + q - 1");
        // both divisible by q - 1
        let g = a.gcd(&b);
        assert_eq!(g, p("q - 1"));
        assert_eq!(a.div_exact(&g).unwrap(), p("q + 1"));
        assert!(a.div_exact(&p("q - 2")).is_none());
    }

    #[test]
    fn gcd_ignores_powers_of_q() {
        let a = p("q^5 - q^3");
        let b = p("q^-1 - q");
        assert_eq!(a.gcd(&b), p("q^2 - 1"));
    }

    #[test]
    fn evaluation() {
        let v = p("q^2 - 1 + q^-2").evaluate(&Rational::from_integer(2.into())).unwrap();
        assert_eq!(v, Rational::new(13.into(), 4.into()));
        assert!(p("q^-1").evaluate(&Rational::zero()).is_err());
    }

    #[test]
    fn bar_is_involution() {
        let a = p("3*q^4 - q + 7 - q^-3");
        assert_eq!(a.bar().bar(), a);
        assert_eq!(a.bar().coeff(-4), Rational::from_integer(3.into()));
    }
}
