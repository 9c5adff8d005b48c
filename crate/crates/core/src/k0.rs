//! Grothendieck-ring arithmetic in `Z^π[x, x⁻¹]`, `π² = 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::envelope::{Envelope, PiMorphism, Supercategory};
use crate::error::{Error, Result};

/// `Σ (a_k + b_k π) x^k` with integer `a_k, b_k`; zero pairs are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ZPiLaurent {
    terms: BTreeMap<i64, (i64, i64)>,
}

impl ZPiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn pi() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// `(a + bπ) x^k`
    pub fn monomial(k: i64, a: i64, b: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, a, b);
        p
    }

    pub fn add_term(&mut self, k: i64, a: i64, b: i64) {
        let e = self.terms.entry(k).or_insert((0, 0));
        e.0 += a;
        e.1 += b;
        if *e == (0, 0) {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(a, b)` at `x^k`.
    pub fn coeff(&self, k: i64) -> (i64, i64) {
        self.terms.get(&k).copied().unwrap_or((0, 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, (i64, i64))> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn times_pi(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, (a, b))| (*k, (*b, *a))).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, (a, b))| (*k, (a * c, b * c))).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Specializes `π ↦ 1`: the ordinary character.
    pub fn dimension_character(&self) -> BTreeMap<i64, i64> {
        self.terms.iter().map(|(k, (a, b))| (*k, a + b)).filter(|(_, v)| *v != 0).collect()
    }

    /// Total dimension `Σ (a_k + b_k)`.
    pub fn total_dimension(&self) -> i64 {
        self.terms.values().map(|(a, b)| a + b).sum()
    }
}

impl fmt::Display for ZPiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &(a, b)) in self.terms.iter().rev() {
            for (c, pi) in [(a, false), (b, true)] {
                if c == 0 {
                    continue;
                }
                let mut body = Vec::new();
                if c.abs() != 1 || (!pi && k == 0) {
                    body.push(c.abs().to_string());
                }
                if pi {
                    body.push("pi".to_string());
                }
                match k {
                    0 => {}
                    1 => body.push("x".into()),
                    _ => body.push(format!("x^{k}")),
                }
                let sep = match (first, c < 0) {
                    (true, false) => "",
                    (true, true) => "-",
                    (false, false) => " + ",
                    (false, true) => " - ",
                };
                write!(f, "{sep}{}", body.join("*"))?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPiLaurent({self})")
    }
}

impl Add for &ZPiLaurent {
    type Output = ZPiLaurent;
    fn add(self, rhs: &ZPiLaurent) -> ZPiLaurent {
        let mut out = self.clone();
        for (&k, &(a, b)) in &rhs.terms {
            out.add_term(k, a, b);
        }
        out
    }
}

impl Neg for &ZPiLaurent {
    type Output = ZPiLaurent;
    fn neg(self) -> ZPiLaurent {
        self.scale(-1)
    }
}

impl Sub for &ZPiLaurent {
    type Output = ZPiLaurent;
    fn sub(self, rhs: &ZPiLaurent) -> ZPiLaurent {
        self + &(-rhs)
    }
}

impl Mul for &ZPiLaurent {
    type Output = ZPiLaurent;
    fn mul(self, rhs: &ZPiLaurent) -> ZPiLaurent {
        let mut out = ZPiLaurent::zero();
        for (&k1, &(a, b)) in &self.terms {
            for (&k2, &(c, d)) in &rhs.terms {
                out.add_term(k1 + k2, a * c + b * d, a * d + b * c);
            }
        }
        out
    }
}

/// `[n]_{x,π} = x^{n−1} + π x^{n−3} + ⋯ + π^{n−1} x^{1−n}`; zero for `n = 0`.
fn qint(n: i64) -> ZPiLaurent {
    let mut p = ZPiLaurent::zero();
    for j in 0..n.max(0) {
        let (a, b) = if j % 2 == 0 { (1, 0) } else { (0, 1) };
        p.add_term(n - 1 - 2 * j, a, b);
    }
    p
}

/// The canonical basis element `[n]_{x,π}`, `n ≥ 1`.
pub fn qint_xpi(n: i64) -> Result<ZPiLaurent> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("[n]_(x,pi) needs n >= 1, got {n}")));
    }
    Ok(qint(n))
}

/// `Σ_{r=0}^{min(m,n)} π^r [n+m−2r+1]`, the expected value of `[n+1]·[m+1]`.
pub fn clebsch_gordan(n: i64, m: i64) -> ZPiLaurent {
    let mut p = ZPiLaurent::zero();
    for r in 0..=n.min(m) {
        let t = qint(n + m - 2 * r + 1);
        p = &p + &if r % 2 == 0 { t } else { t.times_pi() };
    }
    p
}

/// One summand `π^pi · V(k)` with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Summand {
    pub k: i64,
    pub pi: u8,
    pub mult: i64,
}

/// Greedy expansion in `{[k+1], π[k+1]}` from the top degree down.
pub fn decompose_in_basis(p: &ZPiLaurent) -> Result<Vec<Summand>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some(k) = rest.high_degree() {
        let (a, b) = rest.coeff(k);
        if k < 0 || a < 0 || b < 0 {
            return Err(Error::NotACharacter(format!("{p}")));
        }
        let basis = qint(k + 1);
        if a > 0 {
            out.push(Summand { k, pi: 0, mult: a });
        }
        if b > 0 {
            out.push(Summand { k, pi: 1, mult: b });
        }
        rest = &rest - &(&basis.scale(a) + &basis.times_pi().scale(b));
    }
    Ok(out)
}

/// Truncated series check of `Σ_{n≥0} [n+1]_{x,π} tⁿ = 1/(1 − [2]t + πt²)`:
/// the product with the denominator is `1` up to order `t^N`.
pub fn chebyshev_genfun_check(n_max: usize) -> bool {
    let series: Vec<ZPiLaurent> = (0..=n_max as i64).map(|n| qint(n + 1)).collect();
    let den = [ZPiLaurent::one(), -&qint(2), ZPiLaurent::pi()];
    (0..=n_max).all(|k| {
        let mut c = ZPiLaurent::zero();
        for (i, d) in den.iter().enumerate() {
            if i <= k {
                c = &c + &(d * &series[k - i]);
            }
        }
        if k == 0 {
            c == ZPiLaurent::one()
        } else {
            c.is_zero()
        }
    })
}

/// `[V]^n = [2]_{x,π}^n`.
pub fn k0_class_of_tensor_power(n: u32) -> ZPiLaurent {
    qint(2).pow(n)
}

/// An even idempotent endomorphism of an envelope object.
#[derive(Debug, Clone)]
pub struct IdempotentPair<M> {
    pub e: PiMorphism<M>,
}

impl<M: Clone + PartialEq + fmt::Debug> IdempotentPair<M> {
    pub fn new<C: Supercategory<Morphism = M>>(env: &Envelope<'_, C>, e: PiMorphism<M>) -> Result<Self> {
        if env.parity(&e).is_odd() {
            return Err(Error::Validation("idempotent must be even".into()));
        }
        if env.compose(&e, &e)? != e {
            return Err(Error::Validation("e ∘ e != e".into()));
        }
        Ok(Self { e })
    }
}

/// `v∘e∘u = f` and `u∘f∘v = e`: `u`, `v` witness that the images of `e`
/// and `f` are isomorphic.
pub fn verify_idempotent_equivalence<C: Supercategory>(
    env: &Envelope<'_, C>,
    e: &IdempotentPair<C::Morphism>,
    f: &IdempotentPair<C::Morphism>,
    u: &PiMorphism<C::Morphism>,
    v: &PiMorphism<C::Morphism>,
) -> Result<bool> {
    let veu = env.compose(v, &env.compose(&e.e, u)?)?;
    let ufv = env.compose(u, &env.compose(&f.e, v)?)?;
    Ok(veu == f.e && ufv == e.e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_elements() {
        assert_eq!(qint_xpi(1).unwrap(), ZPiLaurent::one());
        assert_eq!(qint_xpi(2).unwrap().to_string(), "x + pi*x^-1");
        assert_eq!(qint_xpi(3).unwrap().to_string(), "x^2 + pi + x^-2");
        assert!(qint_xpi(0).is_err());
    }

    #[test]
    fn square_of_two() {
        let two = qint_xpi(2).unwrap();
        let sq = &two * &two;
        assert_eq!(sq.to_string(), "x^2 + 2*pi + x^-2");
        assert_eq!(sq, clebsch_gordan(1, 1));
        assert_eq!(
            decompose_in_basis(&sq).unwrap(),
            vec![Summand { k: 2, pi: 0, mult: 1 }, Summand { k: 0, pi: 1, mult: 1 }]
        );
    }

    #[test]
    fn cube_of_two() {
        let d = decompose_in_basis(&k0_class_of_tensor_power(3)).unwrap();
        assert_eq!(d, vec![Summand { k: 3, pi: 0, mult: 1 }, Summand { k: 1, pi: 1, mult: 2 }]);
        assert!(decompose_in_basis(&ZPiLaurent::zero()).unwrap().is_empty());
    }

    #[test]
    fn not_a_character() {
        assert!(decompose_in_basis(&ZPiLaurent::x()).is_err());
        assert!(decompose_in_basis(&ZPiLaurent::one().scale(-1)).is_err());
    }

    #[test]
    fn pi_squares_to_one() {
        let p = ZPiLaurent::pi();
        let a = qint(4);
        assert_eq!(&(&p * &p) * &a, a);
    }

    #[test]
    fn generating_function() {
        assert!(chebyshev_genfun_check(1));
        assert!(chebyshev_genfun_check(20));
    }
}
