//! Fast exact reduction for fractions whose denominator is a product of
//! cyclotomic polynomials, which covers everything built from quantum
//! integers. Cyclotomic polynomials are irreducible over `Q`, so cancelling
//! each of them as often as it divides yields lowest terms.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use super::{LaurentPoly, RatFunc, Rational};

const MAX_ORDER: usize = 128;

fn table() -> &'static Vec<Vec<i128>> {
    static T: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut t: Vec<Vec<i128>> = vec![Vec::new()];
        for k in 1..=MAX_ORDER {
            // q^k - 1 divided by Φ_d for every proper divisor d
            let mut p = vec![0i128; k + 1];
            p[0] = -1;
            p[k] = 1;
            for (d, phi) in t.iter().enumerate().skip(1) {
                if k % d == 0 {
                    p = divide(&p, phi).expect("cyclotomic divides");
                }
            }
            t.push(p);
        }
        t
    })
}

/// Exact division by a monic polynomial (ascending coefficients).
fn divide(p: &[i128], m: &[i128]) -> Option<Vec<i128>> {
    let dm = m.len() - 1;
    if p.len() <= dm {
        return if p.iter().all(|x| *x == 0) { Some(Vec::new()) } else { None };
    }
    let mut r = p.to_vec();
    let mut q = vec![0i128; p.len() - dm];
    for i in (0..q.len()).rev() {
        let c = r[i + dm];
        if c == 0 {
            continue;
        }
        q[i] = c;
        for (j, &mj) in m.iter().enumerate() {
            r[i + j] = r[i + j].checked_sub(c.checked_mul(mj)?)?;
        }
    }
    r[..dm].iter().all(|x| *x == 0).then_some(q)
}

fn multiply(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

/// A denominator `c · q^s · Π Φ_k(q)`.
#[derive(Clone, Debug)]
pub(crate) struct FactoredDen {
    content: Rational,
    shift: i64,
    factors: Vec<usize>,
}

impl FactoredDen {
    pub(crate) fn new(den: &LaurentPoly) -> Option<Self> {
        let prim: Vec<i128> = den.primitive_int().iter().map(|c| c.to_i128()).collect::<Option<_>>()?;
        let content = den.highest_coeff()? / Rational::from_integer((*prim.last()?).into());
        let shift = den.low_degree()?;
        let t = table();
        let mut rest = prim;
        let mut factors = Vec::new();
        for (k, phi) in t.iter().enumerate().skip(1) {
            while rest.len() >= phi.len() {
                match divide(&rest, phi) {
                    Some(q) => {
                        rest = q;
                        factors.push(k);
                    }
                    None => break,
                }
            }
            if rest.len() == 1 {
                break;
            }
        }
        (rest == [1]).then_some(Self { content, shift, factors })
    }

    /// `q^low · Σ num[i] q^i` over this denominator, in lowest terms.
    pub(crate) fn reduce(&self, low: i64, num: &[i128]) -> Option<RatFunc> {
        let Some(first) = num.iter().position(|x| *x != 0) else {
            return Some(RatFunc::zero());
        };
        let last = num.iter().rposition(|x| *x != 0).unwrap();
        let low = low + first as i64;
        let t = table();
        let mut n = num[first..=last].to_vec();
        let mut den = vec![1i128];
        for &k in &self.factors {
            match divide(&n, &t[k]) {
                Some(q) => n = q,
                None => den = multiply(&den, &t[k])?,
            }
        }
        let num = LaurentPoly::from_dense(
            low - self.shift,
            n.into_iter().map(|x| Rational::from_integer(x.into()) / &self.content).collect(),
        );
        let den = LaurentPoly::from_dense(0, den.into_iter().map(|x| Rational::from_integer(x.into())).collect());
        if num.is_zero() {
            return Some(RatFunc::zero());
        }
        Some(RatFunc::rescale(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        let t = table();
        assert_eq!(t[1], vec![-1, 1]);
        assert_eq!(t[4], vec![1, 0, 1]);
        assert_eq!(t[6], vec![1, -1, 1]);
        assert_eq!(t[12], vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn agrees_with_gcd_reduction() {
        let a = LaurentPoly::parse("q^4 - q^-2").unwrap();
        let b = LaurentPoly::parse("q^2 + 1").unwrap();
        let den = &(&a * &b) * &b;
        let f = FactoredDen::new(&den.scale(&Rational::new(3.into(), 2.into()))).unwrap();
        let nums: [&[i128]; 3] = [&[1, 0, 1], &[-1, 0, 0, 0, 0, 0, 1], &[2, 5, 7]];
        for n in nums {
            let p = LaurentPoly::from_dense(-3, n.iter().map(|x| Rational::from_integer((*x).into())).collect());
            let expect = RatFunc::new(p, den.scale(&Rational::new(3.into(), 2.into()))).unwrap();
            assert_eq!(f.reduce(-3, n).unwrap(), expect);
        }
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_gcd_reduction(
            orders in prop::collection::vec(1usize..=24, 0..6),
            num in prop::collection::vec(-4i128..=4, 1..12),
            low in -4i64..=4,
            shift in -3i64..=3,
            scale in 1i64..=5,
        ) {
            let t = table();
            let mut den = vec![1i128];
            for &k in &orders {
                den = multiply(&den, &t[k]).unwrap();
            }
            let to_poly = |low: i64, xs: &[i128]| {
                LaurentPoly::from_dense(low, xs.iter().map(|x| Rational::from_integer((*x).into())).collect())
            };
            let den = to_poly(shift, &den).scale(&Rational::new(scale.into(), 3.into()));
            let f = FactoredDen::new(&den).unwrap();
            let expect = RatFunc::new(to_poly(low, &num), den).unwrap();
            prop_assert_eq!(f.reduce(low, &num).unwrap(), expect);
        }
    }
}
