use oddtl::scalars::{quantum_int, Epsilon, LaurentPoly, RatFunc, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

fn epsilon() -> impl Strategy<Value = Epsilon> {
    prop_oneof![Just(Epsilon::Odd), Just(Epsilon::Classical)]
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        // the common factor survives
        prop_assert!(g.div_exact(&c).is_some());
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfunc_is_canonical(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = RatFunc::new(a.clone(), b.clone()).unwrap();
        let y = RatFunc::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(x.to_string().parse::<RatFunc>().unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in ratfunc(), y in ratfunc()) {
        let q = Rational::from_integer(3.into());
        if let (Ok(a), Ok(b)) = (x.evaluate(&q), y.evaluate(&q)) {
            prop_assert_eq!((&x + &y).evaluate(&q).unwrap(), &a + &b);
            prop_assert_eq!((&x * &y).evaluate(&q).unwrap(), a * b);
        }
    }

    #[test]
    fn quantum_integer_recursion(n in 1i64..12, eps in epsilon()) {
        // [2][n] = [n+1] + ε[n−1]
        let lhs = &quantum_int(2, eps) * &quantum_int(n, eps);
        let rhs = &quantum_int(n + 1, eps) + &quantum_int(n - 1, eps).scale(&Rational::from_integer(eps.value().into()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_integers_are_bar_invariant_up_to_sign(n in 0i64..12, eps in epsilon()) {
        let p = quantum_int(n, eps);
        let sign = Rational::from_integer(eps.pow(n - 1).into());
        prop_assert_eq!(p.bar(), p.scale(&sign));
    }
}
