use oddtl::brauer::OddBrauer;
use oddtl::expr::{elaborate_brauer, elaborate_stl, parse, parse_typed, Expr};
use oddtl::jones_wenzl::JonesWenzl;
use oddtl::scalars::{LaurentPoly, RatFunc, Rational};
use oddtl::tl::Stl;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i64..=2, 1i64..=3, any::<bool>()).prop_map(|(c, e, d, over)| {
        let num = LaurentPoly::monomial(Rational::new(c.into(), d.into()), e);
        if over {
            RatFunc::new(num, LaurentPoly::parse("q + 1").unwrap()).unwrap()
        } else {
            RatFunc::from_poly(num)
        }
    })
}

fn stl_atom() -> impl Strategy<Value = Expr> {
    prop_oneof![
        Just(Expr::Cap),
        Just(Expr::Cup),
        (1usize..=3).prop_map(Expr::Id),
        (0usize..=3).prop_map(Expr::Jw),
        (2usize..=3).prop_map(Expr::Gn),
        (2usize..=3).prop_map(Expr::Un),
        (2usize..=3).prop_map(Expr::Vn),
    ]
}

fn brauer_atom() -> impl Strategy<Value = Expr> {
    prop_oneof![Just(Expr::Cap), Just(Expr::Cup), Just(Expr::Cross), (1usize..=3).prop_map(Expr::Id)]
}

fn grow(atom: BoxedStrategy<Expr>) -> impl Strategy<Value = Expr> {
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::compose(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::tensor(a, b)),
            (scalar(), inner).prop_map(|(c, a)| Expr::scaled(c, a)),
        ]
    })
}

/// Pads the narrower side of every composition with identity strands so the
/// expression is well typed.
fn fix(e: Expr) -> Expr {
    match e {
        Expr::Compose(a, b) => {
            let (a, b) = (fix(*a), fix(*b));
            let (am, _) = a.arity().unwrap();
            let (_, bn) = b.arity().unwrap();
            if am < bn {
                Expr::compose(Expr::tensor(a, Expr::Id(bn - am)), b)
            } else if bn < am {
                Expr::compose(a, Expr::tensor(b, Expr::Id(am - bn)))
            } else {
                Expr::compose(a, b)
            }
        }
        Expr::Tensor(a, b) => Expr::tensor(fix(*a), fix(*b)),
        Expr::Scaled(c, a) => Expr::scaled(c, fix(*a)),
        atom => atom,
    }
}

fn small(e: &Expr) -> bool {
    e.arity().map(|(m, n)| m <= 7 && n <= 7).unwrap_or(false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn stl_expressions_print_and_parse_back(e in grow(stl_atom().boxed()).prop_map(fix).prop_filter("small", small)) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e, "{}", text);
        let (_, m, n) = parse_typed(&text).unwrap();
        prop_assert_eq!((m, n), e.arity().unwrap());
        let jw = JonesWenzl::new(Stl::odd());
        let f = elaborate_stl(&e, &jw).unwrap();
        prop_assert_eq!((f.source(), f.target()), (m, n));
    }

    #[test]
    fn brauer_expressions_print_and_parse_back(e in grow(brauer_atom().boxed()).prop_map(fix).prop_filter("small", small)) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e.clone(), "{}", text);
        let f = elaborate_brauer(&e, &OddBrauer::new()).unwrap();
        prop_assert_eq!((f.source(), f.target()), e.arity().unwrap());
    }
}

#[test]
fn spec_style_examples() {
    let jw = JonesWenzl::new(Stl::odd());
    let bubble = elaborate_stl(&parse("cap * cup").unwrap(), &jw).unwrap();
    assert_eq!(bubble.to_string(), "(-q + q^-1) · [empty]");
    let classical = JonesWenzl::new(Stl::classical());
    let bubble = elaborate_stl(&parse("cap * cup").unwrap(), &classical).unwrap();
    assert_eq!(bubble.to_string(), "(-q - q^-1) · [empty]");
    let sb = OddBrauer::new();
    assert!(elaborate_brauer(&parse("cap * cup").unwrap(), &sb).unwrap().is_zero());
    assert!(parse("cap * cap").unwrap().arity().is_err());
}
