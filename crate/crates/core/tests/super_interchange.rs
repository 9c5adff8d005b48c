use oddtl::scalars::Rational;
use oddtl::superlinalg::{tensor_map, tensor_space, Matrix, Parity, SuperMap, SuperSpace};
use proptest::prelude::*;

fn space(tag: &'static str) -> impl Strategy<Value = SuperSpace> {
    prop::collection::vec(any::<bool>(), 1..4).prop_map(move |ps| {
        SuperSpace::new(
            ps.iter().enumerate().map(|(i, &odd)| (format!("{tag}{i}"), if odd { Parity::Odd } else { Parity::Even })).collect(),
        )
        .unwrap()
    })
}

/// A homogeneous map of random parity with small integer entries.
fn map_between(source: SuperSpace, target: SuperSpace) -> impl Strategy<Value = SuperMap<Rational>> {
    let cells = source.dim() * target.dim();
    (any::<bool>(), prop::collection::vec(-3i64..=3, cells)).prop_map(move |(odd, xs)| {
        let p = if odd { Parity::Odd } else { Parity::Even };
        let mut m = Matrix::zeros(target.dim(), source.dim());
        for i in 0..target.dim() {
            for j in 0..source.dim() {
                if target.parity(i) == source.parity(j) + p {
                    m.set(i, j, Rational::from_integer(xs[i * source.dim() + j].into()));
                }
            }
        }
        SuperMap::homogeneous(source.clone(), target.clone(), p, m).unwrap()
    })
}

/// `h : A → B`, `f : B → C`, `k : D → E`, `g : E → F`.
fn quadruple() -> impl Strategy<Value = [SuperMap<Rational>; 4]> {
    (space("a"), space("b"), space("c"), space("d"), space("e"), space("f")).prop_flat_map(|(a, b, c, d, e, f)| {
        (map_between(b.clone(), c), map_between(e.clone(), f), map_between(a, b), map_between(d, e))
            .prop_map(|(f, g, h, k)| [f, g, h, k])
    })
}

fn parity(f: &SuperMap<Rational>) -> Parity {
    f.parity().unwrap_or(Parity::Even)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn interchange_law([f, g, h, k] in quadruple()) {
        let lhs = tensor_map(&f, &g).compose(&tensor_map(&h, &k)).unwrap();
        let sign = Rational::from_integer(parity(&g).sign_with(parity(&h)).into());
        let rhs = tensor_map(&f.compose(&h).unwrap(), &g.compose(&k).unwrap()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_is_associative([f, g, h, _k] in quadruple()) {
        let left = tensor_map(&tensor_map(&f, &g), &h);
        let right = tensor_map(&f, &tensor_map(&g, &h));
        prop_assert_eq!(left.matrix(), right.matrix());
    }

    #[test]
    fn identities_and_parities(v in space("v"), w in space("w")) {
        let id = tensor_map(&SuperMap::<Rational>::identity(&v), &SuperMap::identity(&w));
        prop_assert_eq!(id, SuperMap::identity(&tensor_space(&v, &w)));
        let vw = tensor_space(&v, &w);
        prop_assert_eq!(vw.dim(), v.dim() * w.dim());
        prop_assert_eq!(vw.even_dim(), v.even_dim() * w.even_dim() + v.odd_dim() * w.odd_dim());
    }
}

#[test]
fn tensor_square_parities() {
    let v = SuperSpace::new(vec![("v1".into(), Parity::Even), ("v-1".into(), Parity::Odd)]).unwrap();
    let vv = tensor_space(&v, &v);
    assert_eq!(vv.parities(), &[Parity::Even, Parity::Odd, Parity::Odd, Parity::Even]);
}
