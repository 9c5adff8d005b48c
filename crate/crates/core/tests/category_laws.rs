use oddtl::brauer::OddBrauer;
use oddtl::checks::random_morphism;
use oddtl::diagram::{Generator, Layer, LayerWord, MatchingDiagram, Point};
use oddtl::scalars::RatFunc;
use oddtl::tl::{canonical_word, dyck_sequence, enumerate_basis, from_dyck_sequence, Stl};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn flavour() -> impl Strategy<Value = Stl> {
    prop_oneof![Just(()).prop_map(|_| Stl::odd()), Just(()).prop_map(|_| Stl::classical())]
}

/// Arities `a → b → c → d` of matching parity, each at most 4.
fn chain() -> impl Strategy<Value = [usize; 4]> {
    (0usize..=4, 0usize..=2, 0usize..=2, 0usize..=2).prop_map(|(a, b, c, d)| {
        let up = |x: usize, k: usize| (x % 2) + 2 * k;
        [a, up(a, b), up(a, c), up(a, d)]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn composition_is_associative(stl in flavour(), [a, b, c, d] in chain(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_morphism(&stl, &mut rng, a, b);
        let g = random_morphism(&stl, &mut rng, b, c);
        let f = random_morphism(&stl, &mut rng, c, d);
        let left = stl.compose(&stl.compose(&f, &g).unwrap(), &h).unwrap();
        let right = stl.compose(&f, &stl.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(stl in flavour(), [a, b, _, _] in chain(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_morphism(&stl, &mut rng, a, b);
        prop_assert_eq!(&stl.compose(&stl.identity(b), &f).unwrap(), &f);
        prop_assert_eq!(&stl.compose(&f, &stl.identity(a)).unwrap(), &f);
    }

    #[test]
    fn tensor_is_associative(stl in flavour(), [a, b, _, _] in chain(), [c, d, _, _] in chain(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_morphism(&stl, &mut rng, a, b);
        let g = random_morphism(&stl, &mut rng, c, d);
        let h = random_morphism(&stl, &mut rng, b, a);
        prop_assert_eq!(
            stl.tensor(&stl.tensor(&f, &g), &h),
            stl.tensor(&f, &stl.tensor(&g, &h))
        );
    }

    #[test]
    fn super_interchange(stl in flavour(), [a, b, c, _] in chain(), [x, y, z, _] in chain(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_morphism(&stl, &mut rng, a, b);
        let f = random_morphism(&stl, &mut rng, b, c);
        let k = random_morphism(&stl, &mut rng, x, y);
        let g = random_morphism(&stl, &mut rng, y, z);
        let lhs = stl.compose(&stl.tensor(&f, &g), &stl.tensor(&h, &k)).unwrap();
        let sign = RatFunc::from_int(g.parity().sign_with(h.parity()));
        let rhs = stl.tensor(&stl.compose(&f, &h).unwrap(), &stl.compose(&g, &k).unwrap()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(stl in flavour(), [a, b, _, _] in chain(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_morphism(&stl, &mut rng, a, b);
        let text = stl.to_json(&f);
        let back = stl.from_json(&text).unwrap();
        prop_assert_eq!(stl.to_json(&back), text);
        prop_assert_eq!(back, f);
    }
}

#[test]
fn canonical_words_normalize_to_their_diagram() {
    for stl in [Stl::odd(), Stl::classical()] {
        for m in 0..=5 {
            for n in (m % 2..=5).step_by(2) {
                for d in enumerate_basis(m, n) {
                    let w = canonical_word(&d);
                    assert_eq!(stl.normalize(&w).unwrap(), stl.basis_morphism(&d).unwrap(), "{d}");
                }
            }
        }
    }
}

#[test]
fn dyck_sequences_are_a_bijection() {
    for k in 0..=5 {
        let caps = enumerate_basis(2 * k, 0);
        let mut seen = std::collections::HashSet::new();
        for d in &caps {
            let s = dyck_sequence(d).unwrap();
            assert_eq!(&from_dyck_sequence(&s).unwrap(), d);
            assert!(seen.insert(s));
        }
    }
}

fn brauer_layer() -> impl Strategy<Value = (usize, Generator)> {
    (0usize..4, prop_oneof![Just(Generator::Cap), Just(Generator::Cup), Just(Generator::Cross)])
}

/// A random layered word in the Brauer generators starting at `m` strands,
/// never wider than six.
fn brauer_word_from(m: usize) -> impl Strategy<Value = LayerWord> {
    prop::collection::vec(brauer_layer(), 0..8).prop_map(move |raw| {
        let mut width = m;
        let mut layers = Vec::new();
        for (pos, g) in raw {
            let need = g.local_source();
            if width < need || width - need + g.local_target() > 6 {
                continue;
            }
            let left = pos % (width - need + 1);
            layers.push(Layer::new(left, g, width - need - left));
            width = width - need + g.local_target();
        }
        LayerWord::new(m, layers).unwrap()
    })
}

/// Three words `w1`, `w2`, `w3` with `w1` feeding `w2` feeding `w3`.
fn brauer_chain() -> impl Strategy<Value = [LayerWord; 3]> {
    (0usize..=4)
        .prop_flat_map(brauer_word_from)
        .prop_flat_map(|w1| (Just(w1.clone()), brauer_word_from(w1.target())))
        .prop_flat_map(|(w1, w2)| (Just(w1), Just(w2.clone()), brauer_word_from(w2.target())))
        .prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn brauer_composition_is_associative([w1, w2, w3] in brauer_chain()) {
        let sb = OddBrauer::new();
        let (h, g, f) = (sb.normalize(&w1), sb.normalize(&w2), sb.normalize(&w3));
        let left = sb.compose(&sb.compose(&f, &g).unwrap(), &h).unwrap();
        let right = sb.compose(&f, &sb.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn brauer_words_compose_like_their_normal_forms([w1, w2, _] in brauer_chain()) {
        let sb = OddBrauer::new();
        let whole = sb.normalize(&w1.then(&w2).unwrap());
        let parts = sb.compose(&sb.normalize(&w2), &sb.normalize(&w1)).unwrap();
        prop_assert_eq!(whole, parts);
    }
}

fn permutation(perm: &[usize]) -> MatchingDiagram {
    let pairs: Vec<(Point, Point)> = perm.iter().enumerate().map(|(i, &j)| (Point::Bottom(i), Point::Top(j))).collect();
    MatchingDiagram::from_pairs(perm.len(), perm.len(), &pairs).unwrap()
}

/// Crossings are even and satisfy the symmetric group relations, so every
/// word in them is `+1` times the permutation diagram it traces out.
#[test]
fn crossing_words_on_three_strands_are_permutations() {
    let sb = OddBrauer::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let len = rand::Rng::gen_range(&mut rng, 0..10);
        let mut perm = vec![0, 1, 2];
        let mut layers = Vec::new();
        for _ in 0..len {
            let i = rand::Rng::gen_range(&mut rng, 0..2);
            layers.push(Layer::new(i, Generator::Cross, 1 - i));
            // track where each bottom point ends up
            for p in perm.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        let f = sb.normalize(&LayerWord::new(3, layers).unwrap());
        assert_eq!(f, sb.basis_morphism(&permutation(&perm)));
    }
}
