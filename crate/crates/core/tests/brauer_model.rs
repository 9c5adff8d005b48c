//! Odd Brauer signs checked against the periplectic superspace `k^{N|N}`:
//! `e_i` even, `f_i` odd, `β(e_i, f_j) = δ_ij = −β(f_j, e_i)`,
//! `cup = Σ e_i ⊗ f_i + f_i ⊗ e_i`, crossing = super swap.

use std::collections::HashMap;

use oddtl::brauer::{brauer_canonical_word, enumerate_brauer, OddBrauer};
use oddtl::diagram::{Generator, Layer, LayerWord};
use proptest::prelude::*;

const N: u8 = 2;

fn odd(x: u8) -> bool {
    x >= N
}

fn beta(u: u8, v: u8) -> i64 {
    match (odd(u), odd(v)) {
        (false, true) if v - N == u => 1,
        (true, false) if u - N == v => -1,
        _ => 0,
    }
}

type Vector = HashMap<Vec<u8>, i64>;

fn apply_layer(v: &Vector, l: &Layer) -> Vector {
    let mut out = Vector::new();
    let mut push = |k: Vec<u8>, c: i64| {
        *out.entry(k).or_insert(0) += c;
    };
    for (k, &c) in v {
        let i = l.left;
        let left_odd = k[..i].iter().filter(|&&x| odd(x)).count() % 2 == 1;
        let koszul = if left_odd { -c } else { c };
        match l.generator {
            Generator::Cross => {
                let mut k2 = k.clone();
                k2.swap(i, i + 1);
                push(k2, if odd(k[i]) && odd(k[i + 1]) { -c } else { c });
            }
            Generator::Cap => {
                let b = beta(k[i], k[i + 1]);
                if b != 0 {
                    let mut k2 = k.clone();
                    k2.drain(i..i + 2);
                    push(k2, koszul * b);
                }
            }
            Generator::Cup => {
                for j in 0..N {
                    for pair in [[j, j + N], [j + N, j]] {
                        let mut k2 = k.clone();
                        k2.splice(i..i, pair);
                        push(k2, koszul);
                    }
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn inputs(m: usize) -> Vec<Vec<u8>> {
    let mut all = vec![vec![]];
    for _ in 0..m {
        all = all.into_iter().flat_map(|k| (0..2 * N).map(move |x| [k.clone(), vec![x]].concat())).collect();
    }
    all
}

/// The model image of a word, column by column.
fn model(w: &LayerWord) -> Vec<Vector> {
    inputs(w.source())
        .into_iter()
        .map(|k| w.layers().iter().fold(Vector::from([(k, 1)]), |v, l| apply_layer(&v, l)))
        .collect()
}

fn model_of_normal_form(sb: &OddBrauer, w: &LayerWord) -> Vec<Vector> {
    let f = sb.normalize(w);
    let mut cols = vec![Vector::new(); inputs(w.source()).len()];
    for (d, c) in f.terms() {
        let c = c.to_string().parse::<i64>().unwrap();
        for (col, img) in cols.iter_mut().zip(model(&brauer_canonical_word(d))) {
            for (k, v) in img {
                *col.entry(k).or_insert(0) += c * v;
            }
        }
    }
    for col in &mut cols {
        col.retain(|_, c| *c != 0);
    }
    cols
}

fn word_strategy() -> impl Strategy<Value = LayerWord> {
    (0usize..=4, prop::collection::vec((0u8..3, 0usize..8), 0..10)).prop_map(|(m, steps)| {
        let mut width = m;
        let mut layers = Vec::new();
        for (g, pos) in steps {
            let g = match g {
                0 if width >= 2 => Generator::Cap,
                2 if width >= 2 => Generator::Cross,
                _ if width <= 4 => Generator::Cup,
                _ => Generator::Cap,
            };
            let l = Layer::new(0, g, 0);
            let slack = width - l.source();
            let left = pos % (slack + 1);
            layers.push(Layer::new(left, g, slack - left));
            width = width - l.source() + l.target();
        }
        LayerWord::new(m, layers).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_words_match_the_model(w in word_strategy()) {
        let sb = OddBrauer::new();
        prop_assert_eq!(model(&w), model_of_normal_form(&sb, &w));
    }
}

#[test]
fn compositions_of_basis_pairs_match_the_model() {
    let sb = OddBrauer::new();
    for (a, b, c) in [(2, 2, 2), (3, 1, 3), (1, 3, 1), (2, 4, 2), (4, 2, 0), (0, 2, 4)] {
        for x in enumerate_brauer(a, b) {
            for y in enumerate_brauer(b, c) {
                let w = brauer_canonical_word(&x).then(&brauer_canonical_word(&y)).unwrap();
                assert_eq!(model(&w), model_of_normal_form(&sb, &w), "{x:?} then {y:?}");
            }
        }
    }
}

#[test]
fn generator_images() {
    let cap = LayerWord::new(2, vec![Layer::new(0, Generator::Cap, 0)]).unwrap();
    let m = model(&cap);
    // e_1 ⊗ f_1 ↦ 1 and f_1 ⊗ e_1 ↦ −1
    assert_eq!(m[2].get(&vec![]), Some(&1));
    assert_eq!(m[2 * 4].get(&vec![]), Some(&-1));
}
