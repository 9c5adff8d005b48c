//! Property suites behind `oddtl verify` and `oddtl envelope-check`.
//!
//! Each suite returns a [`Check`]: a name, a verdict and a one-line detail.
//! Nothing here is approximate; every comparison is equality of normal forms
//! or of exact matrices.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brauer::{OddBrauer, RelationCheck};
use crate::diagram::MatchingDiagram;
use crate::envelope::{round_trip_check, Envelope, PiMorphism, XiConvention};
use crate::error::Result;
use crate::jones_wenzl::JonesWenzl;
use crate::k0::{
    chebyshev_genfun_check, clebsch_gordan, decompose_in_basis, k0_class_of_tensor_power, qint_xpi,
    verify_idempotent_equivalence, IdempotentPair,
};
use crate::osp::{
    decompose_tensor_power, equivariance_check, theta_triangularity, GFunctor, OspModule,
};
use crate::scalars::{qint_ratio, Epsilon, RatFunc, Rational, Specialization};
use crate::superlinalg::{tensor_map, Parity, SuperMap};
use crate::tl::{catalan, enumerate_basis, Stl, TLMorphism};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl Check {
    fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Self {
        let t = Instant::now();
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        Self { name: name.into(), passed, detail, millis: t.elapsed().as_millis() }
    }
}

fn failures(list: &[RelationCheck]) -> String {
    let bad: Vec<&str> = list.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if bad.is_empty() {
        format!("{} identities hold", list.len())
    } else {
        format!("failed: {}", bad.join(", "))
    }
}

/// `|basis(m, n)| = Catalan((m+n)/2)` for all even `m + n ≤ max_total`.
pub fn hom_dimensions(max_total: usize) -> Check {
    Check::timed("hom-space dimensions", || {
        let mut spaces = 0;
        for total in (0..=max_total).step_by(2) {
            for m in 0..=total {
                if enumerate_basis(m, total - m).len() as u128 != catalan(total / 2) {
                    return Ok((false, format!("Hom({m},{}) has the wrong size", total - m)));
                }
                spaces += 1;
            }
        }
        let d33 = enumerate_basis(3, 3).len();
        Ok((d33 == 5, format!("{spaces} hom-spaces, dim Hom(3,3) = {d33}")))
    })
}

/// Right zigzag `= 1`, left zigzag `= ε`, bubble `= δ`.
pub fn stl_relations(stl: &Stl) -> Vec<RelationCheck> {
    let (cap, cup, i1) = (stl.cap(), stl.cup(), stl.identity(1));
    let c = |f: &TLMorphism, g: &TLMorphism| stl.compose(f, g).expect("arities");
    let right = c(&stl.tensor(&cap, &i1), &stl.tensor(&i1, &cup));
    let left = c(&stl.tensor(&i1, &cap), &stl.tensor(&cup, &i1));
    let eps = RatFunc::from_int(stl.epsilon().value());
    vec![
        RelationCheck::new("right zigzag = id", right == i1),
        RelationCheck::new("left zigzag = eps id", left == i1.scale(&eps)),
        RelationCheck::new("bubble = delta", c(&cap, &cup) == stl.identity(0).scale(stl.delta())),
    ]
}

pub fn relation_suite(stl: &Stl, sb: &OddBrauer) -> Check {
    Check::timed("relations", || {
        let a = stl_relations(stl);
        let b = sb.relation_suite();
        let ok = a.iter().chain(&b).all(|r| r.passed);
        Ok((ok, format!("STL: {}; SB: {}", failures(&a), failures(&b))))
    })
}

fn random_coeff(rng: &mut ChaCha8Rng) -> RatFunc {
    let c = RatFunc::from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
    match rng.gen_range(0..4) {
        0 => &c * &RatFunc::q(),
        1 => c.div(&RatFunc::q()).expect("q is invertible"),
        2 => c.div(&RatFunc::from_int(2)).expect("2 is invertible"),
        _ => c,
    }
}

/// A random homogeneous combination of at most three basis diagrams.
pub fn random_morphism(stl: &Stl, rng: &mut ChaCha8Rng, m: usize, n: usize) -> TLMorphism {
    let basis = enumerate_basis(m, n);
    let k = rng.gen_range(1..=3.min(basis.len()));
    let mut terms = Vec::new();
    for _ in 0..k {
        terms.push((basis[rng.gen_range(0..basis.len())].clone(), random_coeff(rng)));
    }
    stl.from_terms(m, n, terms).expect("planar basis diagrams")
}

/// Three objects `≤ max` of equal parity.
fn random_chain(rng: &mut ChaCha8Rng, max: usize) -> [usize; 3] {
    let p = rng.gen_range(0..2);
    let mut pick = || {
        let v = rng.gen_range(0..=max);
        if v % 2 == p {
            v
        } else if v == 0 {
            1
        } else {
            v - 1
        }
    };
    [pick(), pick(), pick()]
}

fn sign_rf(odd: bool) -> RatFunc {
    RatFunc::from_int(if odd { -1 } else { 1 })
}

/// `(f⊗g)∘(h⊗k) = (−1)^{|g||h|} (f∘h)⊗(g∘k)` on random homogeneous morphisms.
pub fn super_interchange_stl(stl: &Stl, samples: usize, seed: u64, max: usize) -> Check {
    Check::timed("super interchange (STL)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = 0;
        for _ in 0..samples {
            let [a, b, c] = random_chain(&mut rng, max);
            let [a2, b2, c2] = random_chain(&mut rng, max);
            let h = random_morphism(stl, &mut rng, a, b);
            let f = random_morphism(stl, &mut rng, b, c);
            let k = random_morphism(stl, &mut rng, a2, b2);
            let g = random_morphism(stl, &mut rng, b2, c2);
            let lhs = stl.compose(&stl.tensor(&f, &g), &stl.tensor(&h, &k))?;
            let s = sign_rf(g.parity().is_odd() && h.parity().is_odd());
            let rhs = stl.tensor(&stl.compose(&f, &h)?, &stl.compose(&g, &k)?).scale(&s);
            if lhs != rhs {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{samples} samples, {bad} failures")))
    })
}

/// The same law inside the Π-envelope, with random parity shifts.
pub fn super_interchange_envelope(stl: &Stl, samples: usize, seed: u64, max: usize) -> Check {
    Check::timed("super interchange (envelope)", || {
        let env = Envelope::new(stl);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shift = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
        let mut bad = 0;
        for _ in 0..samples {
            let [a, b, c] = random_chain(&mut rng, max);
            let [a2, b2, c2] = random_chain(&mut rng, max);
            let s: Vec<Parity> = (0..6).map(|_| shift(&mut rng)).collect();
            let h = PiMorphism::new(random_morphism(stl, &mut rng, a, b), s[0], s[1]);
            let f = PiMorphism::new(random_morphism(stl, &mut rng, b, c), s[1], s[2]);
            let k = PiMorphism::new(random_morphism(stl, &mut rng, a2, b2), s[3], s[4]);
            let g = PiMorphism::new(random_morphism(stl, &mut rng, b2, c2), s[4], s[5]);
            let lhs = env.compose(&env.tensor(&f, &g)?, &env.tensor(&h, &k)?)?;
            let rhs = env.tensor(&env.compose(&f, &h)?, &env.compose(&g, &k)?)?;
            let rhs = if env.parity(&g).is_odd() && env.parity(&h).is_odd() { env.neg(&rhs) } else { rhs };
            if lhs != rhs {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{samples} samples with random shifts, {bad} failures")))
    })
}

/// Every Jones-Wenzl contract for `n ≤ max_n`.
pub fn jones_wenzl_suite(jw: &JonesWenzl, max_n: usize) -> Check {
    Check::timed("Jones-Wenzl projectors", || {
        let s = jw.stl();
        let eps = s.epsilon();
        let mut bad: Vec<String> = Vec::new();
        for n in 0..=max_n {
            let f = jw.jw(n)?;
            if s.compose(&f, &f)? != f {
                bad.push(format!("f_{n} idempotent"));
            }
            for i in 0..n.saturating_sub(1) {
                if !jw.cap_annihilates(n, i)? || !jw.cup_annihilates(n, i)? {
                    bad.push(format!("f_{n} annihilation at {i}"));
                }
            }
            if n >= 1 {
                let expect = jw.jw(n - 1)?.scale(&-qint_ratio(n as i64 + 1, n as i64, eps)?);
                if jw.partial_closure(&f)? != expect {
                    bad.push(format!("partial closure of f_{n}"));
                }
            }
            if n >= 2 {
                let g = jw.gn(n)?;
                let lift = s.tensor(&jw.jw(n - 1)?, &s.identity(1));
                if lift != f.add(&g)? {
                    bad.push(format!("f_{} ⊗ 1 = f_{n} + g_{n}", n - 1));
                }
                if s.compose(&g, &g)? != g || !s.compose(&g, &f)?.is_zero() || !s.compose(&f, &g)?.is_zero() {
                    bad.push(format!("g_{n} idempotent and orthogonal"));
                }
                let (u, v) = (jw.un(n)?, jw.vn(n)?);
                if s.compose(&u, &v)? != g || s.compose(&v, &u)? != jw.jw(n - 2)? {
                    bad.push(format!("u_{n}, v_{n} witnesses"));
                }
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { format!("n <= {max_n}") } else { bad.join("; ") }))
    })
}

fn q_two() -> Specialization {
    Specialization::new(Rational::from_integer(2.into())).expect("2 is not a root of unity")
}

/// `G` against composition and tensor product on basis pairs, full rank of
/// the images and `θ` triangularity.
pub fn representation_suite(stl: &Stl, max_arity: usize, max_rank_total: usize, theta_m: usize) -> Check {
    Check::timed("representation oracle", || {
        let g = GFunctor::symbolic(stl);
        let mut pairs = 0;
        let mut bad = 0;
        let basis_of = |m, n| -> Vec<TLMorphism> {
            enumerate_basis(m, n).iter().map(|d| stl.basis_morphism(d).expect("planar")).collect()
        };
        // basis morphisms have exactly one term, which keys the cache
        let mut images: HashMap<MatchingDiagram, SuperMap<RatFunc>> = HashMap::new();
        let mut image = |d: &TLMorphism| -> Result<SuperMap<RatFunc>> {
            let key = d.terms().next().map(|(x, _)| x.clone()).expect("a basis morphism");
            if let Some(v) = images.get(&key) {
                return Ok(v.clone());
            }
            let v = g.image(d)?;
            images.insert(key, v.clone());
            Ok(v)
        };
        for a in 0..=max_arity {
            for b in (a % 2..=max_arity).step_by(2) {
                for c in (a % 2..=max_arity).step_by(2) {
                    for x in basis_of(a, b) {
                        let gx = image(&x)?;
                        for y in basis_of(b, c) {
                            pairs += 1;
                            let gy = image(&y)?;
                            if g.image(&stl.compose(&y, &x)?)? != gy.compose(&gx)? {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
        let mut tensor_pairs = 0;
        for (a, b) in arity_pairs(max_arity) {
            for (c, d) in arity_pairs(max_arity) {
                for x in basis_of(a, b) {
                    let gx = image(&x)?;
                    for y in basis_of(c, d) {
                        tensor_pairs += 1;
                        if g.image(&stl.tensor(&x, &y))? != tensor_map(&gx, &image(&y)?) {
                            bad += 1;
                        }
                    }
                }
            }
        }
        let g2 = GFunctor::specialized(stl, &q_two());
        let mut rank_bad = 0;
        let mut spaces = 0;
        for total in (0..=max_rank_total).step_by(2) {
            for m in 0..=total {
                spaces += 1;
                let (r, d) = g2.hom_rank(m, total - m)?;
                if r != d {
                    rank_bad += 1;
                }
            }
        }
        let theta = theta_triangularity(&g, theta_m)?;
        Ok((
            bad == 0 && rank_bad == 0 && theta.passed(),
            format!(
                "{pairs} compose pairs, {tensor_pairs} tensor pairs, {bad} failures; {spaces} hom-spaces of full rank \
                 (except {rank_bad}); theta at m = {theta_m}: {} diagonal units, {} violations",
                theta.size, theta.violations
            ),
        ))
    })
}

fn arity_pairs(max: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..=max {
        for b in (a % 2..=max).step_by(2) {
            v.push((a, b));
        }
    }
    v
}

/// `EF − εFE = [wt]` on `V(m)` and `V^{⊗k}`, and equivariance of `G(cup)`, `G(cap)`.
pub fn osp_suite(stl: &Stl, max_m: usize, max_k: usize) -> Check {
    let eps = stl.epsilon();
    let name = if eps == Epsilon::Odd { "U_q(osp(1|2)) action" } else { "U_q(sl2) action" };
    Check::timed(name, || {
        let mut bad: Vec<String> = Vec::new();
        for m in 0..=max_m {
            if !OspModule::irreducible(m, eps).check_defining_relation()? {
                bad.push(format!("V({m})"));
            }
        }
        for k in 0..=max_k {
            if !OspModule::tensor_power(k, eps).check_defining_relation()? {
                bad.push(format!("V^{k}"));
            }
        }
        for e in equivariance_check(stl)? {
            if !e.commutes {
                bad.push(format!("G({}) not equivariant", e.map));
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { format!("V(m), m <= {max_m}; V^k, k <= {max_k}") } else { bad.join(", ") }))
    })
}

/// Clebsch-Gordan, the generating function, characters of `V(n)` and the
/// decomposition of `V^{⊗n}`.
pub fn k0_suite(max_cg: i64, genfun_order: usize, max_char: usize, max_power: usize) -> Check {
    Check::timed("Grothendieck ring", || {
        let mut bad: Vec<String> = Vec::new();
        for m in 0..=max_cg {
            for n in 0..=max_cg {
                if &qint_xpi(m + 1)? * &qint_xpi(n + 1)? != clebsch_gordan(m, n) {
                    bad.push(format!("[{}][{}]", m + 1, n + 1));
                }
            }
        }
        if !chebyshev_genfun_check(genfun_order) {
            bad.push("generating function".into());
        }
        for n in 0..=max_char {
            if OspModule::irreducible(n, Epsilon::Odd).supercharacter() != qint_xpi(n as i64 + 1)? {
                bad.push(format!("SCh V({n})"));
            }
        }
        for n in 0..=max_power {
            let ring = decompose_in_basis(&k0_class_of_tensor_power(n as u32))?;
            let rep = decompose_tensor_power(n)?;
            if ring != rep.summands || rep.total_dimension() != 1 << n {
                bad.push(format!("V^{n}"));
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { "all identities hold".into() } else { bad.join(", ") }))
    })
}

/// `(g_n)^0_0 ≅ (f_{n−2})^1_1` in the envelope via `u_n`, `v_n` (no shift in
/// the classical theory).
pub fn idempotent_equivalences(jw: &JonesWenzl, min_n: usize, max_n: usize) -> Check {
    Check::timed("idempotent equivalences", || {
        let env = Envelope::new(jw.stl());
        let e0 = Parity::Even;
        let mut bad = Vec::new();
        for n in min_n..=max_n {
            // shift f_{n−2} by the parity of u_n so that u_n, v_n become even
            let s = jw.stl().hom_parity(n - 2, n);
            let e = IdempotentPair::new(&env, PiMorphism::new(jw.gn(n)?, e0, e0))?;
            let f = IdempotentPair::new(&env, PiMorphism::new(jw.jw(n - 2)?, s, s))?;
            let u = PiMorphism::new(jw.un(n)?, s, e0);
            let v = PiMorphism::new(jw.vn(n)?, e0, s);
            if env.parity(&u).is_odd() || env.parity(&v).is_odd() || !verify_idempotent_equivalence(&env, &e, &f, &u, &v)? {
                bad.push(n.to_string());
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { format!("{min_n} <= n <= {max_n}") } else { format!("failed for n = {}", bad.join(", ")) }))
    })
}

/// The Π-category round trip on objects `≤ bound`.
pub fn envelope_round_trip(stl: &Stl, bound: usize) -> Check {
    Check::timed("envelope round trip", || {
        let env = Envelope::new(stl);
        let r = round_trip_check(&env, bound, XiConvention::ZetaZetaPi)?;
        Ok((
            r.passed(),
            format!(
                "{} composable pairs, {} functoriality failures, {} ξ mismatches, bijective: {}",
                r.pairs_checked, r.functoriality_failures, r.xi_mismatches, r.bijective
            ),
        ))
    })
}

/// `ξ = −id`, `ξΠ = Πξ` and naturality of `ξ` in the underlying Π-category.
pub fn envelope_xi(stl: &Stl, bound: usize) -> Check {
    Check::timed("envelope ξ", || {
        let env = Envelope::new(stl);
        let p = crate::envelope::underlying_pi_category(&env, bound);
        for x in p.objects() {
            if env.xi(x)? != env.neg(&env.identity(x)) {
                return Ok((false, format!("ξ at {x} is not −1")));
            }
        }
        p.check_xi_commutes()?;
        p.check_xi_natural()?;
        Ok((true, format!("{} objects", p.objects().len())))
    })
}

/// An unsigned Temperley-Lieb category, written independently of [`Stl`]:
/// stacking by union-find, closed loops counted, juxtaposition for `⊗`.
pub mod classical_oracle {
    use crate::diagram::{MatchingDiagram, Point};

    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }

    /// `upper ∘ lower` as `(diagram, loops)`.
    pub fn compose(upper: &MatchingDiagram, lower: &MatchingDiagram) -> (MatchingDiagram, usize) {
        let (m, k, n) = (lower.source(), lower.target(), upper.target());
        // nodes: lower bottom 0..m, middle m..m+k, upper top m+k..m+k+n
        let total = m + k + n;
        let mut parent: Vec<usize> = (0..total).collect();
        let node = |side: u8, i: usize| match side {
            0 => i,
            1 => m + i,
            _ => m + k + i,
        };
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for (a, b) in lower.pairs() {
            let f = |pt: Point| match pt {
                Point::Bottom(i) => node(0, i),
                Point::Top(j) => node(1, j),
            };
            union(&mut parent, f(a), f(b));
        }
        for (a, b) in upper.pairs() {
            let f = |pt: Point| match pt {
                Point::Bottom(i) => node(1, i),
                Point::Top(j) => node(2, j),
            };
            union(&mut parent, f(a), f(b));
        }
        let boundary: Vec<usize> = (0..m).chain(m + k..total).collect();
        let mut pairs = Vec::new();
        for (i, &x) in boundary.iter().enumerate() {
            for &y in &boundary[i + 1..] {
                if find(&mut parent, x) == find(&mut parent, y) {
                    let pt = |z: usize| if z < m { Point::Bottom(z) } else { Point::Top(z - m - k) };
                    pairs.push((pt(x), pt(y)));
                }
            }
        }
        let mut roots: Vec<usize> = (m..m + k).map(|x| find(&mut parent, x)).collect();
        let boundary_roots: Vec<usize> = boundary.iter().map(|&x| find(&mut parent, x)).collect();
        roots.retain(|r| !boundary_roots.contains(r));
        roots.sort();
        roots.dedup();
        (MatchingDiagram::from_pairs(m, n, &pairs).expect("perfect matching"), roots.len())
    }

    pub fn tensor(a: &MatchingDiagram, b: &MatchingDiagram) -> MatchingDiagram {
        let (m1, n1) = (a.source(), a.target());
        let shift = |p: Point| match p {
            Point::Bottom(i) => Point::Bottom(i + m1),
            Point::Top(j) => Point::Top(j + n1),
        };
        let mut pairs = a.pairs();
        pairs.extend(b.pairs().into_iter().map(|(x, y)| (shift(x), shift(y))));
        MatchingDiagram::from_pairs(m1 + b.source(), n1 + b.target(), &pairs).expect("perfect matching")
    }
}

/// With `ε = +1` and even generators, `Stl` agrees with the unsigned oracle.
pub fn classical_differential(max_arity: usize) -> Check {
    Check::timed("classical differential test", || {
        let stl = Stl::classical();
        let delta = stl.delta().clone();
        let mut pairs = 0;
        let mut bad = 0;
        for (a, b) in arity_pairs(max_arity) {
            for c in (a % 2..=max_arity).step_by(2) {
                for x in enumerate_basis(a, b) {
                    for y in enumerate_basis(b, c) {
                        pairs += 1;
                        let (d, loops) = classical_oracle::compose(&y, &x);
                        let expect = stl.basis_morphism(&d)?.scale(&delta.pow(loops as i32)?);
                        let got = stl.compose(&stl.basis_morphism(&y)?, &stl.basis_morphism(&x)?)?;
                        if got != expect {
                            bad += 1;
                        }
                    }
                }
            }
            for (c, d) in arity_pairs(max_arity) {
                for x in enumerate_basis(a, b) {
                    for y in enumerate_basis(c, d) {
                        pairs += 1;
                        let expect = stl.basis_morphism(&classical_oracle::tensor(&x, &y))?;
                        if stl.tensor(&stl.basis_morphism(&x)?, &stl.basis_morphism(&y)?) != expect {
                            bad += 1;
                        }
                    }
                }
            }
        }
        let shown = delta.to_string();
        Ok((bad == 0 && shown == "-q - q^-1", format!("{pairs} pairs, {bad} disagreements, δ = {shown}")))
    })
}

/// Associativity of composition in `SB` on random triples of basis diagrams.
pub fn brauer_associativity(sb: &OddBrauer, samples: usize, seed: u64, max: usize) -> Check {
    Check::timed("odd Brauer associativity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = 0;
        for _ in 0..samples {
            let [a, b, c] = random_chain(&mut rng, max);
            let d = if rng.gen_bool(0.5) { a } else { c };
            let pick = |rng: &mut ChaCha8Rng, m, n| {
                let basis = sb.enumerate_basis(m, n);
                sb.basis_morphism(&basis[rng.gen_range(0..basis.len())])
            };
            let (f, g, h) = (pick(&mut rng, a, b), pick(&mut rng, b, c), pick(&mut rng, c, d));
            if sb.compose(&h, &sb.compose(&g, &f)?)? != sb.compose(&sb.compose(&h, &g)?, &f)? {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{samples} triples, {bad} failures")))
    })
}

/// Configuration shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_n: usize,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 0x5eed, max_n: 8, samples: 500 }
    }
}

/// Everything `oddtl verify` runs, for the given category flavour.
pub fn verify_all(stl: &Stl, cfg: SuiteConfig) -> Vec<Check> {
    let sb = OddBrauer::new();
    let jw = JonesWenzl::new(Stl::new(stl.epsilon(), stl.odd_generators()));
    let mut out = vec![
        hom_dimensions(2 * cfg.max_n),
        relation_suite(stl, &sb),
        super_interchange_stl(stl, cfg.samples, cfg.seed, 4),
        jones_wenzl_suite(&jw, cfg.max_n),
        representation_suite(stl, 4, 10, 6),
        osp_suite(stl, 6, 5),
        brauer_associativity(&sb, cfg.samples, cfg.seed, 4),
    ];
    if stl.odd_generators() {
        out.push(k0_suite(8, 20, 8, 10));
        out.push(idempotent_equivalences(&jw, 2, cfg.max_n.clamp(2, 6)));
    } else {
        out.push(classical_differential(5));
    }
    out
}

/// Everything `oddtl envelope-check` runs.
pub fn envelope_all(stl: &Stl, cfg: SuiteConfig) -> Vec<Check> {
    let jw = JonesWenzl::new(Stl::new(stl.epsilon(), stl.odd_generators()));
    vec![
        super_interchange_envelope(stl, cfg.samples, cfg.seed, 4),
        envelope_xi(stl, 3),
        envelope_round_trip(stl, 3),
        idempotent_equivalences(&jw, 2, cfg.max_n.clamp(2, 6)),
    ]
}
