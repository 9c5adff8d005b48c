//! The `U_q(osp(1|2))` side: weight supermodules `V(n)`, the coproduct
//! action on tensor products, the monoidal superfunctor `G : STL → modules`,
//! supercharacters and tensor-power decompositions.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::diagram::{Generator, LayerWord, MatchingDiagram};
use crate::error::{Error, Result};
use crate::k0::{decompose_in_basis, Summand, ZPiLaurent};
use crate::scalars::{quantum_int, Epsilon, LaurentPoly, RatFunc, Rational, Scalar, Specialization};
use crate::superlinalg::{tensor_map, tensor_space, Matrix, Parity, SuperMap, SuperSpace};
use crate::tl::{canonical_word, dyck_leq, dyck_sequence, enumerate_basis, Stl, TLMorphism};

fn q_power(k: i64) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::monomial(Rational::from_integer(1.into()), k))
}

/// A finite-dimensional weight supermodule with its `E` and `F` actions.
#[derive(Debug, Clone, PartialEq)]
pub struct OspModule {
    name: String,
    eps: Epsilon,
    space: SuperSpace,
    weights: Vec<i64>,
    e: SuperMap<RatFunc>,
    f: SuperMap<RatFunc>,
}

impl OspModule {
    /// `V(n)` with basis `v_n, v_{n−2}, …, v_{−n}`; `v_{n−2k}` has parity `k`
    /// (all even when `ε = +1`).
    ///
    /// `E v_{n−2k} = [n−k+1] v_{n−2k+2}` and `F v_{n−2k} = ε^k [k+1] v_{n−2k−2}`.
    pub fn irreducible(n: usize, eps: Epsilon) -> Self {
        let n = n as i64;
        // the classical theory is U_q(sl2) on purely even spaces
        let graded = |k: i64| if eps == Epsilon::Odd { Parity::from_int(k) } else { Parity::Even };
        let space = if n == 0 {
            SuperSpace::unit()
        } else {
            SuperSpace::new((0..=n).map(|k| (format!("v{}", n - 2 * k), graded(k))).collect())
                .expect("distinct labels")
        };
        let dim = (n + 1) as usize;
        let mut e = Matrix::zeros(dim, dim);
        let mut f = Matrix::zeros(dim, dim);
        for k in 0..=n {
            let i = k as usize;
            if k >= 1 {
                e.set(i - 1, i, RatFunc::from_poly(quantum_int(n - k + 1, eps)));
            }
            if k < n {
                f.set(i + 1, i, RatFunc::from_poly(quantum_int(k + 1, eps)).scale_int(eps.pow(k)));
            }
        }
        let hom = |m| SuperMap::homogeneous(space.clone(), space.clone(), graded(1), m).expect("E and F are homogeneous");
        Self {
            name: format!("V({n})"),
            eps,
            weights: (0..=n).map(|k| n - 2 * k).collect(),
            e: hom(e),
            f: hom(f),
            space,
        }
    }

    /// The trivial module `k = V(0)`.
    pub fn trivial(eps: Epsilon) -> Self {
        Self::irreducible(0, eps)
    }

    /// `V^{⊗n}`.
    pub fn tensor_power(n: usize, eps: Epsilon) -> Self {
        let v = Self::irreducible(1, eps);
        let mut m = Self::trivial(eps);
        for _ in 0..n {
            m = m.tensor(&v);
        }
        m.name = format!("V^{n}");
        m
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn e_map(&self) -> &SuperMap<RatFunc> {
        &self.e
    }

    pub fn f_map(&self) -> &SuperMap<RatFunc> {
        &self.f
    }

    fn diag(&self, f: impl Fn(i64) -> RatFunc) -> SuperMap<RatFunc> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, w) in self.weights.iter().enumerate() {
            m.set(i, i, f(*w));
        }
        SuperMap::from_matrix(self.space.clone(), self.space.clone(), m).unwrap()
    }

    /// `K^{±1}` acting by `q^{±wt}`.
    pub fn k_map(&self, inverse: bool) -> SuperMap<RatFunc> {
        self.diag(|w| q_power(if inverse { -w } else { w }))
    }

    /// `ε^{wt}`.
    fn eps_map(&self) -> SuperMap<RatFunc> {
        let eps = self.eps;
        self.diag(|w| RatFunc::from_int(eps.pow(w)))
    }

    /// `M ⊗ N` with `Δ(E) = E ⊗ 1 + K⁻¹ ⊗ E` and `Δ(F) = ε^{wt} ⊗ F + F ⊗ K`;
    /// the Koszul signs come from `tensor_map`.
    pub fn tensor(&self, other: &Self) -> Self {
        let id_n = SuperMap::identity(&other.space);
        let e = tensor_map(&self.e, &id_n).add(&tensor_map(&self.k_map(true), &other.e)).unwrap();
        let f = tensor_map(&self.eps_map(), &other.f).add(&tensor_map(&self.f, &other.k_map(false))).unwrap();
        let weights =
            self.weights.iter().flat_map(|a| other.weights.iter().map(move |b| a + b)).collect::<Vec<_>>();
        Self {
            name: format!("{} ⊗ {}", self.name, other.name),
            eps: self.eps,
            space: tensor_space(&self.space, &other.space),
            weights,
            e,
            f,
        }
    }

    pub fn e_action(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>> {
        self.e.matrix().apply(v)
    }

    pub fn f_action(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>> {
        self.f.matrix().apply(v)
    }

    /// `EF − εFE = [wt]` on every weight vector.
    pub fn check_defining_relation(&self) -> Result<bool> {
        let (e, f) = (self.e.matrix(), self.f.matrix());
        let lhs = e.mul(&f)?.add(&f.mul(&e)?.scale(&RatFunc::from_int(-self.eps.value())))?;
        let eps = self.eps;
        Ok(lhs == self.diag(|w| RatFunc::from_poly(quantum_int(w, eps))).matrix())
    }

    /// `SCh M = Σ_n (dim (1_n M)_0̄ xⁿ + dim (1_n M)_1̄ π xⁿ)`.
    pub fn supercharacter(&self) -> ZPiLaurent {
        let mut p = ZPiLaurent::zero();
        for (i, w) in self.weights.iter().enumerate() {
            match self.space.parity(i) {
                Parity::Even => p.add_term(*w, 1, 0),
                Parity::Odd => p.add_term(*w, 0, 1),
            }
        }
        p
    }

    /// Whether `h : self → target` of parity `p` commutes with `E`, `F`, `K`
    /// in the super sense: `h ∘ X = (−1)^{|h||X|} X ∘ h`.
    pub fn is_homomorphism(&self, target: &Self, h: &SuperMap<RatFunc>, p: Parity) -> Result<bool> {
        let sign = RatFunc::from_int(p.sign());
        for (x_src, x_tgt) in [(&self.e, &target.e), (&self.f, &target.f)] {
            if h.compose(x_src)? != x_tgt.compose(h)?.scale(&sign) {
                return Ok(false);
            }
        }
        Ok(h.compose(&self.k_map(false))? == target.k_map(false).compose(h)?)
    }
}

/// `V^{⊗n}` weights and parities without building the action matrices.
pub fn tensor_power_supercharacter(n: usize) -> ZPiLaurent {
    let mut p = ZPiLaurent::zero();
    for bits in 0u64..(1 << n) {
        let ones = bits.count_ones() as i64;
        let w = n as i64 - 2 * ones;
        if ones % 2 == 0 {
            p.add_term(w, 1, 0);
        } else {
            p.add_term(w, 0, 1);
        }
    }
    p
}

/// `V^{⊗n}` as a sum of `Π^pi V(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub module: String,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn total_dimension(&self) -> i64 {
        self.summands.iter().map(|s| s.mult * (s.k + 1)).sum()
    }
}

pub fn decompose_tensor_power(n: usize) -> Result<Decomposition> {
    Ok(Decomposition { module: format!("V^{n}"), summands: decompose_in_basis(&tensor_power_supercharacter(n))? })
}

// ---------------------------------------------------------------------------
// the functor G

type Coeff<S> = Box<dyn Fn(&RatFunc) -> Result<S> + Send + Sync>;

/// `G : STL(δ) → U_q(osp(1|2))`-supermodules, `n ↦ V^{⊗n}`,
/// `cup ↦ (1 ↦ v₋₁ ⊗ v₁ − q v₁ ⊗ v₋₁)`, `cap(v₁ ⊗ v₋₁) = 1`, `cap(v₋₁ ⊗ v₁) = −εq⁻¹`.
///
/// Generic over the coefficient field so the same code runs symbolically and
/// at a rational value of `q`. Over the classical category (even generators)
/// `V` is purely even and no Koszul signs appear.
pub struct GFunctor<S: Scalar> {
    q: S,
    qinv: S,
    eps: Epsilon,
    koszul: bool,
    coeff: Coeff<S>,
    spaces: Mutex<HashMap<usize, SuperSpace>>,
}

impl GFunctor<RatFunc> {
    pub fn symbolic(stl: &Stl) -> Self {
        Self::build(stl, RatFunc::q(), q_power(-1), Box::new(|c| Ok(c.clone())))
    }
}

impl GFunctor<Rational> {
    pub fn specialized(stl: &Stl, s: &Specialization) -> Self {
        let q = s.q().clone();
        let qinv = q.recip();
        let s = s.clone();
        Self::build(stl, q, qinv, Box::new(move |c| s.apply(c)))
    }
}

impl<S: Scalar> GFunctor<S> {
    fn build(stl: &Stl, q: S, qinv: S, coeff: Coeff<S>) -> Self {
        Self { q, qinv, eps: stl.epsilon(), koszul: stl.odd_generators(), coeff, spaces: Mutex::default() }
    }

    /// `V^{⊗n}`, with the same labels as iterated `tensor_space`.
    pub fn space(&self, n: usize) -> SuperSpace {
        let mut cache = self.spaces.lock().unwrap();
        if let Some(s) = cache.get(&n) {
            return s.clone();
        }
        let odd = if self.koszul { Parity::Odd } else { Parity::Even };
        let v = SuperSpace::new(vec![("v1".into(), Parity::Even), ("v-1".into(), odd)]).unwrap();
        let mut s = SuperSpace::unit();
        for _ in 0..n {
            s = tensor_space(&s, &v);
        }
        cache.insert(n, s.clone());
        s
    }

    /// The matrix of a layered word, built column by column on pure tensors.
    /// Bit `1` means `v₋₁`; the first tensor factor is the most significant bit.
    pub fn word_matrix(&self, w: &LayerWord) -> Result<Matrix<S>> {
        let (m, n) = (w.source(), w.target());
        let mut out = Matrix::zeros(1 << n, 1 << m);
        let minus_eps_qinv = self.qinv.mul(&S::from_i64(-self.eps.value()));
        let minus_q = self.q.neg();
        for col in 0..(1usize << m) {
            let mut state: Vec<(usize, S)> = vec![(col, S::one())];
            let mut width = m;
            for layer in w.layers() {
                let l = layer.left;
                let mut next: HashMap<usize, S> = HashMap::new();
                let mut push = |k: usize, v: S| {
                    let e = next.entry(k).or_insert_with(S::zero);
                    *e = e.add(&v);
                };
                for (bits, c) in &state {
                    let tail = width - l;
                    let high = bits >> tail;
                    let sign = if self.koszul && high.count_ones() % 2 == 1 { -1 } else { 1 };
                    let c = if sign < 0 { c.neg() } else { c.clone() };
                    match layer.generator {
                        Generator::Cap => {
                            let pair = (bits >> (tail - 2)) & 3;
                            let low = bits & ((1 << (tail - 2)) - 1);
                            let k = (high << (tail - 2)) | low;
                            match pair {
                                0b01 => push(k, c),
                                0b10 => push(k, c.mul(&minus_eps_qinv)),
                                _ => {}
                            }
                        }
                        Generator::Cup => {
                            let low = bits & ((1 << tail) - 1);
                            let base = (high << (tail + 2)) | low;
                            push(base | (0b01 << tail), c.mul(&minus_q));
                            push(base | (0b10 << tail), c);
                        }
                        Generator::Cross => {
                            return Err(Error::Unsupported("G is defined on the Temperley-Lieb category".into()))
                        }
                    }
                }
                width = layer.target();
                state = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            }
            for (row, v) in state {
                out.set(row, col, v);
            }
        }
        Ok(out)
    }

    fn wrap(&self, m: usize, n: usize, mat: Matrix<S>) -> Result<SuperMap<S>> {
        SuperMap::from_matrix(self.space(m), self.space(n), mat)
    }

    pub fn basis_image(&self, d: &MatchingDiagram) -> Result<SuperMap<S>> {
        self.wrap(d.source(), d.target(), self.word_matrix(&canonical_word(d))?)
    }

    pub fn word_image(&self, w: &LayerWord) -> Result<SuperMap<S>> {
        self.wrap(w.source(), w.target(), self.word_matrix(w)?)
    }

    /// `G(f)` for a linear combination of diagrams.
    pub fn image(&self, f: &TLMorphism) -> Result<SuperMap<S>> {
        let (m, n) = (f.source(), f.target());
        let mut acc = Matrix::zeros(1 << n, 1 << m);
        for (d, c) in f.terms() {
            let c = (self.coeff)(c)?;
            acc = acc.add(&self.word_matrix(&canonical_word(d))?.scale(&c))?;
        }
        self.wrap(m, n, acc)
    }

    /// Rank of `{G([d]) : d ∈ basis(m, n)}` as vectors, and the basis size.
    pub fn hom_rank(&self, m: usize, n: usize) -> Result<(usize, usize)> {
        let basis = enumerate_basis(m, n);
        let cols = 1usize << (m + n);
        let mut big = Matrix::zeros(basis.len(), cols);
        for (r, d) in basis.iter().enumerate() {
            let g = self.word_matrix(&canonical_word(d))?;
            for i in 0..g.rows() {
                for j in 0..g.cols() {
                    let v = g.get(i, j);
                    if !v.is_zero() {
                        big.set(r, i * g.cols() + j, v.clone());
                    }
                }
            }
        }
        Ok((big.rank(), basis.len()))
    }

    /// `θ_s = G([s]) : V^{⊗m} → k`.
    pub fn theta(&self, s: &MatchingDiagram) -> Result<SuperMap<S>> {
        if s.target() != 0 {
            return Err(Error::InvalidArgument("θ_s needs a cap diagram m -> 0".into()));
        }
        self.basis_image(s)
    }
}

/// The pure tensor `v_t`: `v₁` under `+1`, `v₋₁` under `−1`.
pub fn dyck_vector_index(t: &[i8]) -> usize {
    t.iter().fold(0, |acc, &x| (acc << 1) | usize::from(x < 0))
}

/// Evaluations `θ_s(v_t)` over all cap diagrams on `m` points.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaReport {
    pub m: usize,
    pub size: usize,
    /// `θ_s(v_s)` for each `s`, as text
    pub diagonal: Vec<String>,
    pub diagonal_units: bool,
    /// pairs with `θ_s(v_t) ≠ 0` although `t ≰ s`
    pub violations: usize,
}

impl ThetaReport {
    pub fn passed(&self) -> bool {
        self.diagonal_units && self.violations == 0
    }
}

pub fn theta_triangularity<S: Scalar>(g: &GFunctor<S>, m: usize) -> Result<ThetaReport> {
    let basis = enumerate_basis(m, 0);
    let seqs: Vec<Vec<i8>> = basis.iter().map(dyck_sequence).collect::<Result<_>>()?;
    let mut report = ThetaReport { m, size: basis.len(), diagonal: vec![], diagonal_units: true, violations: 0 };
    for (s, ds) in basis.iter().zip(&seqs) {
        let th = g.theta(s)?.matrix();
        for t in &seqs {
            let v = th.get(0, dyck_vector_index(t));
            if t == ds {
                report.diagonal.push(v.to_string());
                if *v != S::one() && *v != S::one().neg() {
                    report.diagonal_units = false;
                }
            } else if !v.is_zero() && !dyck_leq(t, ds)? {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}

/// One row of the equivariance grid.
#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceEntry {
    pub map: String,
    pub commutes: bool,
}

/// Checks that `G(cup) : k → V ⊗ V` and `G(cap) : V ⊗ V → k` are odd module
/// homomorphisms (odd case) or even ones (classical case).
pub fn equivariance_check(stl: &Stl) -> Result<Vec<EquivarianceEntry>> {
    let g = GFunctor::symbolic(stl);
    let eps = stl.epsilon();
    let k = OspModule::trivial(eps);
    let vv = OspModule::tensor_power(2, eps);
    let p = stl.hom_parity(0, 2);
    let cup = g.image(&stl.cup())?;
    let cap = g.image(&stl.cap())?;
    Ok(vec![
        EquivarianceEntry { map: "cup".into(), commutes: k.is_homomorphism(&vv, &cup, p)? },
        EquivarianceEntry { map: "cap".into(), commutes: vv.is_homomorphism(&k, &cap, p)? },
    ])
}

/// Rank of `G(f_n)` at a rational `q`: the dimension of the summand `V(n)`.
pub fn jw_image_rank(stl: &Stl, f: &TLMorphism, s: &Specialization) -> Result<usize> {
    let g = GFunctor::specialized(stl, s);
    Ok(g.image(f)?.matrix().rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn irreducible_actions() {
        let v3 = OspModule::irreducible(3, Epsilon::Odd);
        assert_eq!(v3.weights(), &[3, 1, -1, -3]);
        let f = v3.f_map().matrix();
        assert!(f.get(1, 0).is_one());
        let e = v3.e_map().matrix();
        assert!(e.get(2, 3).is_one());
        for n in 0..=6 {
            assert!(OspModule::irreducible(n, Epsilon::Odd).check_defining_relation().unwrap());
        }
    }

    #[test]
    fn tensor_relation() {
        for k in 0..=3 {
            assert!(OspModule::tensor_power(k, Epsilon::Odd).check_defining_relation().unwrap(), "k = {k}");
        }
    }

    #[test]
    fn generators() {
        let stl = Stl::odd();
        let g = GFunctor::symbolic(&stl);
        let cup = g.image(&stl.cup()).unwrap().matrix();
        assert_eq!((cup.get(1, 0), cup.get(2, 0)), (&r("-q"), &RatFunc::one()));
        let cap = g.image(&stl.cap()).unwrap().matrix();
        assert_eq!((cap.get(0, 1), cap.get(0, 2)), (&RatFunc::one(), &r("q^-1")));
        let bubble = g.image(&stl.compose(&stl.cap(), &stl.cup()).unwrap()).unwrap().matrix();
        assert_eq!(bubble.get(0, 0), stl.delta());
    }

    #[test]
    fn characters() {
        let two = OspModule::tensor_power(2, Epsilon::Odd).supercharacter();
        assert_eq!(two.to_string(), "x^2 + 2*pi + x^-2");
        assert_eq!(two, tensor_power_supercharacter(2));
        assert_eq!(OspModule::irreducible(1, Epsilon::Odd).supercharacter().to_string(), "x + pi*x^-1");
        let d = decompose_tensor_power(2).unwrap();
        assert_eq!(d.summands, vec![Summand { k: 2, pi: 0, mult: 1 }, Summand { k: 0, pi: 1, mult: 1 }]);
    }

    #[test]
    fn cup_and_cap_are_equivariant() {
        for e in equivariance_check(&Stl::odd()).unwrap() {
            assert!(e.commutes, "{}", e.map);
        }
    }

    #[test]
    fn theta_small() {
        let stl = Stl::odd();
        let g = GFunctor::symbolic(&stl);
        let rep = theta_triangularity(&g, 4).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

#[cfg(test)]
mod functor_tests {
    use super::*;

    fn functorial(stl: &Stl) {
        let g = GFunctor::specialized(stl, &Specialization::new(Rational::from_integer(2.into())).unwrap());
        for (a, b, c) in [(2, 2, 2), (4, 2, 4), (2, 4, 2), (3, 3, 3), (4, 4, 4), (1, 3, 5), (5, 3, 1)] {
            for x in enumerate_basis(a, b) {
                for y in enumerate_basis(b, c) {
                    let (fx, fy) = (stl.basis_morphism(&x).unwrap(), stl.basis_morphism(&y).unwrap());
                    let lhs = g.image(&stl.compose(&fy, &fx).unwrap()).unwrap();
                    let rhs = g.image(&fy).unwrap().compose(&g.image(&fx).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{x:?} then {y:?}");
                }
            }
        }
        for (a, b) in [(2, 0), (0, 2), (2, 2), (1, 3)] {
            for x in enumerate_basis(a, b) {
                for y in enumerate_basis(b, a) {
                    let (fx, fy) = (stl.basis_morphism(&x).unwrap(), stl.basis_morphism(&y).unwrap());
                    let lhs = g.image(&stl.tensor(&fx, &fy)).unwrap();
                    let rhs = tensor_map(&g.image(&fx).unwrap(), &g.image(&fy).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn odd_functoriality() {
        functorial(&Stl::odd());
    }

    #[test]
    fn classical_functoriality() {
        functorial(&Stl::classical());
    }

    #[test]
    fn ranks() {
        let stl = Stl::odd();
        let g = GFunctor::specialized(&stl, &Specialization::new(Rational::from_integer(2.into())).unwrap());
        for (m, n) in [(2, 0), (4, 0), (3, 3), (6, 0), (4, 2)] {
            let (r, d) = g.hom_rank(m, n).unwrap();
            assert_eq!(r, d);
        }
        assert!(theta_triangularity(&g, 6).unwrap().passed());
    }
}
