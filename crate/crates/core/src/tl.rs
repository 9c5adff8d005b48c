//! The odd Temperley-Lieb supercategory `STL(δ)`.
//!
//! Objects are natural numbers. `Hom(m, n)` has the crossingless matchings
//! as a basis; the basis element `[d]` is, by definition, the canonical word
//! of `d` with coefficient `+1`. Cups and caps are odd, so reordering them
//! costs signs, and the two zigzags differ by `ε`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::diagram::{compose_matchings, trace, Generator, Layer, LayerWord, MatchingDiagram, Point};
use crate::error::{Error, Result};
use crate::scalars::{delta, Epsilon, FactoredDen, LaurentPoly, RatFunc, Rational};
use crate::superlinalg::Parity;

/// A homogeneous `Q(q)`-linear combination of basis diagrams of one hom-space.
#[derive(Clone, PartialEq, Eq)]
pub struct TLMorphism {
    source: usize,
    target: usize,
    parity: Parity,
    terms: BTreeMap<MatchingDiagram, RatFunc>,
}

impl TLMorphism {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MatchingDiagram, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &MatchingDiagram) -> RatFunc {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if (self.source, self.target) != (other.source, other.target) {
            return Err(Error::ArityMismatch(format!(
                "sum of {}->{} and {}->{}",
                self.source, self.target, other.source, other.target
            )));
        }
        if self.parity != other.parity {
            return Err(Error::MixedParity("sum of an even and an odd morphism".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            let v = terms.get(d).map_or_else(|| c.clone(), |x| x + c);
            if v.is_zero() {
                terms.remove(d);
            } else {
                terms.insert(d.clone(), v);
            }
        }
        Ok(Self { terms, ..*self.shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self { terms: BTreeMap::new(), ..*self.shape() };
        }
        Self { terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect(), ..*self.shape() }
    }

    fn shape(&self) -> Box<Self> {
        Box::new(Self { source: self.source, target: self.target, parity: self.parity, terms: BTreeMap::new() })
    }
}

impl fmt::Display for TLMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c}) · {d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TLMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TLMorphism {}->{} (parity {}): {}", self.source, self.target, self.parity, self)
    }
}

/// Scalar produced by normalizing one word: `sign · δ^loops · [diagram]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub sign: i64,
    pub loops: usize,
    pub diagram: MatchingDiagram,
}

#[derive(Default)]
struct Caches {
    ids: HashMap<MatchingDiagram, u32>,
    diagrams: Vec<MatchingDiagram>,
    /// per basis diagram: (cup half, cap half)
    halves: HashMap<u32, (u32, u32)>,
    /// (cap half of upper, cup half of lower) -> (sign, loops, cup half, cap half) of the middle
    middle: HashMap<(u32, u32), (i64, usize, u32, u32)>,
    /// stacked cup halves (upper, lower) -> (sign, result)
    cups: HashMap<(u32, u32), (i64, u32)>,
    /// stacked cap halves (upper, lower) -> (sign, result)
    caps: HashMap<(u32, u32), (i64, u32)>,
    /// (cup half, cap half) -> diagram
    glue: HashMap<(u32, u32), u32>,
    /// tensor of basis diagrams -> (sign, result)
    tensor: HashMap<(u32, u32), (i64, u32)>,
}

impl Caches {
    fn intern(&mut self, d: &MatchingDiagram) -> u32 {
        if let Some(&i) = self.ids.get(d) {
            return i;
        }
        let i = self.diagrams.len() as u32;
        self.ids.insert(d.clone(), i);
        self.diagrams.push(d.clone());
        i
    }
}

/// The category `STL(δ)` for a choice of `ε` and of generator parity.
///
/// `Stl::odd()` is the odd theory (`ε = −1`, odd cups and caps). `Stl::classical()`
/// (`ε = +1`, even generators) is the ordinary Temperley-Lieb category, useful
/// for differential testing.
pub struct Stl {
    eps: Epsilon,
    odd_generators: bool,
    delta: RatFunc,
    caches: Mutex<Caches>,
}

impl fmt::Debug for Stl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Stl").field("eps", &self.eps).field("odd_generators", &self.odd_generators).finish()
    }
}

impl Default for Stl {
    fn default() -> Self {
        Self::odd()
    }
}

impl Stl {
    pub fn new(eps: Epsilon, odd_generators: bool) -> Self {
        Self { eps, odd_generators, delta: RatFunc::from_poly(delta(eps)), caches: Mutex::default() }
    }

    pub fn odd() -> Self {
        Self::new(Epsilon::Odd, true)
    }

    pub fn classical() -> Self {
        Self::new(Epsilon::Classical, false)
    }

    pub fn epsilon(&self) -> Epsilon {
        self.eps
    }

    pub fn odd_generators(&self) -> bool {
        self.odd_generators
    }

    /// The loop value `δ = −[2]`.
    pub fn delta(&self) -> &RatFunc {
        &self.delta
    }

    /// Parity of every morphism in `Hom(m, n)`.
    pub fn hom_parity(&self, m: usize, n: usize) -> Parity {
        if !self.odd_generators {
            return Parity::Even;
        }
        Parity::from_int((m as i64 - n as i64).abs() / 2)
    }

    fn swap_sign(&self) -> i64 {
        if self.odd_generators {
            -1
        } else {
            1
        }
    }

    pub fn zero(&self, m: usize, n: usize) -> TLMorphism {
        TLMorphism { source: m, target: n, parity: self.hom_parity(m, n), terms: BTreeMap::new() }
    }

    pub fn basis_morphism(&self, d: &MatchingDiagram) -> Result<TLMorphism> {
        self.check_planar(d)?;
        Ok(self.single(d.clone(), RatFunc::one()))
    }

    fn single(&self, d: MatchingDiagram, c: RatFunc) -> TLMorphism {
        let mut m = self.zero(d.source(), d.target());
        if !c.is_zero() {
            m.terms.insert(d, c);
        }
        m
    }

    /// Builds a morphism from explicit terms; all diagrams must lie in `Hom(m, n)`.
    pub fn from_terms(&self, m: usize, n: usize, terms: Vec<(MatchingDiagram, RatFunc)>) -> Result<TLMorphism> {
        let mut out = self.zero(m, n);
        for (d, c) in terms {
            if (d.source(), d.target()) != (m, n) {
                return Err(Error::ArityMismatch(format!("diagram {d:?} in Hom({m},{n})")));
            }
            self.check_planar(&d)?;
            out = out.add(&self.single(d, c))?;
        }
        Ok(out)
    }

    fn check_planar(&self, d: &MatchingDiagram) -> Result<()> {
        if !d.is_planar() {
            return Err(Error::InvalidDiagram(format!("{d} is not crossingless")));
        }
        Ok(())
    }

    pub fn identity(&self, n: usize) -> TLMorphism {
        self.single(MatchingDiagram::identity(n), RatFunc::one())
    }

    pub fn cap(&self) -> TLMorphism {
        let d = MatchingDiagram::from_pairs(2, 0, &[(Point::Bottom(0), Point::Bottom(1))]).unwrap();
        self.single(d, RatFunc::one())
    }

    pub fn cup(&self) -> TLMorphism {
        let d = MatchingDiagram::from_pairs(0, 2, &[(Point::Top(0), Point::Top(1))]).unwrap();
        self.single(d, RatFunc::one())
    }

    /// All crossingless matchings `m → n`, in a fixed order.
    pub fn enumerate_basis(&self, m: usize, n: usize) -> Vec<MatchingDiagram> {
        enumerate_basis(m, n)
    }

    /// The canonical slicing of `d`: caps first (leftmost-innermost), then
    /// cups (the mirrored rule, reversed).
    pub fn canonical_word(&self, d: &MatchingDiagram) -> Result<LayerWord> {
        self.check_planar(d)?;
        Ok(canonical_word(d))
    }

    /// Normalizes a layered word to `c · [d]`.
    pub fn normalize(&self, w: &LayerWord) -> Result<TLMorphism> {
        let nf = self.normal_form(w)?;
        let c = self.scalar(nf.sign, nf.loops);
        Ok(self.single(nf.diagram, c))
    }

    fn scalar(&self, sign: i64, loops: usize) -> RatFunc {
        let mut c = RatFunc::from_int(sign);
        for _ in 0..loops {
            c = &c * &self.delta;
        }
        c
    }

    /// The sign, loop count and diagram of a word, by rewriting: (1) the
    /// lowest adjacent cup-under-cap pair is swapped, or removed as a bubble
    /// or zigzag, until all caps sit below all cups; (2) the remaining caps
    /// and cups are sorted into canonical order, one sign per transposition.
    pub fn normal_form(&self, w: &LayerWord) -> Result<NormalForm> {
        if w.count(Generator::Cross) > 0 {
            return Err(Error::Unsupported("crossings do not exist in the Temperley-Lieb category".into()));
        }
        let mut layers: Vec<Layer> = w.layers().to_vec();
        let mut sign = 1i64;
        let mut loops = 0usize;
        let swap = self.swap_sign();
        let eps = self.eps.value();
        while let Some(k) = (0..layers.len().saturating_sub(1))
            .find(|&k| layers[k].generator == Generator::Cup && layers[k + 1].generator == Generator::Cap)
        {
            let (cup, cap) = (layers[k], layers[k + 1]);
            let (a, b) = (cup.left, cap.left);
            let w = cup.left + cup.right; // strands below the cup
            if b == a {
                loops += 1;
                layers.drain(k..k + 2);
            } else if b + 1 == a {
                layers.drain(k..k + 2);
            } else if b == a + 1 {
                sign *= eps;
                layers.drain(k..k + 2);
            } else if b + 2 <= a {
                sign *= swap;
                layers[k] = Layer::new(b, Generator::Cap, w - b - 2);
                layers[k + 1] = Layer::new(a - 2, Generator::Cup, w - a);
            } else {
                sign *= swap;
                layers[k] = Layer::new(b - 2, Generator::Cap, w - b);
                layers[k + 1] = Layer::new(a, Generator::Cup, w - 2 - a);
            }
        }
        let reduced = LayerWord::new(w.source(), layers)?;
        let (d, extra) = trace(&reduced);
        debug_assert_eq!(extra, 0);
        let canon = canonical_word(&d);
        if swap == -1 {
            let inv = order_inversions(&cap_sequence(&reduced), &cap_sequence(&canon))
                + order_inversions(&cup_sequence(&reduced), &cup_sequence(&canon));
            if inv % 2 == 1 {
                sign = -sign;
            }
        }
        Ok(NormalForm { sign, loops, diagram: d })
    }

    /// A single layer as a morphism.
    pub fn layer_morphism(&self, l: Layer) -> Result<TLMorphism> {
        self.normalize(&LayerWord::new(l.source(), vec![l])?)
    }

    fn check_compose(f: &TLMorphism, g: &TLMorphism) -> Result<()> {
        if f.source != g.target {
            return Err(Error::ArityMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                f.source, f.target, g.source, g.target
            )));
        }
        Ok(())
    }

    /// `[d1] ∘ [d2]` as a normal form, via the cached half-diagram decomposition.
    pub fn compose_basis(&self, d1: &MatchingDiagram, d2: &MatchingDiagram) -> Result<NormalForm> {
        if d1.source() != d2.target() {
            return Err(Error::ArityMismatch("basis composition".into()));
        }
        let mut c = self.caches.lock().unwrap();
        let (i1, i2) = (c.intern(d1), c.intern(d2));
        let (sign, loops, out) = self.compose_ids(&mut c, i1, i2);
        Ok(NormalForm { sign, loops, diagram: c.diagrams[out as usize].clone() })
    }

    fn halves(&self, c: &mut Caches, id: u32) -> (u32, u32) {
        if let Some(&h) = c.halves.get(&id) {
            return h;
        }
        let d = c.diagrams[id as usize].clone();
        let (u, k) = split_halves(&d);
        let h = (c.intern(&u), c.intern(&k));
        c.halves.insert(id, h);
        h
    }

    /// Normal form of the word `lower` then `upper` (both basis diagrams).
    fn stack_words(&self, upper: &MatchingDiagram, lower: &MatchingDiagram) -> NormalForm {
        let w = canonical_word(lower).then(&canonical_word(upper)).expect("arities agree");
        self.normal_form(&w).expect("planar words")
    }

    fn compose_ids(&self, c: &mut Caches, i1: u32, i2: u32) -> (i64, usize, u32) {
        let (u1, k1) = self.halves(c, i1);
        let (u2, k2) = self.halves(c, i2);
        let (s_mid, loops, ue, ke) = match c.middle.get(&(k1, u2)) {
            Some(&v) => v,
            None => {
                let nf = self.stack_words(&c.diagrams[k1 as usize].clone(), &c.diagrams[u2 as usize].clone());
                let e = c.intern(&nf.diagram);
                let (ue, ke) = self.halves(c, e);
                let v = (nf.sign, nf.loops, ue, ke);
                c.middle.insert((k1, u2), v);
                v
            }
        };
        let (s_top, u) = match c.cups.get(&(u1, ue)) {
            Some(&v) => v,
            None => {
                let nf = self.stack_words(&c.diagrams[u1 as usize].clone(), &c.diagrams[ue as usize].clone());
                let v = (nf.sign, c.intern(&nf.diagram));
                c.cups.insert((u1, ue), v);
                v
            }
        };
        let (s_bot, k) = match c.caps.get(&(ke, k2)) {
            Some(&v) => v,
            None => {
                let nf = self.stack_words(&c.diagrams[ke as usize].clone(), &c.diagrams[k2 as usize].clone());
                let v = (nf.sign, c.intern(&nf.diagram));
                c.caps.insert((ke, k2), v);
                v
            }
        };
        let out = match c.glue.get(&(u, k)) {
            Some(&v) => v,
            None => {
                let (d, _) = compose_matchings(&c.diagrams[u as usize], &c.diagrams[k as usize]).unwrap();
                let v = c.intern(&d);
                c.glue.insert((u, k), v);
                v
            }
        };
        (s_mid * s_top * s_bot, loops, out)
    }

    /// Vertical composition `f ∘ g` (`g` first).
    pub fn compose(&self, f: &TLMorphism, g: &TLMorphism) -> Result<TLMorphism> {
        Self::check_compose(f, g)?;
        let mut out = TLMorphism {
            source: g.source,
            target: f.target,
            parity: f.parity + g.parity,
            terms: BTreeMap::new(),
        };
        if f.is_zero() || g.is_zero() {
            return Ok(out);
        }
        // structure constants: for each pair, (output slot, loops, sign)
        let (slots, outputs) = {
            let mut c = self.caches.lock().unwrap();
            let ids1: Vec<u32> = f.terms.keys().map(|d| c.intern(d)).collect();
            let ids2: Vec<u32> = g.terms.keys().map(|d| c.intern(d)).collect();
            let mut slot_of: HashMap<u32, u32> = HashMap::new();
            let mut outputs: Vec<u32> = Vec::new();
            let mut slots = Vec::with_capacity(ids1.len() * ids2.len());
            for &i1 in &ids1 {
                for &i2 in &ids2 {
                    let (s, l, o) = self.compose_ids(&mut c, i1, i2);
                    let slot = *slot_of.entry(o).or_insert_with(|| {
                        outputs.push(o);
                        outputs.len() as u32 - 1
                    });
                    slots.push((slot, l as u8, s as i8));
                }
            }
            let outputs: Vec<MatchingDiagram> = outputs.iter().map(|&o| c.diagrams[o as usize].clone()).collect();
            (slots, outputs)
        };
        let c1: Vec<&RatFunc> = f.terms.values().collect();
        let c2: Vec<&RatFunc> = g.terms.values().collect();
        let coeffs = match accumulate_fast(&c1, &c2, &slots, outputs.len(), &self.delta) {
            Some(v) => v,
            None => accumulate_slow(&c1, &c2, &slots, outputs.len(), &self.delta),
        };
        for (d, c) in outputs.into_iter().zip(coeffs) {
            if !c.is_zero() {
                out.terms.insert(d, c);
            }
        }
        Ok(out)
    }

    /// `[d1] ⊗ [d2]` as a signed diagram.
    pub fn tensor_basis(&self, d1: &MatchingDiagram, d2: &MatchingDiagram) -> (i64, MatchingDiagram) {
        let mut c = self.caches.lock().unwrap();
        let key = (c.intern(d1), c.intern(d2));
        if let Some(&(s, o)) = c.tensor.get(&key) {
            return (s, c.diagrams[o as usize].clone());
        }
        // (d1 ⊗ 1) ∘ (1 ⊗ d2)
        let lower = canonical_word(d2).padded(d1.source(), 0);
        let upper = canonical_word(d1).padded(0, d2.target());
        let nf = self.normal_form(&lower.then(&upper).unwrap()).unwrap();
        debug_assert_eq!(nf.loops, 0);
        let o = c.intern(&nf.diagram);
        c.tensor.insert(key, (nf.sign, o));
        (nf.sign, nf.diagram)
    }

    /// Horizontal composition, `f ⊗ g = (f ⊗ 1) ∘ (1 ⊗ g)`.
    pub fn tensor(&self, f: &TLMorphism, g: &TLMorphism) -> TLMorphism {
        let mut out = TLMorphism {
            source: f.source + g.source,
            target: f.target + g.target,
            parity: f.parity + g.parity,
            terms: BTreeMap::new(),
        };
        for (d1, a) in &f.terms {
            for (d2, b) in &g.terms {
                let (s, d) = self.tensor_basis(d1, d2);
                let v = (a * b).scale_int(s);
                let e = out.terms.entry(d).or_insert_with(RatFunc::zero);
                *e = &*e + &v;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// `id_left ⊗ f ⊗ id_right`.
    pub fn pad(&self, f: &TLMorphism, left: usize, right: usize) -> TLMorphism {
        let t = self.tensor(&self.identity(left), f);
        self.tensor(&t, &self.identity(right))
    }

    /// Evaluates a word directly (same as `normalize`).
    pub fn eval_word(&self, w: &LayerWord) -> Result<TLMorphism> {
        self.normalize(w)
    }
}

/// Noncrossing perfect matchings of the boundary circle, mapped back to
/// bottom/top points.
pub fn enumerate_basis(m: usize, n: usize) -> Vec<MatchingDiagram> {
    let total = m + n;
    if total % 2 == 1 {
        return vec![];
    }
    // cyclic position -> point index
    let to_index = |pos: usize| if pos < m { pos } else { m + (n - 1 - (pos - m)) };
    let mut out = Vec::new();
    let mut partner = vec![0u16; total];
    fn rec(lo: usize, hi: usize, partner: &mut Vec<u16>, k: &mut dyn FnMut(&Vec<u16>), rest: &mut Vec<(usize, usize)>) {
        // matches the interval [lo, hi) then continues with the pending intervals
        if lo >= hi {
            match rest.pop() {
                None => k(partner),
                Some((a, b)) => {
                    rec(a, b, partner, k, rest);
                    rest.push((a, b));
                }
            }
            return;
        }
        let mut j = lo + 1;
        while j < hi {
            partner[lo] = j as u16;
            partner[j] = lo as u16;
            rest.push((j + 1, hi));
            rec(lo + 1, j, partner, k, rest);
            rest.pop();
            j += 2;
        }
    }
    let mut emit = |p: &Vec<u16>| {
        let mut idx = vec![0u16; total];
        for pos in 0..total {
            idx[to_index(pos)] = to_index(p[pos] as usize) as u16;
        }
        out.push(MatchingDiagram::from_partner(m, n, idx));
    };
    rec(0, total, &mut partner, &mut emit, &mut Vec::new());
    out
}

/// Leftmost-innermost removal of matched adjacent pairs; returns the
/// positions and widths at which pairs were removed.
fn peel(points: &[usize], is_pair: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut rem: Vec<usize> = points.to_vec();
    let mut out = Vec::new();
    while let Some(k) = (0..rem.len().saturating_sub(1)).find(|&k| is_pair(rem[k], rem[k + 1])) {
        out.push((k, rem.len()));
        rem.drain(k..k + 2);
    }
    out
}

pub fn canonical_word(d: &MatchingDiagram) -> LayerWord {
    let (m, n) = (d.source(), d.target());
    let pr = d.partner_raw();
    let bottoms: Vec<usize> = (0..m).collect();
    let caps = peel(&bottoms, |a, b| pr[a] as usize == b);
    let tops: Vec<usize> = (m..m + n).collect();
    let cups = peel(&tops, |a, b| pr[a] as usize == b);
    let mut layers: Vec<Layer> = caps.iter().map(|&(k, w)| Layer::new(k, Generator::Cap, w - k - 2)).collect();
    layers.extend(cups.iter().rev().map(|&(k, w)| Layer::new(k, Generator::Cup, w - k - 2)));
    LayerWord::new(m, layers).expect("canonical word is well formed")
}

/// The caps of a word whose caps all precede its cups, as bottom pairs in
/// the order they are applied.
fn cap_sequence(w: &LayerWord) -> Vec<(usize, usize)> {
    let mut pos: Vec<usize> = (0..w.source()).collect();
    let mut out = Vec::new();
    for l in w.layers() {
        if l.generator != Generator::Cap {
            break;
        }
        out.push((pos[l.left], pos[l.left + 1]));
        pos.drain(l.left..l.left + 2);
    }
    out
}

/// The cups of such a word, as top pairs, read from the top down.
fn cup_sequence(w: &LayerWord) -> Vec<(usize, usize)> {
    let mut pos: Vec<usize> = (0..w.target()).collect();
    let mut out = Vec::new();
    for l in w.layers().iter().rev() {
        if l.generator != Generator::Cup {
            break;
        }
        out.push((pos[l.left], pos[l.left + 1]));
        pos.drain(l.left..l.left + 2);
    }
    out
}

/// Number of inversions of `actual` relative to the order `canonical`.
fn order_inversions(actual: &[(usize, usize)], canonical: &[(usize, usize)]) -> usize {
    let rank: HashMap<(usize, usize), usize> = canonical.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let r: Vec<usize> = actual.iter().map(|p| rank[p]).collect();
    let mut inv = 0;
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            if r[i] > r[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Factor a planar diagram as (cup half) ∘ (cap half) through its through strands.
fn split_halves(d: &MatchingDiagram) -> (MatchingDiagram, MatchingDiagram) {
    let (m, n) = (d.source(), d.target());
    let through = d.through();
    let t = through.len();
    let mut cap_pairs: Vec<(Point, Point)> =
        d.caps().into_iter().map(|(a, b)| (Point::Bottom(a), Point::Bottom(b))).collect();
    let mut cup_pairs: Vec<(Point, Point)> = d.cups().into_iter().map(|(a, b)| (Point::Top(a), Point::Top(b))).collect();
    for (k, &(b, top)) in through.iter().enumerate() {
        cap_pairs.push((Point::Bottom(b), Point::Top(k)));
        cup_pairs.push((Point::Bottom(k), Point::Top(top)));
    }
    (
        MatchingDiagram::from_pairs(t, n, &cup_pairs).unwrap(),
        MatchingDiagram::from_pairs(m, t, &cap_pairs).unwrap(),
    )
}

// ---------------------------------------------------------------------------
// coefficient accumulation

/// Integer Laurent polynomial over a common denominator, nonzero terms only.
struct Sparse {
    terms: Vec<(i64, i128)>,
}

/// Writes every coefficient as `N_i / D` with integer `N_i`.
fn common_denominator(cs: &[&RatFunc]) -> Option<(LaurentPoly, Vec<Sparse>)> {
    let mut den = LaurentPoly::one();
    for c in cs {
        if !c.den().is_one() && den.div_exact(c.den()).is_none() {
            let g = den.gcd(c.den());
            den = &den * &c.den().div_exact(&g)?;
        }
    }
    let nums: Vec<LaurentPoly> = cs.iter().map(|c| c.num() * &den.div_exact(c.den()).unwrap()).collect();
    // clear rational denominators
    let mut l = num_bigint::BigInt::from(1);
    for p in &nums {
        for (_, x) in p.terms() {
            l = num_integer::Integer::lcm(&l, x.denom());
        }
    }
    let lr = Rational::from_integer(l);
    let den = den.scale(&lr);
    let mut out = Vec::with_capacity(nums.len());
    for p in nums {
        let mut terms = Vec::new();
        for (e, x) in p.terms() {
            let v = (x * &lr).to_integer().to_i128()?;
            terms.push((e, v));
        }
        out.push(Sparse { terms });
    }
    Some((den, out))
}

fn accumulate_fast(
    c1: &[&RatFunc],
    c2: &[&RatFunc],
    slots: &[(u32, u8, i8)],
    outputs: usize,
    delta: &RatFunc,
) -> Option<Vec<RatFunc>> {
    let (d1, n1) = common_denominator(c1)?;
    let (d2, n2) = common_denominator(c2)?;
    let lo1 = n1.iter().flat_map(|s| s.terms.first()).map(|t| t.0).min().unwrap_or(0);
    let hi1 = n1.iter().flat_map(|s| s.terms.last()).map(|t| t.0).max().unwrap_or(0);
    let lo2 = n2.iter().flat_map(|s| s.terms.first()).map(|t| t.0).min().unwrap_or(0);
    let hi2 = n2.iter().flat_map(|s| s.terms.last()).map(|t| t.0).max().unwrap_or(0);
    let width = ((hi1 - lo1) + (hi2 - lo2) + 1) as usize;
    let base = lo1 + lo2;
    let max_loops = slots.iter().map(|s| s.1).max().unwrap_or(0) as usize + 1;
    let mut acc: Vec<i128> = vec![0; outputs * max_loops * width];
    let n2len = n2.len();
    // every cell receives at most `slots · terms` products; if that cannot
    // overflow, skip the checked arithmetic
    let max1 = n1.iter().flat_map(|s| &s.terms).map(|t| t.1.unsigned_abs()).max().unwrap_or(0);
    let max2 = n2.iter().flat_map(|s| &s.terms).map(|t| t.1.unsigned_abs()).max().unwrap_or(0);
    let terms2 = n2.iter().map(|s| s.terms.len()).max().unwrap_or(0);
    let bound = max1 as f64 * max2 as f64 * slots.len() as f64 * terms2 as f64;
    let unchecked = max1 <= i64::MAX as u128 && max2 <= i64::MAX as u128 && bound < 2f64.powi(120);
    for (idx, &(slot, loops, sign)) in slots.iter().enumerate() {
        let (i, j) = (idx / n2len, idx % n2len);
        let off = (slot as usize * max_loops + loops as usize) * width;
        let row = &mut acc[off..off + width];
        if unchecked {
            for &(e1, a) in &n1[i].terms {
                let a = if sign < 0 { -a } else { a };
                let row = &mut row[(e1 - lo1) as usize..];
                for &(e2, b) in &n2[j].terms {
                    row[(e2 - lo2) as usize] += a * b;
                }
            }
            continue;
        }
        for &(e1, a) in &n1[i].terms {
            let a = if sign < 0 { a.checked_neg()? } else { a };
            for &(e2, b) in &n2[j].terms {
                let k = (e1 + e2 - base) as usize;
                row[k] = row[k].checked_add(a.checked_mul(b)?)?;
            }
        }
    }
    let den = &d1 * &d2;
    if let Some(out) = finish_cyclotomic(&acc, &den, delta, outputs, max_loops, width, base) {
        return Some(out);
    }
    let mut dpow = vec![LaurentPoly::one()];
    for _ in 1..max_loops {
        dpow.push(dpow.last().unwrap() * delta.num());
    }
    let mut out = Vec::with_capacity(outputs);
    for s in 0..outputs {
        let mut num = LaurentPoly::zero();
        for (l, dp) in dpow.iter().enumerate() {
            let off = (s * max_loops + l) * width;
            let row = &acc[off..off + width];
            if row.iter().all(|x| *x == 0) {
                continue;
            }
            let p = LaurentPoly::from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(k, x)| (base + k as i64, Rational::from_integer((*x).into()))),
            );
            num = &num + &(&p * dp);
        }
        out.push(RatFunc::new(num, den.clone()).expect("nonzero denominator"));
    }
    Some(out)
}

/// Assembles each output numerator in integer arithmetic and reduces it
/// against a cyclotomic factorization of the shared denominator.
fn finish_cyclotomic(
    acc: &[i128],
    den: &LaurentPoly,
    delta: &RatFunc,
    outputs: usize,
    max_loops: usize,
    width: usize,
    base: i64,
) -> Option<Vec<RatFunc>> {
    let fd = FactoredDen::new(den)?;
    let dl = delta.num().low_degree().unwrap_or(0);
    let dcoeffs: Vec<(i64, i128)> = delta
        .num()
        .terms()
        .map(|(e, c)| c.is_integer().then(|| c.to_integer().to_i128()).flatten().map(|c| (e - dl, c)))
        .collect::<Option<_>>()?;
    let ddeg = dcoeffs.iter().map(|t| t.0).max().unwrap_or(0) as usize;
    // dense powers of δ's numerator, exponents offset by l·dl
    let mut dpow: Vec<Vec<i128>> = vec![vec![1]];
    for _ in 1..max_loops {
        let prev = dpow.last().unwrap();
        let mut next = vec![0i128; prev.len() + ddeg];
        for (i, &x) in prev.iter().enumerate() {
            for &(e, c) in &dcoeffs {
                next[i + e as usize] = next[i + e as usize].checked_add(x.checked_mul(c)?)?;
            }
        }
        dpow.push(next);
    }
    let top = (max_loops - 1) as i64;
    let low = base + (dl * top).min(0);
    let len = width + dpow.last().unwrap().len() - 1 + (dl.unsigned_abs() as usize) * top as usize;
    let mut out = Vec::with_capacity(outputs);
    let mut num = vec![0i128; len];
    for s in 0..outputs {
        num.iter_mut().for_each(|x| *x = 0);
        for (l, dp) in dpow.iter().enumerate() {
            let off = (s * max_loops + l) * width;
            let row = &acc[off..off + width];
            let shift = (base + dl * l as i64 - low) as usize;
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (m, &y) in dp.iter().enumerate() {
                    let t = shift + k + m;
                    num[t] = num[t].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
        out.push(fd.reduce(low, &num)?);
    }
    Some(out)
}

fn accumulate_slow(
    c1: &[&RatFunc],
    c2: &[&RatFunc],
    slots: &[(u32, u8, i8)],
    outputs: usize,
    delta: &RatFunc,
) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero(); outputs];
    let n2len = c2.len();
    for (idx, &(slot, loops, sign)) in slots.iter().enumerate() {
        let (i, j) = (idx / n2len, idx % n2len);
        let mut v = (c1[i] * c2[j]).scale_int(sign as i64);
        for _ in 0..loops {
            v = &v * delta;
        }
        out[slot as usize] = &out[slot as usize] + &v;
    }
    out
}

// ---------------------------------------------------------------------------
// Dyck sequences

/// `+1` under the left end and `−1` under the right end of every cap.
pub fn dyck_sequence(d: &MatchingDiagram) -> Result<Vec<i8>> {
    if d.target() != 0 {
        return Err(Error::InvalidArgument("Dyck sequences are defined for cap diagrams m -> 0".into()));
    }
    let pr = d.partner_raw();
    Ok((0..d.source()).map(|i| if (pr[i] as usize) > i { 1 } else { -1 }).collect())
}

/// The cap diagram with a given Dyck sequence.
pub fn from_dyck_sequence(s: &[i8]) -> Result<MatchingDiagram> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (i, &x) in s.iter().enumerate() {
        match x {
            1 => stack.push(i),
            -1 => {
                let j = stack.pop().ok_or_else(|| Error::InvalidArgument("negative prefix sum".into()))?;
                pairs.push((Point::Bottom(j), Point::Bottom(i)));
            }
            _ => return Err(Error::InvalidArgument("entries must be ±1".into())),
        }
    }
    if !stack.is_empty() {
        return Err(Error::InvalidArgument("sequence does not sum to zero".into()));
    }
    MatchingDiagram::from_pairs(s.len(), 0, &pairs)
}

/// `s ≤ t` iff every prefix sum of `s` is at most the matching prefix sum of `t`.
pub fn dyck_leq(s: &[i8], t: &[i8]) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::ShapeMismatch("Dyck sequences of different lengths".into()));
    }
    let (mut a, mut b) = (0i64, 0i64);
    for (x, y) in s.iter().zip(t) {
        a += *x as i64;
        b += *y as i64;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub pairs: Vec<[String; 2]>,
    pub coeff: CoeffJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: usize,
    pub target: usize,
    pub parity: u8,
    pub terms: Vec<TermJson>,
}

impl MorphismJson {
    pub(crate) fn from_parts<'a>(
        source: usize,
        target: usize,
        parity: Parity,
        terms: impl Iterator<Item = (&'a MatchingDiagram, &'a RatFunc)>,
    ) -> Self {
        let terms = terms
            .map(|(d, c)| TermJson {
                pairs: d.pairs().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
                coeff: CoeffJson { num: c.num().to_string(), den: c.den().to_string() },
            })
            .collect();
        Self { source, target, parity: parity.bit(), terms }
    }

    pub(crate) fn parse_terms(&self) -> Result<Vec<(MatchingDiagram, RatFunc)>> {
        self.terms
            .iter()
            .map(|t| {
                let pairs = t
                    .pairs
                    .iter()
                    .map(|[a, b]| Ok((a.parse::<Point>()?, b.parse::<Point>()?)))
                    .collect::<Result<Vec<_>>>()?;
                let d = MatchingDiagram::from_pairs(self.source, self.target, &pairs)?;
                let c = RatFunc::new(LaurentPoly::parse(&t.coeff.num)?, LaurentPoly::parse(&t.coeff.den)?)?;
                Ok((d, c))
            })
            .collect()
    }
}

impl Stl {
    pub fn to_json(&self, f: &TLMorphism) -> String {
        serde_json::to_string(&MorphismJson::from_parts(f.source, f.target, f.parity, f.terms.iter()))
            .expect("serializable")
    }

    pub fn from_json(&self, s: &str) -> Result<TLMorphism> {
        let j: MorphismJson =
            serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        let m = self.from_terms(j.source, j.target, j.parse_terms()?)?;
        if m.parity.bit() != j.parity {
            return Err(Error::MixedParity("declared parity disagrees with the hom-space".into()));
        }
        Ok(m)
    }
}

/// Catalan numbers `C_k`, as `u128`.
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

impl crate::envelope::Supercategory for Stl {
    type Object = usize;
    type Morphism = TLMorphism;

    fn source(&self, f: &TLMorphism) -> usize {
        f.source
    }

    fn target(&self, f: &TLMorphism) -> usize {
        f.target
    }

    fn parity(&self, f: &TLMorphism) -> Parity {
        f.parity
    }

    fn identity(&self, x: &usize) -> TLMorphism {
        Stl::identity(self, *x)
    }

    fn compose(&self, f: &TLMorphism, g: &TLMorphism) -> Result<TLMorphism> {
        Stl::compose(self, f, g)
    }

    fn add(&self, f: &TLMorphism, g: &TLMorphism) -> Result<TLMorphism> {
        f.add(g)
    }

    fn neg(&self, f: &TLMorphism) -> TLMorphism {
        f.neg()
    }

    fn is_zero(&self, f: &TLMorphism) -> bool {
        f.is_zero()
    }

    fn hom_basis(&self, x: &usize, y: &usize) -> Vec<TLMorphism> {
        enumerate_basis(*x, *y).into_iter().map(|d| self.single(d, RatFunc::one())).collect()
    }

    fn objects(&self, bound: usize) -> Vec<usize> {
        (0..=bound).collect()
    }

    fn is_monoidal(&self) -> bool {
        true
    }

    fn tensor_objects(&self, x: &usize, y: &usize) -> Result<usize> {
        Ok(x + y)
    }

    fn tensor(&self, f: &TLMorphism, g: &TLMorphism) -> Result<TLMorphism> {
        Ok(Stl::tensor(self, f, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn word(src: usize, layers: &[(usize, Generator, usize)]) -> LayerWord {
        LayerWord::new(src, layers.iter().map(|&(l, g, r)| Layer::new(l, g, r)).collect()).unwrap()
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(3, 3).len(), 5);
        assert_eq!(enumerate_basis(1, 2).len(), 0);
        assert_eq!(enumerate_basis(4, 0).len(), 2);
        assert_eq!(enumerate_basis(0, 0).len(), 1);
        for d in enumerate_basis(4, 4) {
            assert!(d.is_planar());
        }
    }

    #[test]
    fn canonical_word_examples() {
        let stl = Stl::odd();
        assert!(stl.canonical_word(&MatchingDiagram::identity(3)).unwrap().is_empty());
        let nested = MatchingDiagram::from_pairs(
            4,
            0,
            &[(Point::Bottom(0), Point::Bottom(3)), (Point::Bottom(1), Point::Bottom(2))],
        )
        .unwrap();
        let w = stl.canonical_word(&nested).unwrap();
        assert_eq!(w.layers(), &[Layer::new(1, Cap, 1), Layer::new(0, Cap, 0)]);
    }

    #[test]
    fn relations() {
        let stl = Stl::odd();
        let right = stl.normalize(&word(1, &[(1, Cup, 0), (0, Cap, 1)])).unwrap();
        assert_eq!(right, stl.identity(1));
        let left = stl.normalize(&word(1, &[(0, Cup, 1), (1, Cap, 0)])).unwrap();
        assert_eq!(left, stl.identity(1).neg());
        let bubble = stl.normalize(&word(0, &[(0, Cup, 0), (0, Cap, 0)])).unwrap();
        assert_eq!(bubble.to_string(), "(-q + q^-1) · [empty]");
    }

    #[test]
    fn reordered_caps_pick_up_a_sign() {
        let stl = Stl::odd();
        let w = stl.normalize(&word(4, &[(2, Cap, 0), (0, Cap, 0)])).unwrap();
        let side = MatchingDiagram::from_pairs(
            4,
            0,
            &[(Point::Bottom(0), Point::Bottom(1)), (Point::Bottom(2), Point::Bottom(3))],
        )
        .unwrap();
        assert_eq!(w.coeff(&side), RatFunc::from_int(-1));
    }

    #[test]
    fn double_bubble_sign() {
        let stl = Stl::odd();
        let caps = stl.tensor(&stl.cap(), &stl.cap());
        let cups = stl.tensor(&stl.cup(), &stl.cup());
        let v = stl.compose(&caps, &cups).unwrap();
        let d2 = stl.delta() * stl.delta();
        assert_eq!(v, stl.identity(0).scale(&-d2));
    }

    #[test]
    fn compose_matches_direct_normalization() {
        let stl = Stl::odd();
        for m in 0..=4 {
            for k in 0..=4 {
                for n in 0..=4 {
                    if (m + k) % 2 == 1 || (k + n) % 2 == 1 {
                        continue;
                    }
                    for d2 in enumerate_basis(m, k) {
                        for d1 in enumerate_basis(k, n) {
                            let fast = stl.compose_basis(&d1, &d2).unwrap();
                            let slow = stl.stack_words(&d1, &d2);
                            assert_eq!(fast, slow, "{d1:?} after {d2:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dyck_examples() {
        let nested = from_dyck_sequence(&[1, 1, -1, -1]).unwrap();
        assert_eq!(nested.caps(), vec![(0, 3), (1, 2)]);
        assert_eq!(dyck_sequence(&nested).unwrap(), vec![1, 1, -1, -1]);
        assert!(dyck_leq(&[1, -1, 1, -1], &[1, 1, -1, -1]).unwrap());
        assert!(!dyck_leq(&[1, 1, -1, -1], &[1, -1, 1, -1]).unwrap());
        assert!(dyck_leq(&[1, -1], &[1, -1, 1, -1]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let stl = Stl::odd();
        let f = stl.tensor(&stl.cup(), &stl.identity(1)).scale(&"(q^2 - 1)/(q + 3)".parse().unwrap());
        let s = stl.to_json(&f);
        let g = stl.from_json(&s).unwrap();
        assert_eq!(f, g);
        assert_eq!(stl.to_json(&g), s);
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }
}
