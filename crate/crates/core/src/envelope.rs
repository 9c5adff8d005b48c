//! Π-envelopes, underlying Π-categories and associated supercategories.
//!
//! The envelope `A_π` of a supercategory `A` has objects `Π^a λ` (`a ∈ Z/2`)
//! and morphisms `f_a^b : Π^a λ → Π^b μ` of parity `|f| + a + b`; composition
//! is `f^c_b ∘ g^b_a = (f ∘ g)^c_a`. Everything here is generic over a
//! [`Supercategory`] handle, so the same code serves `STL`, `SB` and toy
//! one-object examples.

use std::fmt::{self, Debug};

use crate::error::{Error, Result};
use crate::superlinalg::Parity;

/// The operations the envelope needs from a supercategory.
///
/// Morphisms are homogeneous. The monoidal methods are optional; their
/// defaults report an unsupported operation.
pub trait Supercategory {
    type Object: Clone + PartialEq + Debug;
    type Morphism: Clone + PartialEq + Debug;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;
    fn parity(&self, f: &Self::Morphism) -> Parity;
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    /// `f ∘ g`, `g` first.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn add(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn neg(&self, f: &Self::Morphism) -> Self::Morphism;
    fn is_zero(&self, f: &Self::Morphism) -> bool;
    /// A homogeneous basis of `Hom(x, y)`.
    fn hom_basis(&self, x: &Self::Object, y: &Self::Object) -> Vec<Self::Morphism>;
    /// Objects up to a size bound, for truncated checks.
    fn objects(&self, bound: usize) -> Vec<Self::Object>;

    fn is_monoidal(&self) -> bool {
        false
    }

    fn tensor_objects(&self, _x: &Self::Object, _y: &Self::Object) -> Result<Self::Object> {
        Err(Error::Unsupported("this supercategory has no tensor product".into()))
    }

    fn tensor(&self, _f: &Self::Morphism, _g: &Self::Morphism) -> Result<Self::Morphism> {
        Err(Error::Unsupported("this supercategory has no tensor product".into()))
    }
}

/// `Π^shift base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiObject<O> {
    pub base: O,
    pub shift: Parity,
}

impl<O> PiObject<O> {
    pub fn new(base: O, shift: Parity) -> Self {
        Self { base, shift }
    }
}

impl<O: Clone> PiObject<O> {
    /// `Π(Π^a λ) = Π^{a+1} λ`.
    pub fn pi(&self) -> Self {
        Self { base: self.base.clone(), shift: self.shift.flip() }
    }
}

impl<O: fmt::Display> fmt::Display for PiObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            Parity::Even => write!(f, "{}", self.base),
            Parity::Odd => write!(f, "Π{}", self.base),
        }
    }
}

/// `base^{target_shift}_{source_shift}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiMorphism<M> {
    pub base: M,
    pub source_shift: Parity,
    pub target_shift: Parity,
}

impl<M> PiMorphism<M> {
    pub fn new(base: M, source_shift: Parity, target_shift: Parity) -> Self {
        Self { base, source_shift, target_shift }
    }
}

/// The Π-envelope `A_π` of a supercategory.
pub struct Envelope<'a, C> {
    cat: &'a C,
}

impl<'a, C: Supercategory> Envelope<'a, C> {
    pub fn new(cat: &'a C) -> Self {
        Self { cat }
    }

    pub fn base(&self) -> &'a C {
        self.cat
    }

    pub fn source(&self, f: &PiMorphism<C::Morphism>) -> PiObject<C::Object> {
        PiObject::new(self.cat.source(&f.base), f.source_shift)
    }

    pub fn target(&self, f: &PiMorphism<C::Morphism>) -> PiObject<C::Object> {
        PiObject::new(self.cat.target(&f.base), f.target_shift)
    }

    /// `|f| + a + b`.
    pub fn parity(&self, f: &PiMorphism<C::Morphism>) -> Parity {
        self.cat.parity(&f.base) + f.source_shift + f.target_shift
    }

    pub fn identity(&self, x: &PiObject<C::Object>) -> PiMorphism<C::Morphism> {
        PiMorphism::new(self.cat.identity(&x.base), x.shift, x.shift)
    }

    /// `f^c_b ∘ g^b_a = (f ∘ g)^c_a`.
    pub fn compose(&self, f: &PiMorphism<C::Morphism>, g: &PiMorphism<C::Morphism>) -> Result<PiMorphism<C::Morphism>> {
        if f.source_shift != g.target_shift {
            return Err(Error::ArityMismatch(format!(
                "envelope shifts do not match: {} after {}",
                f.source_shift, g.target_shift
            )));
        }
        Ok(PiMorphism::new(self.cat.compose(&f.base, &g.base)?, g.source_shift, f.target_shift))
    }

    pub fn add(&self, f: &PiMorphism<C::Morphism>, g: &PiMorphism<C::Morphism>) -> Result<PiMorphism<C::Morphism>> {
        if (f.source_shift, f.target_shift) != (g.source_shift, g.target_shift) {
            return Err(Error::ArityMismatch("sum of envelope morphisms with different shifts".into()));
        }
        Ok(PiMorphism::new(self.cat.add(&f.base, &g.base)?, f.source_shift, f.target_shift))
    }

    pub fn neg(&self, f: &PiMorphism<C::Morphism>) -> PiMorphism<C::Morphism> {
        PiMorphism::new(self.cat.neg(&f.base), f.source_shift, f.target_shift)
    }

    pub fn is_zero(&self, f: &PiMorphism<C::Morphism>) -> bool {
        self.cat.is_zero(&f.base)
    }

    /// Basis of `Hom(Π^a λ, Π^b μ)`: the base basis with the shifts attached.
    pub fn hom_basis(&self, x: &PiObject<C::Object>, y: &PiObject<C::Object>) -> Vec<PiMorphism<C::Morphism>> {
        self.cat.hom_basis(&x.base, &y.base).into_iter().map(|f| PiMorphism::new(f, x.shift, y.shift)).collect()
    }

    /// Every `Π^a λ` with `λ` in the base truncation.
    pub fn objects(&self, bound: usize) -> Vec<PiObject<C::Object>> {
        self.cat
            .objects(bound)
            .into_iter()
            .flat_map(|o| [PiObject::new(o.clone(), Parity::Even), PiObject::new(o, Parity::Odd)])
            .collect()
    }

    /// `ζ_X = (1_λ)^a_{a+1} : ΠX → X`, odd.
    pub fn zeta(&self, x: &PiObject<C::Object>) -> PiMorphism<C::Morphism> {
        PiMorphism::new(self.cat.identity(&x.base), x.shift.flip(), x.shift)
    }

    /// `ζ_X⁻¹ : X → ΠX`.
    pub fn zeta_inv(&self, x: &PiObject<C::Object>) -> PiMorphism<C::Morphism> {
        PiMorphism::new(self.cat.identity(&x.base), x.shift, x.shift.flip())
    }

    /// `Πf`, determined by `ζ_Y ∘ Πf = (−1)^{|f|} f ∘ ζ_X`.
    pub fn pi_morphism(&self, f: &PiMorphism<C::Morphism>) -> PiMorphism<C::Morphism> {
        let g = PiMorphism::new(f.base.clone(), f.source_shift.flip(), f.target_shift.flip());
        if self.parity(f).is_odd() {
            self.neg(&g)
        } else {
            g
        }
    }

    /// `ξ_X = ζ_X ∘ Πζ_X : Π²X → X`.
    pub fn xi(&self, x: &PiObject<C::Object>) -> Result<PiMorphism<C::Morphism>> {
        self.compose(&self.zeta(x), &self.pi_morphism(&self.zeta(x)))
    }

    /// `(Π^a λ) ⊗ (Π^c μ) = Π^{a+c}(λ ⊗ μ)`.
    pub fn tensor_objects(&self, x: &PiObject<C::Object>, y: &PiObject<C::Object>) -> Result<PiObject<C::Object>> {
        Ok(PiObject::new(self.cat.tensor_objects(&x.base, &y.base)?, x.shift + y.shift))
    }

    /// `f^b_a ⊗ g^d_c = (−1)^{a|g| + |f|d + ad + ac} (f ⊗ g)^{b+d}_{a+c}`, with
    /// `|f|`, `|g|` the parities in the base category.
    pub fn tensor(&self, f: &PiMorphism<C::Morphism>, g: &PiMorphism<C::Morphism>) -> Result<PiMorphism<C::Morphism>> {
        if !self.cat.is_monoidal() {
            return Err(Error::Unsupported("the base supercategory is not monoidal".into()));
        }
        let a = f.source_shift.bit();
        let (c, d) = (g.source_shift.bit(), g.target_shift.bit());
        let (pf, pg) = (self.cat.parity(&f.base).bit(), self.cat.parity(&g.base).bit());
        let e = a * pg + pf * d + a * d + a * c;
        let base = self.cat.tensor(&f.base, &g.base)?;
        let base = if e % 2 == 1 { self.cat.neg(&base) } else { base };
        Ok(PiMorphism::new(base, f.source_shift + g.source_shift, f.target_shift + g.target_shift))
    }
}

// ---------------------------------------------------------------------------
// underlying Π-category

/// The underlying Π-category of an envelope, restricted to a finite set of
/// objects: even morphisms only, with `Π` and `ξ : Π² ⇒ I`.
pub struct PiCategory<'e, 'a, C: Supercategory> {
    env: &'e Envelope<'a, C>,
    objects: Vec<PiObject<C::Object>>,
}

pub fn underlying_pi_category<'e, 'a, C: Supercategory>(
    env: &'e Envelope<'a, C>,
    bound: usize,
) -> PiCategory<'e, 'a, C> {
    PiCategory { env, objects: env.objects(bound) }
}

impl<'e, 'a, C: Supercategory> PiCategory<'e, 'a, C> {
    pub fn envelope(&self) -> &'e Envelope<'a, C> {
        self.env
    }

    pub fn objects(&self) -> &[PiObject<C::Object>] {
        &self.objects
    }

    /// The even part of `Hom_{A_π}(x, y)`.
    pub fn hom(&self, x: &PiObject<C::Object>, y: &PiObject<C::Object>) -> Vec<PiMorphism<C::Morphism>> {
        self.env.hom_basis(x, y).into_iter().filter(|f| !self.env.parity(f).is_odd()).collect()
    }

    pub fn pi_object(&self, x: &PiObject<C::Object>) -> PiObject<C::Object> {
        x.pi()
    }

    pub fn pi_morphism(&self, f: &PiMorphism<C::Morphism>) -> Result<PiMorphism<C::Morphism>> {
        if self.env.parity(f).is_odd() {
            return Err(Error::MixedParity("a Π-category only has even morphisms".into()));
        }
        Ok(self.env.pi_morphism(f))
    }

    pub fn xi(&self, x: &PiObject<C::Object>) -> Result<PiMorphism<C::Morphism>> {
        self.env.xi(x)
    }

    /// `ξ_{ΠX} = Π(ξ_X)` for every object of the truncation.
    pub fn check_xi_commutes(&self) -> Result<()> {
        for x in &self.objects {
            let lhs = self.xi(&x.pi())?;
            let rhs = self.pi_morphism(&self.xi(x)?)?;
            if lhs != rhs {
                return Err(Error::Validation(format!("ξΠ != Πξ at {x:?}")));
            }
        }
        Ok(())
    }

    /// Naturality of `ξ`: `ξ_Y ∘ Π²f = f ∘ ξ_X` on every basis morphism.
    pub fn check_xi_natural(&self) -> Result<()> {
        for x in &self.objects {
            for y in &self.objects {
                for f in self.hom(x, y) {
                    let ppf = self.pi_morphism(&self.pi_morphism(&f)?)?;
                    let lhs = self.env.compose(&self.xi(y)?, &ppf)?;
                    let rhs = self.env.compose(&f, &self.xi(x)?)?;
                    if lhs != rhs {
                        return Err(Error::Validation(format!("ξ is not natural at {f:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// associated supercategory

/// Which even isomorphism `Π²ν → ν` is used to compose two odd morphisms.
///
/// `ZetaPiZeta` is `ζ_ν ∘ Πζ_ν` (the `ξ` of the Π-category, which is `−1` on
/// envelope objects). `ZetaZetaPi` is `ζ_ν ∘ ζ_{Πν} = −ξ_ν`. Only the latter
/// makes `T` a functor and the round trip the identity; the former is kept so
/// the discrepancy stays visible in tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiConvention {
    ZetaPiZeta,
    ZetaZetaPi,
}

/// A homogeneous morphism `X → Y` of the associated supercategory: an even
/// morphism `X → Y` (even case) or `X → ΠY` (odd case) of the Π-category.
#[derive(Debug, Clone, PartialEq)]
pub struct HatMorphism<O, M> {
    pub parity: Parity,
    pub source: PiObject<O>,
    pub target: PiObject<O>,
    pub inner: PiMorphism<M>,
}

pub struct AssociatedSupercategory<'p, 'e, 'a, C: Supercategory> {
    p: &'p PiCategory<'e, 'a, C>,
    convention: XiConvention,
}

/// Builds `Â` from Π-category data; fails if `ξΠ ≠ Πξ`.
pub fn associated_supercategory<'p, 'e, 'a, C: Supercategory>(
    p: &'p PiCategory<'e, 'a, C>,
    convention: XiConvention,
) -> Result<AssociatedSupercategory<'p, 'e, 'a, C>> {
    p.check_xi_commutes()?;
    Ok(AssociatedSupercategory { p, convention })
}

type Hat<C> = HatMorphism<<C as Supercategory>::Object, <C as Supercategory>::Morphism>;

impl<'p, 'e, 'a, C: Supercategory> AssociatedSupercategory<'p, 'e, 'a, C> {
    fn env(&self) -> &'e Envelope<'a, C> {
        self.p.env
    }

    fn odd_xi(&self, z: &PiObject<C::Object>) -> Result<PiMorphism<C::Morphism>> {
        let xi = self.p.xi(z)?;
        Ok(match self.convention {
            XiConvention::ZetaPiZeta => xi,
            XiConvention::ZetaZetaPi => self.env().neg(&xi),
        })
    }

    /// `ĝ ∘ f̂`, by the four parity cases.
    pub fn compose_hat(&self, g: &Hat<C>, f: &Hat<C>) -> Result<Hat<C>> {
        if f.target != g.source {
            return Err(Error::ArityMismatch("associated supercategory: objects do not match".into()));
        }
        let env = self.env();
        let inner = match (g.parity, f.parity) {
            (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Even) => env.compose(&g.inner, &f.inner)?,
            (Parity::Even, Parity::Odd) => env.compose(&self.p.pi_morphism(&g.inner)?, &f.inner)?,
            (Parity::Odd, Parity::Odd) => {
                let pg = env.compose(&self.p.pi_morphism(&g.inner)?, &f.inner)?;
                env.compose(&self.odd_xi(&g.target)?, &pg)?
            }
        };
        Ok(HatMorphism { parity: g.parity + f.parity, source: f.source.clone(), target: g.target.clone(), inner })
    }

    /// Basis of `Hom_Â(x, y)`: even part `Hom(x, y)`, odd part `Hom(x, Πy)`.
    pub fn hom_basis_hat(&self, x: &PiObject<C::Object>, y: &PiObject<C::Object>) -> Vec<Hat<C>> {
        let even = self.p.hom(x, y).into_iter().map(|inner| HatMorphism {
            parity: Parity::Even,
            source: x.clone(),
            target: y.clone(),
            inner,
        });
        let odd = self.p.hom(x, &y.pi()).into_iter().map(|inner| HatMorphism {
            parity: Parity::Odd,
            source: x.clone(),
            target: y.clone(),
            inner,
        });
        even.chain(odd).collect()
    }

    /// `ζ̂_X`: the identity of `ΠX` seen as an odd morphism `ΠX → X`.
    pub fn zeta_hat(&self, x: &PiObject<C::Object>) -> Hat<C> {
        let px = x.pi();
        HatMorphism { parity: Parity::Odd, source: px.clone(), target: x.clone(), inner: self.env().identity(&px) }
    }

    /// `Π̂f̂ = Πf` (even) or `−Πf` (odd).
    pub fn pi_hat(&self, f: &Hat<C>) -> Result<Hat<C>> {
        let pf = self.p.pi_morphism(&f.inner)?;
        let inner = if f.parity.is_odd() { self.env().neg(&pf) } else { pf };
        Ok(HatMorphism { parity: f.parity, source: f.source.pi(), target: f.target.pi(), inner })
    }

    /// `ξ̂_X = ζ̂_X ∘ Π̂ζ̂_X`, as an even morphism of the Π-category.
    pub fn xi_hat(&self, x: &PiObject<C::Object>) -> Result<PiMorphism<C::Morphism>> {
        let z = self.zeta_hat(x);
        Ok(self.compose_hat(&z, &self.pi_hat(&z)?)?.inner)
    }

    /// `T(f̂) = f` (even) or `ζ_Y ∘ f` (odd).
    pub fn t_map(&self, f: &Hat<C>) -> Result<PiMorphism<C::Morphism>> {
        match f.parity {
            Parity::Even => Ok(f.inner.clone()),
            Parity::Odd => self.env().compose(&self.env().zeta(&f.target), &f.inner),
        }
    }
}

/// Outcome of the round-trip check on a truncation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundTripReport {
    pub pairs_checked: usize,
    pub functoriality_failures: usize,
    pub xi_mismatches: usize,
    pub bijective: bool,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.functoriality_failures == 0 && self.xi_mismatches == 0 && self.bijective
    }
}

/// Builds the underlying Π-category of `A_π` on objects up to `bound`, its
/// associated supercategory, and checks that `T` is a functor that is
/// bijective on basis morphisms and that `ξ̂ = ξ`.
pub fn round_trip_check<C: Supercategory>(
    env: &Envelope<'_, C>,
    bound: usize,
    convention: XiConvention,
) -> Result<RoundTripReport> {
    let p = underlying_pi_category(env, bound);
    let hat = associated_supercategory(&p, convention)?;
    let objs = p.objects().to_vec();
    let mut report = RoundTripReport { bijective: true, ..Default::default() };
    for x in &objs {
        if hat.xi_hat(x)? != p.xi(x)? {
            report.xi_mismatches += 1;
        }
        for y in &objs {
            // T sends the basis of Hom_Â(x, y) onto ± the basis of Hom_{A_π}(x, y)
            let images: Vec<_> = hat.hom_basis_hat(x, y).iter().map(|f| hat.t_map(f)).collect::<Result<_>>()?;
            let target = env.hom_basis(x, y);
            if images.len() != target.len()
                || !target.iter().all(|b| images.iter().any(|i| *i == *b || *i == env.neg(b)))
            {
                report.bijective = false;
            }
            for f in hat.hom_basis_hat(x, y) {
                let tf = hat.t_map(&f)?;
                for z in &objs {
                    for g in hat.hom_basis_hat(y, z) {
                        report.pairs_checked += 1;
                        let lhs = hat.t_map(&hat.compose_hat(&g, &f)?)?;
                        let rhs = env.compose(&hat.t_map(&g)?, &tf)?;
                        if lhs != rhs {
                            report.functoriality_failures += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// a one-object example

/// The Clifford superalgebra `Cl_1 = k[c]/(c² = 1)`, `c` odd, as a
/// supercategory with one object. Morphisms are `coeff · c^parity`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliffordCategory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    pub parity: Parity,
    pub coeff: crate::scalars::Rational,
}

impl CliffordElement {
    pub fn new(parity: Parity, coeff: i64) -> Self {
        Self { parity, coeff: crate::scalars::Rational::from_integer(coeff.into()) }
    }
}

impl Supercategory for CliffordCategory {
    type Object = ();
    type Morphism = CliffordElement;

    fn source(&self, _: &CliffordElement) {}
    fn target(&self, _: &CliffordElement) {}

    fn parity(&self, f: &CliffordElement) -> Parity {
        f.parity
    }

    fn identity(&self, _: &()) -> CliffordElement {
        CliffordElement::new(Parity::Even, 1)
    }

    fn compose(&self, f: &CliffordElement, g: &CliffordElement) -> Result<CliffordElement> {
        Ok(CliffordElement { parity: f.parity + g.parity, coeff: &f.coeff * &g.coeff })
    }

    fn add(&self, f: &CliffordElement, g: &CliffordElement) -> Result<CliffordElement> {
        if f.parity != g.parity {
            return Err(Error::MixedParity("sum of 1 and c".into()));
        }
        Ok(CliffordElement { parity: f.parity, coeff: &f.coeff + &g.coeff })
    }

    fn neg(&self, f: &CliffordElement) -> CliffordElement {
        CliffordElement { parity: f.parity, coeff: -&f.coeff }
    }

    fn is_zero(&self, f: &CliffordElement) -> bool {
        num_traits::Zero::is_zero(&f.coeff)
    }

    fn hom_basis(&self, _: &(), _: &()) -> Vec<CliffordElement> {
        vec![CliffordElement::new(Parity::Even, 1), CliffordElement::new(Parity::Odd, 1)]
    }

    fn objects(&self, _: usize) -> Vec<()> {
        vec![()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_is_an_odd_isomorphism() {
        let cl = CliffordCategory;
        let env = Envelope::new(&cl);
        for x in env.objects(0) {
            let z = env.zeta(&x);
            assert!(env.parity(&z).is_odd());
            assert_eq!(env.compose(&z, &env.zeta_inv(&x)).unwrap(), env.identity(&x));
            assert_eq!(env.compose(&env.zeta_inv(&x), &z).unwrap(), env.identity(&x.pi()));
        }
    }

    #[test]
    fn xi_is_minus_identity() {
        let cl = CliffordCategory;
        let env = Envelope::new(&cl);
        for x in env.objects(0) {
            assert_eq!(env.xi(&x).unwrap(), env.neg(&env.identity(&x)));
        }
        let p = underlying_pi_category(&env, 0);
        p.check_xi_commutes().unwrap();
        p.check_xi_natural().unwrap();
    }

    #[test]
    fn tensor_needs_a_monoidal_base() {
        let cl = CliffordCategory;
        let env = Envelope::new(&cl);
        let x = env.objects(0)[0].clone();
        assert!(matches!(env.tensor(&env.identity(&x), &env.identity(&x)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn clifford_round_trip() {
        let cl = CliffordCategory;
        let env = Envelope::new(&cl);
        assert!(round_trip_check(&env, 0, XiConvention::ZetaZetaPi).unwrap().passed());
        let literal = round_trip_check(&env, 0, XiConvention::ZetaPiZeta).unwrap();
        assert!(literal.functoriality_failures > 0);
        assert!(literal.xi_mismatches > 0);
    }
}
