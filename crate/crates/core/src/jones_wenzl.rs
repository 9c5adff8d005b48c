//! Super Jones-Wenzl projectors and the idempotent equivalences between them.
//!
//! `f_{n+1} = f_n ⊗ 1 + ([n]/[n+1]) · (f_n ⊗ 1)(1^{n−1} ⊗ cup)(1^{n−1} ⊗ cap)(f_n ⊗ 1)`,
//! `g_n = f_{n−1} ⊗ 1 − f_n`, and `u_n`, `v_n` are the two odd halves of `g_n`.

use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::scalars::{qint_ratio, RatFunc};
use crate::tl::{Stl, TLMorphism};

/// Memoized projectors over one `Stl`.
pub struct JonesWenzl {
    stl: Stl,
    table: Mutex<Vec<TLMorphism>>,
}

impl JonesWenzl {
    pub fn new(stl: Stl) -> Self {
        let f0 = stl.identity(0);
        Self { stl, table: Mutex::new(vec![f0]) }
    }

    pub fn stl(&self) -> &Stl {
        &self.stl
    }

    /// `[a]/[b]`
    fn ratio(&self, a: i64, b: i64) -> Result<RatFunc> {
        qint_ratio(a, b, self.stl.epsilon())
    }

    fn cap_at(&self, n: usize, i: usize) -> TLMorphism {
        self.stl.pad(&self.stl.cap(), i, n - 2 - i)
    }

    fn cup_at(&self, n: usize, i: usize) -> TLMorphism {
        self.stl.pad(&self.stl.cup(), i, n - 2 - i)
    }

    /// The projector `f_n`.
    pub fn jw(&self, n: usize) -> Result<TLMorphism> {
        let mut table = self.table.lock().unwrap();
        while table.len() <= n {
            let k = table.len() - 1;
            let fk = self.stl.tensor(&table[k], &self.stl.identity(1));
            let next = if k == 0 {
                fk
            } else {
                let c = self.ratio(k as i64, k as i64 + 1)?;
                let turn = self.turn_back(&fk, k + 1)?;
                fk.add(&turn.scale(&c))?
            };
            table.push(next);
        }
        Ok(table[n].clone())
    }

    /// `x ∘ (1^{n−2} ⊗ cup) ∘ (1^{n−2} ⊗ cap) ∘ x` for `x ∈ End(n)`.
    fn turn_back(&self, x: &TLMorphism, n: usize) -> Result<TLMorphism> {
        let lower = self.stl.compose(&self.cap_at(n, n - 2), x)?;
        let upper = self.stl.compose(x, &self.cup_at(n, n - 2))?;
        self.stl.compose(&upper, &lower)
    }

    /// Whether `(1^i ⊗ cap ⊗ 1^{n−2−i}) ∘ f_n = 0`.
    pub fn cap_annihilates(&self, n: usize, i: usize) -> Result<bool> {
        self.check_position(n, i)?;
        Ok(self.stl.compose(&self.cap_at(n, i), &self.jw(n)?)?.is_zero())
    }

    /// Whether `f_n ∘ (1^i ⊗ cup ⊗ 1^{n−2−i}) = 0`.
    pub fn cup_annihilates(&self, n: usize, i: usize) -> Result<bool> {
        self.check_position(n, i)?;
        Ok(self.stl.compose(&self.jw(n)?, &self.cup_at(n, i))?.is_zero())
    }

    fn check_position(&self, n: usize, i: usize) -> Result<()> {
        if n < 2 || i > n - 2 {
            return Err(Error::InvalidArgument(format!("no cap position {i} on {n} strands")));
        }
        Ok(())
    }

    /// Closes the rightmost strand: `(1^{n−1} ⊗ cap) ∘ (f ⊗ 1) ∘ (1^{n−1} ⊗ cup)`.
    pub fn partial_closure(&self, f: &TLMorphism) -> Result<TLMorphism> {
        let n = f.source();
        if f.target() != n {
            return Err(Error::ArityMismatch("partial closure needs an endomorphism".into()));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("nothing to close on 0 strands".into()));
        }
        let s = &self.stl;
        let g = s.compose(&s.tensor(f, &s.identity(1)), &self.cup_at(n + 1, n - 1))?;
        s.compose(&self.cap_at(n + 1, n - 1), &g)
    }

    fn check_n(n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
        }
        Ok(())
    }

    /// `g_n = −([n−1]/[n]) · (f_{n−1} ⊗ 1)(1^{n−2} ⊗ cup)(1^{n−2} ⊗ cap)(f_{n−1} ⊗ 1)`.
    pub fn gn(&self, n: usize) -> Result<TLMorphism> {
        Self::check_n(n)?;
        let x = self.stl.tensor(&self.jw(n - 1)?, &self.stl.identity(1));
        let c = -self.ratio(n as i64 - 1, n as i64)?;
        Ok(self.turn_back(&x, n)?.scale(&c))
    }

    /// `u_n = −([n−1]/[n]) · (f_{n−1} ⊗ 1) ∘ (1^{n−2} ⊗ cup)`, odd, `n−2 → n`.
    pub fn un(&self, n: usize) -> Result<TLMorphism> {
        Self::check_n(n)?;
        let x = self.stl.tensor(&self.jw(n - 1)?, &self.stl.identity(1));
        let c = -self.ratio(n as i64 - 1, n as i64)?;
        Ok(self.stl.compose(&x, &self.cup_at(n, n - 2))?.scale(&c))
    }

    /// `v_n = (1^{n−2} ⊗ cap) ∘ (f_{n−1} ⊗ 1)`, odd, `n → n−2`.
    pub fn vn(&self, n: usize) -> Result<TLMorphism> {
        Self::check_n(n)?;
        let x = self.stl.tensor(&self.jw(n - 1)?, &self.stl.identity(1));
        self.stl.compose(&self.cap_at(n, n - 2), &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::MatchingDiagram;

    #[test]
    fn small_projectors() {
        let jw = JonesWenzl::new(Stl::odd());
        let s = jw.stl();
        assert_eq!(jw.jw(0).unwrap(), s.identity(0));
        assert_eq!(jw.jw(1).unwrap(), s.identity(1));
        let e = s.compose(&s.cup(), &s.cap()).unwrap();
        let c = qint_ratio(1, 2, s.epsilon()).unwrap();
        assert_eq!(jw.jw(2).unwrap(), s.identity(2).add(&e.scale(&c)).unwrap());
    }

    #[test]
    fn idempotent_and_killed_by_caps() {
        let jw = JonesWenzl::new(Stl::odd());
        for n in 0..=5 {
            let f = jw.jw(n).unwrap();
            assert_eq!(jw.stl().compose(&f, &f).unwrap(), f, "n = {n}");
            assert!(f.coeff(&MatchingDiagram::identity(n)).is_one());
            for i in 0..n.saturating_sub(1) {
                assert!(jw.cap_annihilates(n, i).unwrap());
                assert!(jw.cup_annihilates(n, i).unwrap());
            }
        }
    }

    #[test]
    fn witnesses() {
        let jw = JonesWenzl::new(Stl::odd());
        let s = jw.stl();
        for n in 2..=5 {
            let (u, v, g) = (jw.un(n).unwrap(), jw.vn(n).unwrap(), jw.gn(n).unwrap());
            assert_eq!(s.compose(&u, &v).unwrap(), g);
            assert_eq!(s.compose(&v, &u).unwrap(), jw.jw(n - 2).unwrap());
        }
    }

    #[test]
    fn closure_of_identity_is_a_bubble() {
        let jw = JonesWenzl::new(Stl::odd());
        let s = jw.stl();
        assert_eq!(jw.partial_closure(&s.identity(1)).unwrap(), s.identity(0).scale(s.delta()));
        assert!(jw.partial_closure(&s.identity(0)).is_err());
    }
}
