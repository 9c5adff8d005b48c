//! Finite-dimensional superspaces and super linear maps.
//!
//! Bases are ordered; tensor products use the flattened lexicographic basis,
//! so `(U ⊗ V) ⊗ W` and `U ⊗ (V ⊗ W)` are literally the same space.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// An element of `Z/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_int(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        self + Parity::Odd
    }

    /// `(−1)^{self · other}`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    /// `(−1)^{self}`.
    pub fn sign(self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_int((self.bit() + rhs.bit()) as i64)
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A dense matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &S) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = slot.add(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Matrix<T>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch("matrix sum".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rank by Gaussian elimination over the scalar field.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, rank * m.cols + j);
                }
            }
            let inv = m.get(rank, col).inv().expect("pivot is nonzero");
            for r in (rank + 1)..m.rows {
                let f = m.get(r, col).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(r, j).sub(&f.mul(m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A superspace given by an ordered, parity-labelled basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(basis: Vec<(String, Parity)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (l, _) in &basis {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidArgument(format!("duplicate basis label {l}")));
            }
        }
        let (labels, parities) = basis.into_iter().unzip();
        Ok(Self { labels, parities })
    }

    /// The ground field `k`, one even basis vector.
    pub fn unit() -> Self {
        Self { labels: vec!["1".into()], parities: vec![Parity::Even] }
    }

    pub fn zero() -> Self {
        Self { labels: vec![], parities: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// `V ⊗ W` with basis `(v, w)` in lexicographic order.
///
/// The unit space `k` is strictly neutral: `k ⊗ V = V ⊗ k = V`.
pub fn tensor_space(v: &SuperSpace, w: &SuperSpace) -> SuperSpace {
    if *v == SuperSpace::unit() {
        return w.clone();
    }
    if *w == SuperSpace::unit() {
        return v.clone();
    }
    let mut labels = Vec::with_capacity(v.dim() * w.dim());
    let mut parities = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            labels.push(format!("{}⊗{}", v.labels[i], w.labels[j]));
            parities.push(v.parities[i] + w.parities[j]);
        }
    }
    SuperSpace { labels, parities }
}

/// `ΠV`: same basis, opposite grading.
pub fn parity_shift(v: &SuperSpace) -> SuperSpace {
    SuperSpace { labels: v.labels.clone(), parities: v.parities.iter().map(|p| p.flip()).collect() }
}

/// A linear map between superspaces, stored as its even and odd parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperMap<S: Scalar> {
    source: SuperSpace,
    target: SuperSpace,
    even: Matrix<S>,
    odd: Matrix<S>,
}

impl<S: Scalar> SuperMap<S> {
    /// Splits an arbitrary matrix into its even and odd parts.
    pub fn from_matrix(source: SuperSpace, target: SuperSpace, m: Matrix<S>) -> Result<Self> {
        if m.rows() != target.dim() || m.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map of dimension {} -> {}",
                m.rows(),
                m.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let mut even = Matrix::zeros(m.rows(), m.cols());
        let mut odd = Matrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let x = m.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if target.parity(i) == source.parity(j) {
                    even.set(i, j, x.clone());
                } else {
                    odd.set(i, j, x.clone());
                }
            }
        }
        Ok(Self { source, target, even, odd })
    }

    /// A homogeneous map; fails if `m` has entries of the wrong parity.
    pub fn homogeneous(source: SuperSpace, target: SuperSpace, parity: Parity, m: Matrix<S>) -> Result<Self> {
        let f = Self::from_matrix(source, target, m)?;
        let wrong = match parity {
            Parity::Even => &f.odd,
            Parity::Odd => &f.even,
        };
        if !wrong.is_zero() {
            return Err(Error::MixedParity(format!("matrix is not purely of parity {parity}")));
        }
        Ok(f)
    }

    pub fn identity(v: &SuperSpace) -> Self {
        Self {
            source: v.clone(),
            target: v.clone(),
            even: Matrix::identity(v.dim()),
            odd: Matrix::zeros(v.dim(), v.dim()),
        }
    }

    pub fn zero(source: SuperSpace, target: SuperSpace) -> Self {
        let (r, c) = (target.dim(), source.dim());
        Self { source, target, even: Matrix::zeros(r, c), odd: Matrix::zeros(r, c) }
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn even_part(&self) -> &Matrix<S> {
        &self.even
    }

    pub fn odd_part(&self) -> &Matrix<S> {
        &self.odd
    }

    pub fn part(&self, p: Parity) -> &Matrix<S> {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    /// The full matrix `f_0̄ + f_1̄`.
    pub fn matrix(&self) -> Matrix<S> {
        self.even.add(&self.odd).expect("parts share a shape")
    }

    /// `Some(p)` if homogeneous of parity `p`; the zero map counts as even.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.target != self.source {
            return Err(Error::ShapeMismatch("compose: target(g) != source(f)".into()));
        }
        let m = self.matrix().mul(&g.matrix())?;
        Self::from_matrix(g.source.clone(), self.target.clone(), m)
    }

    pub fn add(&self, g: &Self) -> Result<Self> {
        if g.source != self.source || g.target != self.target {
            return Err(Error::ShapeMismatch("sum of maps with different signatures".into()));
        }
        Ok(Self {
            source: self.source.clone(),
            target: self.target.clone(),
            even: self.even.add(&g.even)?,
            odd: self.odd.add(&g.odd)?,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<SuperMap<T>> {
        Ok(SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            even: self.even.try_map(&f)?,
            odd: self.odd.try_map(&f)?,
        })
    }
}

/// `f ⊗ g` with the Koszul rule `(f ⊗ g)(v ⊗ w) = (−1)^{|g||v|} f(v) ⊗ g(w)`,
/// applied per homogeneous part of `g` and per basis parity of `v`.
pub fn tensor_map<S: Scalar>(f: &SuperMap<S>, g: &SuperMap<S>) -> SuperMap<S> {
    let source = tensor_space(&f.source, &g.source);
    let target = tensor_space(&f.target, &g.target);
    let rows = f.target.dim() * g.target.dim();
    let cols = f.source.dim() * g.source.dim();
    let mut m = Matrix::zeros(rows, cols);
    let gr = g.target.dim();
    let gc = g.source.dim();
    for gp in [Parity::Even, Parity::Odd] {
        let gm = g.part(gp);
        if gm.is_zero() {
            continue;
        }
        let fm = f.matrix();
        for i1 in 0..fm.rows() {
            for j1 in 0..fm.cols() {
                let a = fm.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                let a = if gp.sign_with(f.source.parity(j1)) < 0 { a.neg() } else { a.clone() };
                for i2 in 0..gr {
                    for j2 in 0..gc {
                        let b = gm.get(i2, j2);
                        if !b.is_zero() {
                            m.add_at(i1 * gr + i2, j1 * gc + j2, &a.mul(b));
                        }
                    }
                }
            }
        }
    }
    SuperMap::from_matrix(source, target, m).expect("shapes agree by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn v() -> SuperSpace {
        SuperSpace::new(vec![("v1".into(), Parity::Even), ("v-1".into(), Parity::Odd)]).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn tensor_square_parities() {
        let vv = tensor_space(&v(), &v());
        assert_eq!(vv.parities(), &[Parity::Even, Parity::Odd, Parity::Odd, Parity::Even]);
        assert_eq!(tensor_space(&v(), &SuperSpace::zero()).dim(), 0);
    }

    #[test]
    fn parity_shift_flips() {
        let pv = parity_shift(&v());
        assert_eq!(pv.parities(), &[Parity::Odd, Parity::Even]);
        assert_eq!(parity_shift(&pv), v());
    }

    #[test]
    fn koszul_sign_on_odd_vector() {
        // g odd swapping the two basis vectors, f = id
        let g = SuperMap::homogeneous(
            v(),
            v(),
            Parity::Odd,
            Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(1), r(0)]]).unwrap(),
        )
        .unwrap();
        let t = tensor_map(&SuperMap::identity(&v()), &g).matrix();
        // (id ⊗ g)(v-1 ⊗ v1) = −v-1 ⊗ v-1
        assert_eq!(*t.get(3, 2), r(-1));
        assert_eq!(*t.get(1, 0), r(1));
    }

    #[test]
    fn homogeneity_is_enforced() {
        let m = Matrix::from_rows(vec![vec![r(1), r(1)], vec![r(0), r(1)]]).unwrap();
        assert!(SuperMap::homogeneous(v(), v(), Parity::Even, m.clone()).is_err());
        let f = SuperMap::from_matrix(v(), v(), m.clone()).unwrap();
        assert_eq!(f.parity(), None);
        assert_eq!(f.matrix(), m);
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::<Rational>::identity(3).rank(), 3);
    }
}
