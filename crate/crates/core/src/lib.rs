//! Exact computations in the odd Temperley-Lieb supercategory `STL(δ)` and the
//! odd Brauer supercategory `SB`.
//!
//! Everything is exact: diagram coefficients live in the field `Q(q)` of
//! rational functions, and every identity the crate checks is an equality of
//! normal forms.
//!
//! The main entry points:
//!
//! * [`tl::Stl`] — the odd (or classical) Temperley-Lieb category: basis
//!   enumeration, normalization of layered words, composition, tensor product.
//! * [`jones_wenzl::JonesWenzl`] — projectors `f_n`, complements `g_n`,
//!   witnesses `u_n`, `v_n`, partial closure.
//! * [`brauer::OddBrauer`] — the odd Brauer category with an even crossing.
//! * [`envelope`] — Π-envelopes, the underlying Π-category and the associated
//!   supercategory.
//! * [`osp`] — the `U_q(osp(1|2))` representation used as an oracle.
//! * [`k0`] — arithmetic in `Z^π[x, x⁻¹]`.
//! * [`expr`] — the small diagram expression language used by the `oddtl` binary.

pub mod brauer;
pub mod checks;
pub mod diagram;
pub mod envelope;
pub mod error;
pub mod expr;
pub mod jones_wenzl;
pub mod k0;
pub mod osp;
pub mod scalars;
pub mod superlinalg;
pub mod tl;

pub use error::{Error, Result};
pub use scalars::{Epsilon, LaurentPoly, RatFunc, Rational, Scalar};
pub use superlinalg::Parity;
