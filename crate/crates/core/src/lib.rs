//! Exact arithmetic on the generalized Matiyasevich conics
//! `x^2 - sqrt(w)*x*y + y^2 = 1`, `(x + y - 1)^2 = w*x*y` and
//! `(x + y)^2 = w*(x + 1)*(y + 1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: the quadratic ring `Z[sqrt(w)]` with an exact total order.
//! * [`lrs`]: integer linear recurrences, the sequences `a`, `b`, `c`, `u`,
//!   matrix powers and characteristic-polynomial transforms.
//! * [`conics`]: membership, generators, brute-force oracles, Vieta descent
//!   and the maps between the three conics.
//! * [`polyid`]: exact polynomials over the rationals, Chebyshev and
//!   Morgan-Voyce families and symbolic identity checks.
//! * [`oeis`]: b-file parsing and comparison against reference sequences.
//!
//! The algebra is written once over generic scalars (see [`Scalar`] and
//! [`Ring`]); the aliases below pin the arbitrary-precision instances used
//! throughout the public API.

pub mod conics;
pub mod error;
pub mod exactnum;
pub mod lrs;
pub mod oeis;
pub mod polyid;
mod scalar;

pub use error::{Error, Result};
pub use scalar::{Ring, Scalar};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Element of `Z[sqrt(w)]` with arbitrary-precision parts.
pub type QuadInt = exactnum::Quad<BigInt>;
/// Machine-word instance used by the brute-force oracles.
pub type QuadI128 = exactnum::Quad<i128>;
/// Integer linear recurrence with arbitrary-precision terms.
pub type LrsSpec = lrs::Recurrence<BigInt>;
/// 2x2 matrix over `Z[sqrt(w)]`.
pub type QuadMatrix2 = lrs::Matrix2<QuadInt>;
/// Dense univariate polynomial with exact rational coefficients.
pub type Poly = polyid::DensePoly<BigRational>;
