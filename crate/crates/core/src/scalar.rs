use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Commutative ring with identity. Recurrences and matrix powers only need
/// this much structure, so they run unchanged over integers, `Z[sqrt(w)]`
/// and polynomials.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + std::ops::Sub<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + std::ops::Sub<Output = T> + Neg<Output = T>
{
}

/// Exact signed integer type: `BigInt` for real work, `i64`/`i128` for
/// bounded scans.
pub trait Scalar:
    Ring + Integer + Signed + Roots + FromPrimitive + ToPrimitive + Hash + Display
{
}

impl<T> Scalar for T where
    T: Ring + Integer + Signed + Roots + FromPrimitive + ToPrimitive + Hash + Display
{
}
