use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;

use crate::exactnum::check_radicand;
use crate::{Error, QuadInt, QuadMatrix2, Result};

/// Row-major 2x2 matrix over any ring whose references support `+`, `-`, `*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2<E> {
    pub entries: [[E; 2]; 2],
}

impl<E> Matrix2<E>
where
    E: Clone,
    for<'a> &'a E: Add<&'a E, Output = E> + Sub<&'a E, Output = E> + Mul<&'a E, Output = E>,
{
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Matrix2 { entries: [[a, b], [c, d]] }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &rhs.entries;
        Matrix2::new(
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        )
    }

    pub fn det(&self) -> E {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    /// `self^n` by square-and-multiply, starting from `identity`.
    pub fn pow(&self, mut n: u64, identity: Self) -> Self {
        let mut acc = identity;
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `M = [[0, 1], [-1, sqrt(w)]]`, the companion-style matrix whose powers
/// carry the `a` sequence.
pub fn m_matrix(w: u64) -> Result<QuadMatrix2> {
    let w = BigInt::from(w);
    check_radicand(&w)?;
    let int = |n: i64| QuadInt::from_integer(BigInt::from(n), w.clone());
    Ok(Matrix2::new(int(0)?, int(1)?, int(-1)?, QuadInt::sqrt_w(w.clone())?))
}

/// `M^n = [[-a(n-1), a(n)], [-a(n), a(n+1)]]` for `n >= 1`.
pub fn m_power(w: u64, n: u64) -> Result<QuadMatrix2> {
    if n == 0 {
        return Err(Error::Precondition("matrix power index must be >= 1".into()));
    }
    let m = m_matrix(w)?;
    let wb = BigInt::from(w);
    let zero = QuadInt::zero(wb.clone())?;
    let one = QuadInt::one(wb)?;
    Ok(m.pow(n, Matrix2::new(one.clone(), zero.clone(), zero, one)))
}
