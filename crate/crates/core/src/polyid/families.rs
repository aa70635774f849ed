//! Polynomial families generated by two-term recurrences with polynomial
//! coefficients, plus the sequences `a^2`, `b`, `c`, `u` as polynomials in a
//! formal radicand `w`.

use crate::lrs::Recurrence;
use crate::Poly;

fn ints(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// Which family; each is `p(n+1) = m(x)*p(n) - p(n-1)` with its own
/// multiplier and seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Chebyshev first kind: `2x`, seeds `1, x`.
    T,
    /// Chebyshev second kind: `2x`, seeds `1, 2x`.
    U,
    /// `S(n)(x) = U(n)(x/2)`: `x`, seeds `1, x`.
    S,
    /// Morgan-Voyce `f`: `x + 2`, seeds `1, 1 + x`.
    MorganVoyceF,
    /// Morgan-Voyce `g`: `x + 2`, seeds `1, 2 + x`.
    MorganVoyceG,
}

impl Family {
    pub fn multiplier(self) -> Poly {
        match self {
            Family::T | Family::U => ints(&[0, 2]),
            Family::S => ints(&[0, 1]),
            Family::MorganVoyceF | Family::MorganVoyceG => ints(&[2, 1]),
        }
    }

    pub fn seeds(self) -> [Poly; 2] {
        match self {
            Family::T => [ints(&[1]), ints(&[0, 1])],
            Family::U => [ints(&[1]), ints(&[0, 2])],
            Family::S => [ints(&[1]), ints(&[0, 1])],
            Family::MorganVoyceF => [ints(&[1]), ints(&[1, 1])],
            Family::MorganVoyceG => [ints(&[1]), ints(&[2, 1])],
        }
    }

    pub fn recurrence(self) -> Recurrence<Poly> {
        Recurrence::homogeneous(vec![self.multiplier(), ints(&[-1])], self.seeds().to_vec())
            .expect("order 2")
    }

    /// Members `0..=n`.
    pub fn upto(self, n: usize) -> Vec<Poly> {
        self.recurrence().terms(n + 1)
    }

    pub fn nth(self, n: usize) -> Poly {
        self.recurrence().nth_term(n)
    }
}

pub fn chebyshev_t(n: usize) -> Poly {
    Family::T.nth(n)
}

pub fn chebyshev_u(n: usize) -> Poly {
    Family::U.nth(n)
}

pub fn chebyshev_s(n: usize) -> Poly {
    Family::S.nth(n)
}

pub fn morgan_voyce_f(n: usize) -> Poly {
    Family::MorganVoyceF.nth(n)
}

pub fn morgan_voyce_g(n: usize) -> Poly {
    Family::MorganVoyceG.nth(n)
}

fn w_minus(k: i64) -> Poly {
    ints(&[-k, 1])
}

pub fn b_recurrence() -> Recurrence<Poly> {
    Recurrence::homogeneous(vec![w_minus(2), ints(&[-1])], vec![ints(&[0]), ints(&[1])])
        .expect("order 2")
}

pub fn c_recurrence() -> Recurrence<Poly> {
    Recurrence::homogeneous(vec![w_minus(2), ints(&[-1])], vec![ints(&[1]), w_minus(1)])
        .expect("order 2")
}

pub fn u_recurrence() -> Recurrence<Poly> {
    Recurrence::new(vec![w_minus(2), ints(&[-1])], ints(&[2]), vec![ints(&[0]), ints(&[1])])
        .expect("order 2")
}

/// `a(n)^2` through its order-3 homogeneous recurrence with characteristic
/// polynomial `t^3 - (w-1)t^2 + (w-1)t - 1` and seeds `0, 1, w`; no square
/// roots are involved.
pub fn a_sq_recurrence() -> Recurrence<Poly> {
    Recurrence::homogeneous(
        vec![w_minus(1), -w_minus(1), ints(&[1])],
        vec![ints(&[0]), ints(&[1]), ints(&[0, 1])],
    )
    .expect("order 3")
}

pub fn b_as_poly(n: usize) -> Poly {
    b_recurrence().nth_term(n)
}

pub fn c_as_poly(n: usize) -> Poly {
    c_recurrence().nth_term(n)
}

pub fn u_as_poly(n: usize) -> Poly {
    u_recurrence().nth_term(n)
}

pub fn a_sq_as_poly(n: usize) -> Poly {
    a_sq_recurrence().nth_term(n)
}
