//! Exact linear recurrences.
//!
//! [`Recurrence`] is the generic engine: an order-`m` recurrence
//! `s(n) = f_1*s(n-1) + ... + f_m*s(n-m) + k` over any [`Ring`], so the same
//! code produces integer sequences and sequences of polynomials. The named
//! sequences `a`, `b`, `c`, `u` live in [`named`]; matrix powers in
//! [`matrix`]; characteristic-polynomial transforms in [`transform`].

pub mod matrix;
pub mod named;
pub mod transform;

use std::collections::VecDeque;

use crate::{Error, Result, Ring};

pub use matrix::{m_matrix, m_power, Matrix2};
pub use named::{
    a_integral_terms, a_terms, b_spec, c_spec, seq_a, seq_b, seq_c, seq_u, sequence_terms, u_spec,
    SeqId, SeqKind,
};
pub use transform::{absorb_constant, annihilates, kronecker_char_poly};

/// `s(n) = coeffs[0]*s(n-1) + ... + coeffs[m-1]*s(n-m) + additive`, seeded
/// with `initial = [s(0), ..., s(m-1)]`.
///
/// The characteristic polynomial is `t^m - coeffs[0]*t^(m-1) - ... - coeffs[m-1]`
/// (for the homogeneous part).
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence<T> {
    coeffs: Vec<T>,
    additive: T,
    initial: Vec<T>,
}

impl<T: Ring> Recurrence<T> {
    pub fn new(coeffs: Vec<T>, additive: T, initial: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRecurrence("order must be at least 1".into()));
        }
        if coeffs.len() != initial.len() {
            return Err(Error::InvalidRecurrence(format!(
                "order {} but {} initial terms",
                coeffs.len(),
                initial.len()
            )));
        }
        Ok(Recurrence { coeffs, additive, initial })
    }

    pub fn homogeneous(coeffs: Vec<T>, initial: Vec<T>) -> Result<Self> {
        Self::new(coeffs, T::zero(), initial)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn additive(&self) -> &T {
        &self.additive
    }

    pub fn initial(&self) -> &[T] {
        &self.initial
    }

    /// Monic characteristic polynomial of the homogeneous part, constant
    /// term first.
    pub fn char_poly(&self) -> Vec<T> {
        let m = self.order();
        let mut out: Vec<T> = (0..m).map(|i| -self.coeffs[m - 1 - i].clone()).collect();
        out.push(T::one());
        out
    }

    pub fn iter(&self) -> Terms<'_, T> {
        Terms { spec: self, window: VecDeque::with_capacity(self.order()), index: 0 }
    }

    /// First `count` terms.
    pub fn terms(&self, count: usize) -> Vec<T> {
        self.iter().take(count).collect()
    }

    pub fn nth_term(&self, n: usize) -> T {
        self.iter().nth(n).expect("recurrences are infinite")
    }
}

/// Iterator over the terms of a [`Recurrence`], keeping only the last
/// `order` values.
pub struct Terms<'a, T> {
    spec: &'a Recurrence<T>,
    window: VecDeque<T>,
    index: usize,
}

impl<T: Ring> Iterator for Terms<'_, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let m = self.spec.order();
        let term = if self.index < m {
            self.spec.initial[self.index].clone()
        } else {
            // window holds s(n-m), ..., s(n-1)
            let mut acc = self.spec.additive.clone();
            for (h, f) in self.spec.coeffs.iter().enumerate() {
                acc = acc + f.clone() * self.window[m - 1 - h].clone();
            }
            acc
        };
        if self.window.len() == m {
            self.window.pop_front();
        }
        self.window.push_back(term.clone());
        self.index += 1;
        Some(term)
    }
}
