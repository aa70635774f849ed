//! The four sequences attached to a radicand `w`:
//!
//! * `a`: `a(0) = 0`, `a(1) = 1`, `a(n+1) = sqrt(w)*a(n) - a(n-1)` in `Z[sqrt(w)]`;
//! * `b`: `b(0) = 0`, `b(1) = 1`, `b(n+1) = (w-2)*b(n) - b(n-1)`;
//! * `c`: `c(0) = 1`, `c(1) = w-1`, same recurrence as `b`;
//! * `u`: `u(0) = 0`, `u(1) = 1`, `u(n+1) = (w-2)*u(n) - u(n-1) + 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exactnum::{check_radicand, is_perfect_square, ExactValue};
use crate::{Error, LrsSpec, QuadInt, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    A,
    B,
    C,
    U,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::A => "a",
            SeqKind::B => "b",
            SeqKind::C => "c",
            SeqKind::U => "u",
        })
    }
}

impl FromStr for SeqKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(SeqKind::A),
            "b" => Ok(SeqKind::B),
            "c" => Ok(SeqKind::C),
            "u" => Ok(SeqKind::U),
            _ => Err(Error::Syntax { input: s.into(), message: "expected one of a, b, c, u".into() }),
        }
    }
}

/// A named sequence at a fixed radicand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeqId {
    which: SeqKind,
    w: u64,
}

impl SeqId {
    pub fn new(which: SeqKind, w: u64) -> Result<Self> {
        if w < 4 {
            return Err(Error::RadicandOutOfRange(w.to_string()));
        }
        Ok(SeqId { which, w })
    }

    pub fn which(&self) -> SeqKind {
        self.which
    }

    pub fn w(&self) -> u64 {
        self.w
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn trace(w: u64) -> BigInt {
    BigInt::from(w) - 2
}

pub fn b_spec(w: u64) -> LrsSpec {
    LrsSpec::homogeneous(vec![trace(w), big(-1)], vec![big(0), big(1)]).expect("order 2")
}

pub fn c_spec(w: u64) -> LrsSpec {
    LrsSpec::homogeneous(vec![trace(w), big(-1)], vec![big(1), BigInt::from(w) - 1]).expect("order 2")
}

pub fn u_spec(w: u64) -> LrsSpec {
    LrsSpec::new(vec![trace(w), big(-1)], big(2), vec![big(0), big(1)]).expect("order 2")
}

pub fn seq_b(w: u64, n: usize) -> BigInt {
    b_spec(w).nth_term(n)
}

pub fn seq_c(w: u64, n: usize) -> BigInt {
    c_spec(w).nth_term(n)
}

pub fn seq_u(w: u64, n: usize) -> BigInt {
    u_spec(w).nth_term(n)
}

/// First `count` terms of `a` in `Z[sqrt(w)]`. Even-index terms come out as
/// pure multiples of `sqrt(w)`, odd-index terms as integers.
pub fn a_terms(w: u64, count: usize) -> Result<Vec<QuadInt>> {
    let w = BigInt::from(w);
    check_radicand(&w)?;
    let root = QuadInt::sqrt_w(w.clone())?;
    let mut out = Vec::with_capacity(count);
    let (mut prev, mut cur) = (QuadInt::zero(w.clone())?, QuadInt::one(w)?);
    for _ in 0..count {
        out.push(prev.clone());
        let next = &(&root * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(out)
}

pub fn seq_a(w: u64, n: usize) -> Result<QuadInt> {
    Ok(a_terms(w, n + 1)?.pop().expect("n + 1 >= 1 terms"))
}

/// `a` for a square radicand `w = k^2`, where it is an ordinary integer
/// sequence `a(n+1) = k*a(n) - a(n-1)`.
pub fn a_integral_terms(k: u64, count: usize) -> Vec<BigInt> {
    LrsSpec::homogeneous(vec![BigInt::from(k), big(-1)], vec![big(0), big(1)])
        .expect("order 2")
        .terms(count)
}

/// Terms of a named sequence; `a` comes back in `Z[sqrt(w)]` unless `w` is a
/// perfect square, in which case it is integral.
pub fn sequence_terms(id: SeqId, count: usize) -> Result<Vec<ExactValue>> {
    let w = id.w();
    let ints = |v: Vec<BigInt>| v.into_iter().map(ExactValue::Int).collect();
    Ok(match id.which() {
        SeqKind::A => match is_perfect_square(&BigInt::from(w)) {
            Some(k) => {
                let k: u64 = k.try_into().expect("root of a u64 fits in u64");
                ints(a_integral_terms(k, count))
            }
            None => a_terms(w, count)?.into_iter().map(ExactValue::Quad).collect(),
        },
        SeqKind::B => ints(b_spec(w).terms(count)),
        SeqKind::C => ints(c_spec(w).terms(count)),
        SeqKind::U => ints(u_spec(w).terms(count)),
    })
}
