//! Exact arithmetic in `Z[sqrt(w)]` for non-square `w >= 4`.
//!
//! Elements are stored as `rat + rad*sqrt(w)` together with their radicand,
//! so mixing elements of different rings is caught at run time instead of
//! producing a silently wrong value. Because `sqrt(w)` is irrational the
//! representation is unique and structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{Error, Result, Scalar};

/// Returns `r` with `r * r == n`, or `None` when `n` is negative or not a
/// perfect square.
pub fn is_perfect_square<T: Scalar>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(r.clone() * r.clone()) == n {
        Some(r)
    } else {
        None
    }
}

/// Checks that `w` is a valid radicand: at least 4 and not a perfect square.
pub fn check_radicand<T: Scalar>(w: &T) -> Result<()> {
    let four = T::from_u8(4).expect("4 fits in every scalar");
    if w < &four {
        return Err(Error::RadicandOutOfRange(w.to_string()));
    }
    if is_perfect_square(w).is_some() {
        return Err(Error::SquareRadicand(w.to_string()));
    }
    Ok(())
}

/// `rat + rad*sqrt(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<T> {
    rat: T,
    rad: T,
    w: T,
}

impl<T: Scalar> Quad<T> {
    pub fn new(rat: T, rad: T, w: T) -> Result<Self> {
        check_radicand(&w)?;
        Ok(Quad { rat, rad, w })
    }

    /// Builds an element whose radicand is already known to be valid.
    pub(crate) fn new_unchecked(rat: T, rad: T, w: T) -> Self {
        Quad { rat, rad, w }
    }

    pub fn from_integer(n: T, w: T) -> Result<Self> {
        Self::new(n, T::zero(), w)
    }

    pub fn zero(w: T) -> Result<Self> {
        Self::new(T::zero(), T::zero(), w)
    }

    pub fn one(w: T) -> Result<Self> {
        Self::new(T::one(), T::zero(), w)
    }

    /// `sqrt(w)` itself.
    pub fn sqrt_w(w: T) -> Result<Self> {
        Self::new(T::zero(), T::one(), w)
    }

    pub fn rat(&self) -> &T {
        &self.rat
    }

    pub fn rad(&self) -> &T {
        &self.rad
    }

    pub fn w(&self) -> &T {
        &self.w
    }

    pub fn into_parts(self) -> (T, T, T) {
        (self.rat, self.rad, self.w)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    /// The integer value when the radical part vanishes.
    pub fn as_integer(&self) -> Option<&T> {
        if self.rad.is_zero() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// The coefficient `q` when the element is `q*sqrt(w)`.
    pub fn as_pure_radical(&self) -> Option<&T> {
        if self.rat.is_zero() {
            Some(&self.rad)
        } else {
            None
        }
    }

    /// Field norm `rat^2 - w*rad^2`.
    pub fn norm(&self) -> T {
        self.rat.clone() * self.rat.clone() - self.w.clone() * self.rad.clone() * self.rad.clone()
    }

    /// Galois conjugate `rat - rad*sqrt(w)`.
    pub fn conjugate(&self) -> Self {
        Quad::new_unchecked(self.rat.clone(), -self.rad.clone(), self.w.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Quad::new_unchecked(
            self.rat.clone() * k.clone(),
            self.rad.clone() * k.clone(),
            self.w.clone(),
        )
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Lifts an integer into the same ring as `self`.
    pub fn lift(&self, n: T) -> Self {
        Quad::new_unchecked(n, T::zero(), self.w.clone())
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.w == other.w {
            Ok(())
        } else {
            Err(Error::MismatchedRadicand {
                left: self.w.to_string(),
                right: other.w.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self * other)
    }

    /// Sign of the real number `rat + rad*sqrt(w)`.
    ///
    /// When the two parts have opposite signs the larger magnitude wins,
    /// decided by comparing `rat^2` with `w*rad^2`.
    pub fn signum(&self) -> Ordering {
        let zero = T::zero();
        let p = self.rat.cmp(&zero);
        let q = self.rad.cmp(&zero);
        match (p, q) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) => {
                let lhs = self.rat.clone() * self.rat.clone();
                let rhs = self.w.clone() * self.rad.clone() * self.rad.clone();
                lhs.cmp(&rhs)
            }
            (Ordering::Less, Ordering::Greater) => {
                let lhs = self.w.clone() * self.rad.clone() * self.rad.clone();
                let rhs = self.rat.clone() * self.rat.clone();
                lhs.cmp(&rhs)
            }
        }
    }

    /// Compares as real numbers. Fails only when the radicands differ.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.same_ring(other)?;
        Ok((self - other).signum())
    }

    /// Parses `p`, `q*sqrt(w)`, `p+q*sqrt(w)` and the sign variants, with
    /// unit coefficients optionally written out. Integers need `w` from the
    /// caller; an explicit `sqrt(..)` must agree with it.
    pub fn parse_in(text: &str, w: &T) -> Result<Self>
    where
        T: FromStr,
    {
        let parsed = parse_parts::<T>(text)?;
        match parsed.w {
            Some(found) if &found != w => Err(Error::MismatchedRadicand {
                left: w.to_string(),
                right: found.to_string(),
            }),
            _ => Self::new(parsed.rat, parsed.rad, w.clone()),
        }
    }
}

impl<T: Scalar> PartialOrd for Quad<T> {
    /// `None` for elements of different rings.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl<T: Scalar> fmt::Display for Quad<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radical = |f: &mut fmt::Formatter<'_>, q: &T, leading: bool| -> fmt::Result {
            let neg = q.is_negative();
            let mag = q.abs();
            match (neg, leading) {
                (true, _) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
                (false, true) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "sqrt({})", self.w)
        };
        match (self.rat.is_zero(), self.rad.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => radical(f, &self.rad, true),
            (false, false) => {
                write!(f, "{}", self.rat)?;
                radical(f, &self.rad, false)
            }
        }
    }
}

impl<T: Scalar + FromStr> FromStr for Quad<T> {
    type Err = Error;

    /// Needs an explicit `sqrt(w)` term to know the ring.
    fn from_str(s: &str) -> Result<Self> {
        let parsed = parse_parts::<T>(s)?;
        let w = parsed.w.ok_or_else(|| Error::Syntax {
            input: s.to_string(),
            message: "no sqrt(w) term; radicand unknown".into(),
        })?;
        Self::new(parsed.rat, parsed.rad, w)
    }
}

impl<T: Scalar> Serialize for Quad<T> {
    /// `{"rat": "p", "rad": "q", "w": w}`; the parts are decimal strings so
    /// that no precision is lost in JSON.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Quad", 3)?;
        s.serialize_field("rat", &self.rat.to_string())?;
        s.serialize_field("rad", &self.rad.to_string())?;
        match self.w.to_u64() {
            Some(w) => s.serialize_field("w", &w)?,
            None => s.serialize_field("w", &self.w.to_string())?,
        }
        s.end()
    }
}

/// An exact value that is either a plain integer or an element of
/// `Z[sqrt(w)]`. Used for sequence terms and conic coordinates, where square
/// radicands and the integer conics never leave `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactValue {
    Int(BigInt),
    Quad(Quad<BigInt>),
}

impl ExactValue {
    /// The value in `Z[sqrt(w)]`; integers are lifted, quads must match `w`.
    pub fn to_quad(&self, w: &BigInt) -> Result<Quad<BigInt>> {
        match self {
            ExactValue::Int(n) => Quad::from_integer(n.clone(), w.clone()),
            ExactValue::Quad(q) if q.w() == w => Ok(q.clone()),
            ExactValue::Quad(q) => Err(Error::MismatchedRadicand {
                left: w.to_string(),
                right: q.w().to_string(),
            }),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            ExactValue::Int(n) => Some(n),
            ExactValue::Quad(q) => q.as_integer(),
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            ExactValue::Int(n) => n.cmp(&BigInt::zero()),
            ExactValue::Quad(q) => q.signum(),
        }
    }

    /// Collapses a quad with zero radical part to `Int`.
    pub fn normalized(self) -> Self {
        match self {
            ExactValue::Quad(q) if q.rad().is_zero() => ExactValue::Int(q.into_parts().0),
            other => other,
        }
    }
}

impl From<BigInt> for ExactValue {
    fn from(n: BigInt) -> Self {
        ExactValue::Int(n)
    }
}

impl From<Quad<BigInt>> for ExactValue {
    fn from(q: Quad<BigInt>) -> Self {
        ExactValue::Quad(q)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Int(n) => write!(f, "{n}"),
            ExactValue::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for ExactValue {
    /// Integers as decimal strings, quads in their structured form.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExactValue::Int(n) => serializer.serialize_str(&n.to_string()),
            ExactValue::Quad(q) => q.serialize(serializer),
        }
    }
}

/// Serializes any `Display` value as a string, for big integers in JSON.
pub fn serialize_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

struct ParsedParts<T> {
    rat: T,
    rad: T,
    w: Option<T>,
}

fn parse_parts<T: Scalar + FromStr>(text: &str) -> Result<ParsedParts<T>> {
    let syntax = |message: &str| Error::Syntax {
        input: text.to_string(),
        message: message.to_string(),
    };
    let int = |s: &str| -> Result<T> {
        let digits = s.strip_prefix('+').unwrap_or(s);
        if digits.is_empty() || digits.starts_with(['+', '-']) && digits.len() == 1 {
            return Err(syntax("missing integer"));
        }
        digits.parse::<T>().map_err(|_| syntax("invalid integer"))
    };
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(syntax("empty input"));
    }

    let Some(open) = s.find("sqrt(") else {
        return Ok(ParsedParts { rat: int(&s)?, rad: T::zero(), w: None });
    };
    let after = &s[open + 5..];
    let close = after.find(')').ok_or_else(|| syntax("unclosed sqrt("))?;
    if close + 1 != after.len() {
        return Err(syntax("trailing characters after sqrt(..)"));
    }
    let w = int(&after[..close])?;

    // Everything before "sqrt(" is "[p]<sign>[q*]".
    let prefix = &s[..open];
    let split = prefix
        .char_indices()
        .rev()
        .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i);
    let (rat_text, coef_text) = match split {
        Some(i) => (&prefix[..i], &prefix[i..]),
        None => ("", prefix),
    };
    let rat = if rat_text.is_empty() { T::zero() } else { int(rat_text)? };
    let coef = match coef_text.strip_suffix('*') {
        Some(c) => int(c)?,
        None => match coef_text {
            "" | "+" => T::one(),
            "-" => -T::one(),
            _ => return Err(syntax("expected '*' before sqrt(")),
        },
    };
    Ok(ParsedParts { rat, rad: coef, w: Some(w) })
}

// Operator impls panic on mismatched radicands; use the `try_*` methods
// where the operands come from outside.

impl<T: Scalar> Add for &Quad<T> {
    type Output = Quad<T>;
    fn add(self, rhs: &Quad<T>) -> Quad<T> {
        assert!(self.w == rhs.w, "mismatched radicands {} and {}", self.w, rhs.w);
        Quad::new_unchecked(
            self.rat.clone() + rhs.rat.clone(),
            self.rad.clone() + rhs.rad.clone(),
            self.w.clone(),
        )
    }
}

impl<T: Scalar> Sub for &Quad<T> {
    type Output = Quad<T>;
    fn sub(self, rhs: &Quad<T>) -> Quad<T> {
        assert!(self.w == rhs.w, "mismatched radicands {} and {}", self.w, rhs.w);
        Quad::new_unchecked(
            self.rat.clone() - rhs.rat.clone(),
            self.rad.clone() - rhs.rad.clone(),
            self.w.clone(),
        )
    }
}

impl<T: Scalar> Mul for &Quad<T> {
    type Output = Quad<T>;
    fn mul(self, rhs: &Quad<T>) -> Quad<T> {
        assert!(self.w == rhs.w, "mismatched radicands {} and {}", self.w, rhs.w);
        let (a, b) = (&self.rat, &self.rad);
        let (c, d) = (&rhs.rat, &rhs.rad);
        Quad::new_unchecked(
            a.clone() * c.clone() + b.clone() * d.clone() * self.w.clone(),
            a.clone() * d.clone() + b.clone() * c.clone(),
            self.w.clone(),
        )
    }
}

impl<T: Scalar> Neg for &Quad<T> {
    type Output = Quad<T>;
    fn neg(self) -> Quad<T> {
        Quad::new_unchecked(-self.rat.clone(), -self.rad.clone(), self.w.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Quad<T> {
            type Output = Quad<T>;
            fn $m(self, rhs: Quad<T>) -> Quad<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Quad<T>> for Quad<T> {
            type Output = Quad<T>;
            fn $m(self, rhs: &Quad<T>) -> Quad<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Quad<T> {
    type Output = Quad<T>;
    fn neg(self) -> Quad<T> {
        -&self
    }
}
