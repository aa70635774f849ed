use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Ring;

/// Dense univariate polynomial, constant term first, never with a trailing
/// zero coefficient. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> DensePoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// `self(other(x))`, by Horner's scheme.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a point of some other ring, embedding each coefficient
    /// with `embed`. Works for rings without a free-standing zero such as
    /// `Z[sqrt(w)]`.
    pub fn eval_in<R>(&self, x: &R, embed: impl Fn(&F) -> R) -> R
    where
        for<'a> &'a R: Add<&'a R, Output = R> + Mul<&'a R, Output = R>,
    {
        let mut iter = self.coeffs.iter().rev();
        let Some(lead) = iter.next() else {
            return embed(&F::zero());
        };
        iter.fold(embed(lead), |acc, c| &(&acc * x) + &embed(c))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String
    where
        F: fmt::Display + Signed,
    {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, true) => out.push_str(&power),
                (_, false) => out.push_str(&format!("{mag}*{power}")),
            }
        }
        out
    }
}

impl DensePoly<BigRational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn from_integer_coeffs(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.eval(x)
    }
}

impl<F: Ring + fmt::Display + Signed> fmt::Display for DensePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<F: Ring> Add for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn add(self, rhs: &DensePoly<F>) -> DensePoly<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Ring> Sub for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn sub(self, rhs: &DensePoly<F>) -> DensePoly<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Ring> Mul for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn mul(self, rhs: &DensePoly<F>) -> DensePoly<F> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return DensePoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::new(out)
    }
}

impl<F: Ring> Neg for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn neg(self) -> DensePoly<F> {
        DensePoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Ring> $tr for DensePoly<F> {
            type Output = DensePoly<F>;
            fn $m(self, rhs: DensePoly<F>) -> DensePoly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Ring> $tr<&DensePoly<F>> for DensePoly<F> {
            type Output = DensePoly<F>;
            fn $m(self, rhs: &DensePoly<F>) -> DensePoly<F> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<F: Ring> Neg for DensePoly<F> {
    type Output = DensePoly<F>;
    fn neg(self) -> DensePoly<F> {
        -&self
    }
}

impl<F: Ring> Zero for DensePoly<F> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Ring> One for DensePoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

/// Scalar division, for fields.
impl<F: Ring + Div<Output = F>> Div<&F> for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn div(self, k: &F) -> DensePoly<F> {
        DensePoly::new(self.coeffs.iter().map(|c| c.clone() / k.clone()).collect())
    }
}
