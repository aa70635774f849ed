//! Transforms on characteristic polynomials: absorbing an additive constant
//! into the recurrence, and the Kronecker-product polynomial that annihilates
//! termwise products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Recurrence;
use crate::{Error, Poly, Result, Ring};

/// Turns `s(n) = sum f_h s(n-h) + k` with `k != 0` into the homogeneous
/// order-`m+1` recurrence with characteristic polynomial `(t - 1) f(t)`,
/// seeded with the first `m + 1` terms of the original sequence.
pub fn absorb_constant<T: Ring>(spec: &Recurrence<T>) -> Result<Recurrence<T>> {
    if spec.additive().is_zero() {
        return Err(Error::Precondition(
            "recurrence has no additive constant to absorb".into(),
        ));
    }
    let f = spec.char_poly();
    let m = spec.order();
    // (t - 1) f(t), constant term first
    let mut product = vec![T::zero(); m + 2];
    for (i, c) in f.iter().enumerate() {
        product[i + 1] = product[i + 1].clone() + c.clone();
        product[i] = product[i].clone() - c.clone();
    }
    let coeffs = (1..=m + 1).map(|h| -product[m + 1 - h].clone()).collect();
    Recurrence::homogeneous(coeffs, spec.terms(m + 1))
}

/// True when the monic polynomial `char_poly` (constant term first)
/// annihilates `terms` under the shift operator on every full window.
pub fn annihilates<T: Ring>(char_poly: &[T], terms: &[T]) -> bool {
    if char_poly.is_empty() {
        return false;
    }
    let d = char_poly.len() - 1;
    terms.windows(d + 1).all(|window| {
        window
            .iter()
            .zip(char_poly)
            .fold(T::zero(), |acc, (s, c)| acc + c.clone() * s.clone())
            .is_zero()
    })
}

type Matrix = Vec<Vec<BigRational>>;

/// Companion matrix of a monic polynomial given constant term first: ones on
/// the subdiagonal, the negated low coefficients in the last column.
fn companion(poly: &[BigRational]) -> Matrix {
    let m = poly.len() - 1;
    let mut a = vec![vec![BigRational::zero(); m]; m];
    for i in 1..m {
        a[i][i - 1] = BigRational::one();
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[m - 1] = -poly[i].clone();
    }
    a
}

fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (a.len(), b.len());
    let mut k = vec![vec![BigRational::zero(); p * q]; p * q];
    for i in 0..p {
        for j in 0..p {
            if a[i][j].is_zero() {
                continue;
            }
            for r in 0..q {
                for s in 0..q {
                    k[i * q + r][j * q + s] = &a[i][j] * &b[r][s];
                }
            }
        }
    }
    k
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = &out[i][j] + &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Characteristic polynomial `det(tI - A)` by the Faddeev-LeVerrier
/// recursion, exact over the rationals.
pub fn char_poly_of(a: &Matrix) -> Poly {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

fn check_monic_integer(p: &Poly) -> Result<()> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(Error::Precondition(format!("polynomial {p} must have degree >= 1")));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic(p.to_string()));
    }
    if p.to_integer_coeffs().is_none() {
        return Err(Error::NonIntegerPolynomial(p.to_string()));
    }
    Ok(())
}

/// Characteristic polynomial of `companion(f) (x) companion(g)`. Its roots
/// are the pairwise products of the roots of `f` and `g`, so it annihilates
/// the termwise product of any sequence recurring with `f` and any sequence
/// recurring with `g`.
pub fn kronecker_char_poly(f: &Poly, g: &Poly) -> Result<Poly> {
    check_monic_integer(f)?;
    check_monic_integer(g)?;
    let k = kronecker(&companion(f.coeffs()), &companion(g.coeffs()));
    Ok(char_poly_of(&k))
}
