//! Brute-force oracles. They know nothing about the sequences: each one
//! scans a box of candidate coordinates and keeps what satisfies the curve
//! equation exactly.
//!
//! The `oracle_*` functions scan one coordinate and solve the quadratic in
//! the other through an exact integer square root of its discriminant,
//! which finds every integer root; the `scan_*_exhaustive` variants try
//! every pair in the box and serve as a cross-check at small bounds.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Roots;

use super::{RadicalPointClass, Side};
use crate::exactnum::{check_radicand, is_perfect_square};
use crate::{Error, QuadI128, Result};

/// Largest accepted scan bound; keeps every intermediate inside `i128`.
pub const MAX_ORACLE_BOUND: u64 = 1 << 32;
const MAX_ORACLE_W: u64 = 1 << 20;

fn check_bounds(w: u64, bound: u64) -> Result<()> {
    if w < 4 {
        return Err(Error::RadicandOutOfRange(w.to_string()));
    }
    if w > MAX_ORACLE_W {
        return Err(Error::Precondition(format!("oracle radicand {w} exceeds {MAX_ORACLE_W}")));
    }
    if bound == 0 {
        return Err(Error::Precondition("oracle bound must be >= 1".into()));
    }
    if bound > MAX_ORACLE_BOUND {
        return Err(Error::Precondition(format!("oracle bound {bound} exceeds {MAX_ORACLE_BOUND}")));
    }
    Ok(())
}

/// `ceil(sqrt(w))`.
fn ceil_sqrt(w: i128) -> i128 {
    let r = w.sqrt();
    if r * r == w {
        r
    } else {
        r + 1
    }
}

/// Exact `x > y*sqrt(w)` style comparison of two radical-point coordinates.
fn greater(x: &QuadI128, y: &QuadI128) -> bool {
    x.try_cmp(y).expect("same radicand") == Ordering::Greater
}

struct RadicalScan {
    w: i128,
    bound: i128,
    v_max: i128,
    root: QuadI128,
}

impl RadicalScan {
    fn new(w: u64, bound: u64) -> Result<Self> {
        check_bounds(w, bound)?;
        let wb = i128::from(w);
        check_radicand(&wb)?;
        Ok(RadicalScan {
            w: wb,
            bound: i128::from(bound),
            v_max: i128::from(bound) * ceil_sqrt(wb),
            root: QuadI128::sqrt_w(wb)?,
        })
    }

    fn int(&self, n: i128) -> QuadI128 {
        self.root.lift(n)
    }

    fn rad(&self, n: i128) -> QuadI128 {
        self.root.scale(&n)
    }

    /// `(u*sqrt(w), v)` with `u*sqrt(w) > v` on the curve.
    fn left(&self, u: i128, v: i128) -> Option<RadicalPointClass> {
        let w = self.w;
        let on_curve = w * u * u + v * v - w * u * v == 1;
        (on_curve && greater(&self.rad(u), &self.int(v)))
            .then(|| RadicalPointClass { side: Side::L, u: u.into(), v: v.into() })
    }

    /// `(u, v*sqrt(w))` with `u > v*sqrt(w)` on the curve.
    fn right(&self, u: i128, v: i128) -> Option<RadicalPointClass> {
        let w = self.w;
        let on_curve = u * u + w * v * v - w * u * v == 1;
        (on_curve && greater(&self.int(u), &self.rad(v)))
            .then(|| RadicalPointClass { side: Side::R, u: u.into(), v: v.into() })
    }

    fn in_range(&self, v: i128) -> bool {
        (0..=self.v_max).contains(&v)
    }
}

fn sorted(found: BTreeSet<(BigInt, BigInt, Side)>) -> Vec<RadicalPointClass> {
    found.into_iter().map(|(u, v, side)| RadicalPointClass { side, u, v }).collect()
}

fn key(c: RadicalPointClass) -> (BigInt, BigInt, Side) {
    (c.u, c.v, c.side)
}

/// All radical points of `C(w)` with `1 <= u <= bound` and
/// `0 <= v <= bound*ceil(sqrt(w))`, classified into `L` and `R`, ascending
/// by `u` then `v`.
///
/// For fixed `u` the `L` equation `v^2 - w*u*v + (w*u^2 - 1) = 0` has
/// discriminant `w(w-4)u^2 + 4`, and the `R` equation
/// `w*v^2 - w*u*v + (u^2 - 1) = 0` has discriminant `w(w-4)u^2 + 4w`.
pub fn oracle_radical_points(w: u64, bound: u64) -> Result<Vec<RadicalPointClass>> {
    let scan = RadicalScan::new(w, bound)?;
    let wi = scan.w;
    let mut found = BTreeSet::new();
    for u in 1..=scan.bound {
        let base = wi * (wi - 4) * u * u;
        if let Some(s) = is_perfect_square(&(base + 4)) {
            for num in [wi * u + s, wi * u - s] {
                if num % 2 == 0 && scan.in_range(num / 2) {
                    found.extend(scan.left(u, num / 2).map(key));
                }
            }
        }
        if let Some(s) = is_perfect_square(&(base + 4 * wi)) {
            for num in [wi * u + s, wi * u - s] {
                if num % (2 * wi) == 0 && scan.in_range(num / (2 * wi)) {
                    found.extend(scan.right(u, num / (2 * wi)).map(key));
                }
            }
        }
    }
    Ok(sorted(found))
}

/// Same contract as [`oracle_radical_points`], trying every `(u, v)`.
pub fn scan_radical_points_exhaustive(w: u64, bound: u64) -> Result<Vec<RadicalPointClass>> {
    let scan = RadicalScan::new(w, bound)?;
    let mut found = BTreeSet::new();
    for u in 1..=scan.bound {
        for v in 0..=scan.v_max {
            found.extend(scan.left(u, v).map(key));
            found.extend(scan.right(u, v).map(key));
        }
    }
    Ok(sorted(found))
}

fn on_c2(w: i128, x: i128, y: i128) -> bool {
    let s = x + y - 1;
    s * s == w * x * y
}

fn on_c3(w: i128, x: i128, y: i128) -> bool {
    let s = x + y;
    s * s == w * (x + 1) * (y + 1)
}

/// Roots `x` of `x^2 - b*x + c = 0` with `lo <= x <= hi`.
fn integer_roots(b: i128, c: i128, lo: i128, hi: i128) -> impl Iterator<Item = i128> {
    let disc = b * b - 4 * c;
    let s = is_perfect_square(&disc);
    let roots = s.map(|s| [b + s, b - s]).unwrap_or([1, 1]);
    let valid = s.is_some();
    let mut seen = None;
    roots.into_iter().filter_map(move |num| {
        if !valid || num % 2 != 0 {
            return None;
        }
        let x = num / 2;
        if x < lo || x > hi || seen == Some(x) {
            return None;
        }
        seen = Some(x);
        Some(x)
    })
}

fn finish(mut pairs: Vec<(i128, i128)>) -> Vec<(BigInt, BigInt)> {
    pairs.sort_unstable();
    pairs.dedup();
    pairs.into_iter().map(|(x, y)| (x.into(), y.into())).collect()
}

/// All `(x, y)` with `1 <= y <= x <= bound` on `C2(w)`, ascending.
///
/// For fixed `y`, `x` solves `x^2 - (w*y - 2y + 2)x + (y - 1)^2 = 0`; the
/// product of the roots is `(y - 1)^2`, so every solution `x` divides it.
pub fn oracle_c2(w: u64, bound: u64) -> Result<Vec<(BigInt, BigInt)>> {
    check_bounds(w, bound)?;
    let (wi, bi) = (i128::from(w), i128::from(bound));
    let mut out = Vec::new();
    for y in 1..=bi {
        let b = wi * y - 2 * y + 2;
        let c = (y - 1) * (y - 1);
        for x in integer_roots(b, c, y, bi) {
            debug_assert!(on_c2(wi, x, y));
            out.push((x, y));
        }
    }
    Ok(finish(out))
}

/// All `(x, y)` with `1 <= y <= x <= bound` on `C3(w)`, ascending.
///
/// For fixed `y`, `x` solves `x^2 - (w(y + 1) - 2y)x + (y^2 - w(y + 1)) = 0`.
pub fn oracle_c3(w: u64, bound: u64) -> Result<Vec<(BigInt, BigInt)>> {
    check_bounds(w, bound)?;
    let (wi, bi) = (i128::from(w), i128::from(bound));
    let mut out = Vec::new();
    for y in 1..=bi {
        let b = wi * (y + 1) - 2 * y;
        let c = y * y - wi * (y + 1);
        for x in integer_roots(b, c, y, bi) {
            debug_assert!(on_c3(wi, x, y));
            out.push((x, y));
        }
    }
    Ok(finish(out))
}

/// [`oracle_c2`] by trying every pair.
pub fn scan_c2_exhaustive(w: u64, bound: u64) -> Result<Vec<(BigInt, BigInt)>> {
    check_bounds(w, bound)?;
    let (wi, bi) = (i128::from(w), i128::from(bound));
    let pairs = (1..=bi).flat_map(|x| (1..=x).map(move |y| (x, y)));
    Ok(finish(pairs.filter(|&(x, y)| on_c2(wi, x, y)).collect()))
}

/// [`oracle_c3`] by trying every pair.
pub fn scan_c3_exhaustive(w: u64, bound: u64) -> Result<Vec<(BigInt, BigInt)>> {
    check_bounds(w, bound)?;
    let (wi, bi) = (i128::from(w), i128::from(bound));
    let pairs = (1..=bi).flat_map(|x| (1..=x).map(move |y| (x, y)));
    Ok(finish(pairs.filter(|&(x, y)| on_c3(wi, x, y)).collect()))
}
