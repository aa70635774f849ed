use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{on_conic, Conic, ConicPoint, Provenance, RadicalPointClass};
use crate::exactnum::{is_perfect_square, ExactValue};
use crate::lrs::{a_integral_terms, a_terms, u_spec};
use crate::{Error, Result};

fn check_w(w: u64) -> Result<()> {
    if w < 4 {
        Err(Error::RadicandOutOfRange(w.to_string()))
    } else {
        Ok(())
    }
}

/// `P(1), ..., P(count)` with `P(n) = (a(n), a(n-1))` on `C(w)`, non-square
/// `w`. Even `n >= 2` land in `L`, odd `n` in `R` (including the seed
/// `P(1) = (1, 0)`).
pub fn radical_points(w: u64, count: usize) -> Result<Vec<ConicPoint>> {
    let a = a_terms(w, count + 1)?;
    a.windows(2)
        .enumerate()
        .map(|(i, pair)| {
            ConicPoint::new(
                Conic::C,
                w,
                ExactValue::Quad(pair[1].clone()),
                ExactValue::Quad(pair[0].clone()),
                Provenance::Index(i + 1),
            )
        })
        .collect()
}

/// Integer points `(a(n), a(n-1))` of `x^2 - k*x*y + y^2 = 1` for square
/// `w = k^2`.
pub fn integer_points_square(w: u64, count: usize) -> Result<Vec<ConicPoint>> {
    check_w(w)?;
    let k = is_perfect_square(&BigInt::from(w)).ok_or_else(|| {
        Error::Precondition(format!("{w} is not a perfect square; use radical_points"))
    })?;
    let k = u64::try_from(k).expect("root of a u64 fits in u64");
    let a = a_integral_terms(k, count + 1);
    a.windows(2)
        .enumerate()
        .map(|(i, pair)| {
            ConicPoint::new(
                Conic::C,
                w,
                ExactValue::Int(pair[1].clone()),
                ExactValue::Int(pair[0].clone()),
                Provenance::Index(i + 1),
            )
        })
        .collect()
}

/// Radical points `P(n)` whose class has `u <= bound`, as classes. Both
/// coordinates grow with `n`, so generation stops at the first overshoot.
pub fn radical_classes_within(w: u64, bound: &BigInt) -> Result<Vec<RadicalPointClass>> {
    let mut out = Vec::new();
    let mut count = 16;
    loop {
        let points = radical_points(w, count)?;
        out.clear();
        for p in &points {
            let class = p.radical_class().expect("generated points are radical");
            if &class.u > bound {
                return Ok(out);
            }
            out.push(class);
        }
        count *= 2;
    }
}

/// The ladder `(u(n+1), u(n))`, `n = 0..count`, on `C2(w)`.
pub fn solve_c2(w: u64, count: usize) -> Result<Vec<(BigInt, BigInt)>> {
    check_w(w)?;
    let u = u_spec(w).terms(count + 1);
    Ok(u.windows(2).map(|p| (p[1].clone(), p[0].clone())).collect())
}

/// Positive ladder points `(2u(n+1) - 1, 2u(n) - 1)`, `n = 1..=count`, on
/// `C3(w)`. The `n = 0` image `(1, -1)` is not positive and is skipped.
pub fn solve_c3(w: u64, count: usize) -> Result<Vec<(BigInt, BigInt)>> {
    let ladder = solve_c2(w, count + 1)?;
    Ok(ladder
        .into_iter()
        .skip(1)
        .map(|(x, y)| (2 * x - 1, 2 * y - 1))
        .collect())
}

/// Ladder rungs of `C2(w)` with `y >= 1` and `x <= bound`.
pub fn c2_ladder_within(w: u64, bound: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    check_w(w)?;
    Ok(u_spec(w)
        .iter()
        .skip(1)
        .scan(BigInt::zero(), |prev, next| Some((next.clone(), std::mem::replace(prev, next))))
        .skip(1)
        .take_while(|(x, _)| x <= bound)
        .collect())
}

/// Images of [`c2_ladder_within`] on `C3(w)`, keeping `x <= bound`.
pub fn c3_ladder_within(w: u64, bound: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    let wide = bound.clone() / 2 + 1;
    Ok(c2_ladder_within(w, &wide)?
        .into_iter()
        .map(|(x, y)| (2 * x - 1, 2 * y - 1))
        .filter(|(x, _)| x <= bound)
        .collect())
}

/// One Vieta step: `(x, y) -> (y, z)` with `x*z = (y - 1)^2`, the second
/// root of the quadratic in `x`. Needs `(x, y)` on `C2(w)` with
/// `x >= y >= 1`.
pub fn vieta_descent(w: u64, x: &BigInt, y: &BigInt) -> Result<(BigInt, BigInt)> {
    if y < &BigInt::one() || x < y {
        return Err(Error::Precondition(format!("descent needs x >= y >= 1, got ({x}, {y})")));
    }
    let numerator = (y - 1u32) * (y - 1u32);
    let (z, rem) = numerator.div_rem(x);
    if !rem.is_zero() {
        return Err(Error::InexactDescent {
            x: x.to_string(),
            y: y.to_string(),
            numerator: numerator.to_string(),
        });
    }
    let on_c2 = |a: &BigInt, b: &BigInt| {
        on_conic(Conic::C2, w, &ExactValue::Int(a.clone()), &ExactValue::Int(b.clone()))
    };
    if !on_c2(x, y)? {
        return Err(Error::NotOnConic { conic: "C2".into(), x: x.to_string(), y: y.to_string() });
    }
    debug_assert!(on_c2(y, &z)?);
    Ok((y.clone(), z))
}

/// Iterates [`vieta_descent`] from `(x, y)` down to `(1, 0)`, returning every
/// pair visited including both ends.
pub fn descend_to_seed(w: u64, x: &BigInt, y: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    let mut path = vec![(x.clone(), y.clone())];
    let (mut x, mut y) = (x.clone(), y.clone());
    while !y.is_zero() {
        let (nx, ny) = vieta_descent(w, &x, &y)?;
        if ny >= y && !(nx.is_one() && ny.is_zero()) {
            return Err(Error::Precondition(format!("descent stalled at ({nx}, {ny})")));
        }
        path.push((nx.clone(), ny.clone()));
        x = nx;
        y = ny;
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conics::Side;
    use crate::QuadInt;

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(x, y)| (x.into(), y.into())).collect()
    }

    fn quad(rat: i64, rad: i64, w: i64) -> ExactValue {
        ExactValue::Quad(QuadInt::new(rat.into(), rad.into(), w.into()).unwrap()).normalized()
    }

    #[test]
    fn radical_points_w5() {
        let pts = radical_points(5, 4).unwrap();
        let coords: Vec<_> = pts.iter().map(|p| (p.x().clone(), p.y().clone())).collect();
        assert_eq!(
            coords,
            vec![
                (quad(1, 0, 5), quad(0, 0, 5)),
                (quad(0, 1, 5), quad(1, 0, 5)),
                (quad(4, 0, 5), quad(0, 1, 5)),
                (quad(0, 3, 5), quad(4, 0, 5)),
            ]
        );
        let class = pts[3].radical_class().unwrap();
        assert_eq!((class.side, class.u, class.v), (Side::L, 3.into(), 4.into()));
        let sides: Vec<_> = pts.iter().map(|p| p.side().unwrap()).collect();
        assert_eq!(sides, vec![Side::R, Side::L, Side::R, Side::L]);
    }

    #[test]
    fn radical_points_w7() {
        let pts = radical_points(7, 2).unwrap();
        assert_eq!(pts[1].x(), &quad(0, 1, 7));
        assert_eq!(pts[1].y(), &quad(1, 0, 7));
        assert!(radical_points(9, 2).is_err());
    }

    #[test]
    fn square_radicand_integer_points() {
        let pts = integer_points_square(9, 4).unwrap();
        assert_eq!(pts[3].x(), &ExactValue::Int(21.into()));
        assert_eq!(pts[3].y(), &ExactValue::Int(8.into()));
        assert!(integer_points_square(10, 3).is_err());
    }

    #[test]
    fn c2_ladders() {
        assert_eq!(solve_c2(5, 3).unwrap(), pairs(&[(1, 0), (5, 1), (16, 5)]));
        assert_eq!(solve_c2(9, 2).unwrap(), pairs(&[(1, 0), (9, 1)]));
        assert_eq!(solve_c2(4, 3).unwrap(), pairs(&[(1, 0), (4, 1), (9, 4)]));
        assert_eq!(c2_ladder_within(5, &BigInt::from(20)).unwrap(), pairs(&[(5, 1), (16, 5)]));
        assert_eq!(solve_c3(9, 2).unwrap(), pairs(&[(17, 1), (127, 17)]));
        assert_eq!(c3_ladder_within(9, &BigInt::from(200)).unwrap(), pairs(&[(17, 1), (127, 17)]));
    }

    #[test]
    fn descent_examples() {
        let d = |w, x: i64, y: i64| vieta_descent(w, &x.into(), &y.into()).unwrap();
        assert_eq!(d(5, 16, 5), (5.into(), 1.into()));
        assert_eq!(d(5, 5, 1), (1.into(), 0.into()));
        assert_eq!(d(4, 9, 4), (4.into(), 1.into()));
        let path = descend_to_seed(5, &121.into(), &45.into()).unwrap();
        assert_eq!(path, pairs(&[(121, 45), (45, 16), (16, 5), (5, 1), (1, 0)]));
    }

    #[test]
    fn descent_rejects_invalid_points() {
        assert!(matches!(
            vieta_descent(5, &BigInt::from(3), &BigInt::from(2)),
            Err(Error::InexactDescent { .. })
        ));
        assert!(matches!(
            vieta_descent(5, &BigInt::from(4), &BigInt::from(3)),
            Err(Error::NotOnConic { .. })
        ));
        assert!(matches!(
            vieta_descent(5, &BigInt::from(5), &BigInt::from(16)),
            Err(Error::Precondition(_))
        ));
    }
}
