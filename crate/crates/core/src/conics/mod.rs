//! The three conics attached to a radicand `w >= 4`:
//!
//! * `C(w)`:  `x^2 - sqrt(w)*x*y + y^2 = 1`
//! * `C2(w)`: `(x + y - 1)^2 = w*x*y`
//! * `C3(w)`: `(x + y)^2 = w*(x + 1)*(y + 1)`
//!
//! For non-square `w` the interesting points of `C(w)` live in `Z[sqrt(w)]`;
//! for square `w = k^2` the curve is `x^2 - k*x*y + y^2 = 1` over `Z`.

mod generate;
mod maps;
mod oracle;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactnum::{is_perfect_square, ExactValue};
use crate::{Error, QuadInt, Result};

pub use generate::{
    c2_ladder_within, c3_ladder_within, descend_to_seed, integer_points_square,
    radical_classes_within, radical_points, solve_c2, solve_c3, vieta_descent,
};
pub use maps::{map_c2_to_c3, map_c_to_c2, map_c_to_c3};
pub use oracle::{
    oracle_c2, oracle_c3, oracle_radical_points, scan_c2_exhaustive, scan_c3_exhaustive,
    scan_radical_points_exhaustive, MAX_ORACLE_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Conic {
    C,
    C2,
    C3,
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conic::C => "C",
            Conic::C2 => "C2",
            Conic::C3 => "C3",
        })
    }
}

impl FromStr for Conic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" => Ok(Conic::C),
            "C2" => Ok(Conic::C2),
            "C3" => Ok(Conic::C3),
            _ => Err(Error::Syntax { input: s.into(), message: "expected C, C2 or C3".into() }),
        }
    }
}

/// Which side of the diagonal a radical point of `C(w)` sits on:
/// `L` holds `(u*sqrt(w), v)` with `u*sqrt(w) > v`, `R` holds
/// `(u, v*sqrt(w))` with `u > v*sqrt(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    L,
    R,
}

/// A radical point reduced to its side and its two natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RadicalPointClass {
    pub side: Side,
    #[serde(serialize_with = "crate::exactnum::serialize_display")]
    pub u: BigInt,
    #[serde(serialize_with = "crate::exactnum::serialize_display")]
    pub v: BigInt,
}

impl RadicalPointClass {
    /// The point on `C(w)` this class stands for.
    pub fn coordinates(&self, w: u64) -> Result<(QuadInt, QuadInt)> {
        let wb = BigInt::from(w);
        let int = |n: &BigInt| QuadInt::from_integer(n.clone(), wb.clone());
        let rad = |n: &BigInt| QuadInt::new(BigInt::zero(), n.clone(), wb.clone());
        Ok(match self.side {
            Side::L => (rad(&self.u)?, int(&self.v)?),
            Side::R => (int(&self.u)?, rad(&self.v)?),
        })
    }

    /// Checks the side inequality and the curve equation
    /// (`w*u^2 + v^2 - w*u*v = 1` for `L`, `u^2 + w*v^2 - w*u*v = 1` for `R`).
    pub fn is_valid(&self, w: u64) -> bool {
        let Ok((x, y)) = self.coordinates(w) else {
            return false;
        };
        let ordered = x.try_cmp(&y).is_ok_and(|o| o == Ordering::Greater);
        let wb = BigInt::from(w);
        let (u, v) = (&self.u, &self.v);
        let value = match self.side {
            Side::L => &wb * u * u + v * v - &wb * u * v,
            Side::R => u * u + &wb * v * v - &wb * u * v,
        };
        ordered && value.is_one()
    }
}

/// Where a point came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Generated as the `n`-th member of a ladder.
    Index(usize),
    /// Found by a brute-force scan.
    Oracle,
}

/// A point verified to lie on its conic when it was built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicPoint {
    conic: Conic,
    w: u64,
    x: ExactValue,
    y: ExactValue,
    provenance: Provenance,
}

impl ConicPoint {
    pub fn new(conic: Conic, w: u64, x: ExactValue, y: ExactValue, provenance: Provenance) -> Result<Self> {
        let x = x.normalized();
        let y = y.normalized();
        if !on_conic(conic, w, &x, &y)? {
            return Err(Error::NotOnConic { conic: conic.to_string(), x: x.to_string(), y: y.to_string() });
        }
        Ok(ConicPoint { conic, w, x, y, provenance })
    }

    pub fn conic(&self) -> Conic {
        self.conic
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn x(&self) -> &ExactValue {
        &self.x
    }

    pub fn y(&self) -> &ExactValue {
        &self.y
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn index(&self) -> Option<usize> {
        match self.provenance {
            Provenance::Index(n) => Some(n),
            Provenance::Oracle => None,
        }
    }

    /// `L`/`R` classification for radical points of `C(w)`, non-square `w`.
    /// Points that are not radical, or sit on the wrong side of the
    /// diagonal, have no class.
    pub fn radical_class(&self) -> Option<RadicalPointClass> {
        if self.conic != Conic::C {
            return None;
        }
        let wb = BigInt::from(self.w);
        if is_perfect_square(&wb).is_some() {
            return None;
        }
        let x = self.x.to_quad(&wb).ok()?;
        let y = self.y.to_quad(&wb).ok()?;
        // (1, 0) and friends: an integer x with y = 0 counts as R with v = 0.
        let class = if let (Some(u), Some(v)) = (x.as_integer(), y.as_pure_radical()) {
            RadicalPointClass { side: Side::R, u: u.clone(), v: v.clone() }
        } else if let (Some(u), Some(v)) = (x.as_pure_radical(), y.as_integer()) {
            RadicalPointClass { side: Side::L, u: u.clone(), v: v.clone() }
        } else {
            return None;
        };
        class.is_valid(self.w).then_some(class)
    }

    pub fn side(&self) -> Option<Side> {
        self.radical_class().map(|c| c.side)
    }
}

fn integer_coord(conic: Conic, v: &ExactValue) -> Result<&BigInt> {
    v.as_integer().ok_or_else(|| {
        Error::InvalidCoordinates(format!("{conic} needs integer coordinates, got {v}"))
    })
}

/// Exact membership test.
///
/// `C` with non-square `w` takes coordinates in `Z[sqrt(w)]` (integers are
/// lifted); `C` with square `w`, `C2` and `C3` take integers.
pub fn on_conic(conic: Conic, w: u64, x: &ExactValue, y: &ExactValue) -> Result<bool> {
    if w < 4 {
        return Err(Error::RadicandOutOfRange(w.to_string()));
    }
    let wb = BigInt::from(w);
    match conic {
        Conic::C => match is_perfect_square(&wb) {
            None => {
                let x = x.to_quad(&wb)?;
                let y = y.to_quad(&wb)?;
                let root = QuadInt::sqrt_w(wb.clone())?;
                let value = &(&(&x * &x) - &(&(&root * &x) * &y)) + &(&y * &y);
                Ok(value.as_integer().is_some_and(|v| v.is_one()))
            }
            Some(k) => {
                let x = integer_coord(conic, x)?;
                let y = integer_coord(conic, y)?;
                Ok((x * x - &k * x * y + y * y).is_one())
            }
        },
        Conic::C2 => {
            let x = integer_coord(conic, x)?;
            let y = integer_coord(conic, y)?;
            let s = x + y - 1;
            Ok(&s * &s == &wb * x * y)
        }
        Conic::C3 => {
            let x = integer_coord(conic, x)?;
            let y = integer_coord(conic, y)?;
            let s = x + y;
            Ok(&s * &s == &wb * (x + 1) * (y + 1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> ExactValue {
        ExactValue::Int(n.into())
    }

    fn rad(q: i64, w: i64) -> ExactValue {
        ExactValue::Quad(QuadInt::new(0.into(), q.into(), w.into()).unwrap())
    }

    #[test]
    fn membership_examples() {
        assert!(on_conic(Conic::C, 7, &int(6), &rad(1, 7)).unwrap());
        assert!(on_conic(Conic::C2, 5, &int(16), &int(5)).unwrap());
        assert!(on_conic(Conic::C3, 9, &int(17), &int(1)).unwrap());
        assert!(!on_conic(Conic::C2, 5, &int(2), &int(3)).unwrap());
        assert!(on_conic(Conic::C, 9, &int(8), &int(3)).unwrap());
        assert!(!on_conic(Conic::C, 7, &int(2), &int(1)).unwrap());
    }

    #[test]
    fn membership_errors() {
        assert!(matches!(
            on_conic(Conic::C, 7, &int(6), &rad(1, 5)),
            Err(Error::MismatchedRadicand { .. })
        ));
        assert!(matches!(
            on_conic(Conic::C2, 5, &rad(1, 5), &int(1)),
            Err(Error::InvalidCoordinates(_))
        ));
        assert!(on_conic(Conic::C2, 3, &int(1), &int(0)).is_err());
    }

    #[test]
    fn points_are_checked_on_construction() {
        let p = ConicPoint::new(Conic::C, 5, rad(3, 5), int(4), Provenance::Index(4)).unwrap();
        assert_eq!(p.radical_class(), Some(RadicalPointClass { side: Side::L, u: 3.into(), v: 4.into() }));
        assert!(matches!(
            ConicPoint::new(Conic::C2, 5, int(2), int(3), Provenance::Oracle),
            Err(Error::NotOnConic { .. })
        ));
        let seed = ConicPoint::new(Conic::C, 5, int(1), int(0), Provenance::Index(1)).unwrap();
        assert_eq!(seed.side(), Some(Side::R));
        // mirror image of P_2 is on the curve but on the wrong side
        let mirror = ConicPoint::new(Conic::C, 5, int(1), rad(1, 5), Provenance::Oracle).unwrap();
        assert_eq!(mirror.side(), None);
    }

    #[test]
    fn conic_names_round_trip() {
        for c in [Conic::C, Conic::C2, Conic::C3] {
            assert_eq!(c.to_string().parse::<Conic>().unwrap(), c);
        }
        assert!("C4".parse::<Conic>().is_err());
    }
}
