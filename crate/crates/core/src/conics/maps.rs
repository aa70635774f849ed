//! Maps between the conics, for nonnegative coordinates:
//! `(x, y) -> (x^2, y^2)` takes `C` to `C2`, `(x, y) -> (2x - 1, 2y - 1)` takes
//! `C2` to `C3`, and `(x, y) -> (2x^2 - 1, 2y^2 - 1)` takes `C` to `C3`.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::{Conic, ConicPoint};
use crate::exactnum::ExactValue;
use crate::{Error, Result};

fn expect_source(p: &ConicPoint, conic: Conic) -> Result<()> {
    if p.conic() != conic {
        return Err(Error::NotOnConic {
            conic: conic.to_string(),
            x: p.x().to_string(),
            y: p.y().to_string(),
        });
    }
    for c in [p.x(), p.y()] {
        if c.signum() == Ordering::Less {
            return Err(Error::Precondition(format!("coordinate {c} is negative")));
        }
    }
    Ok(())
}

/// Square of a coordinate of a radical point, which is always an integer.
fn square(v: &ExactValue) -> Result<BigInt> {
    match v {
        ExactValue::Int(n) => Ok(n * n),
        ExactValue::Quad(q) => q.square().as_integer().cloned().ok_or_else(|| {
            Error::InvalidCoordinates(format!("{v} is not a radical coordinate; its square is irrational"))
        }),
    }
}

pub fn map_c_to_c2(p: &ConicPoint) -> Result<ConicPoint> {
    expect_source(p, Conic::C)?;
    let (x, y) = (square(p.x())?, square(p.y())?);
    ConicPoint::new(Conic::C2, p.w(), x.into(), y.into(), p.provenance())
}

pub fn map_c2_to_c3(p: &ConicPoint) -> Result<ConicPoint> {
    expect_source(p, Conic::C2)?;
    let int = |v: &ExactValue| v.as_integer().cloned().expect("C2 points are integral");
    let (x, y) = (int(p.x()), int(p.y()));
    ConicPoint::new(Conic::C3, p.w(), ExactValue::Int(2 * x - 1), ExactValue::Int(2 * y - 1), p.provenance())
}

pub fn map_c_to_c3(p: &ConicPoint) -> Result<ConicPoint> {
    expect_source(p, Conic::C)?;
    let (x, y) = (square(p.x())?, square(p.y())?);
    ConicPoint::new(Conic::C3, p.w(), ExactValue::Int(2 * x - 1), ExactValue::Int(2 * y - 1), p.provenance())
}
