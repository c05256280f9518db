//! Exact polynomial arithmetic over the rationals.
//!
//! [`UPoly`] is a dense univariate polynomial, [`BPoly`] a bivariate one stored
//! recursively as a polynomial in `y` whose coefficients are [`UPoly`]s in `x`.
//! Both keep a canonical form (no trailing zero coefficients), so derived
//! equality is mathematical equality.

mod bpoly;
mod factor;
mod numfield;
mod resultant;
mod upoly;

pub use bpoly::BPoly;
pub use factor::Factorization;
pub(crate) use numfield::specialize_x as specialize;
pub use numfield::{NumberField, NumberFieldElem};
pub use resultant::resultant_y;
pub use upoly::UPoly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Exact arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

/// Integer rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num / den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A rational point of the plane; identifies the maximal ideal `(x - px, y - py)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Writes `coef * mono` in the `2*x^2`, `-x`, `1/2*y` style, with a leading
/// sign handled by the caller through `first`.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    coef: &Rational,
    mono: &str,
    first: bool,
) -> fmt::Result {
    let neg = coef.is_negative();
    let mag = coef.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if mono.is_empty() {
        write!(f, "{}", mag)
    } else if mag.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{}*{}", mag, mono)
    }
}

pub(crate) fn monomial_text(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{}^{}", var, k),
    }
}
