//! Exact rational arithmetic.
//!
//! All thresholds, critical chromatic numbers and profile coefficients are
//! `Ratio<i128>`. The magnitudes involved stay tiny (the largest scale factor
//! used anywhere is `h!` with `h <= 6`), so `i128` never comes close to
//! overflowing.

use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i128>;

/// `num / den` in lowest terms. Panics when `den == 0`.
pub fn ratio(num: i128, den: i128) -> Rational {
    Ratio::new(num, den)
}

pub fn int(n: i128) -> Rational {
    Ratio::from_integer(n)
}

pub fn from_usize(n: usize) -> Rational {
    Ratio::from_integer(n as i128)
}

pub fn floor(r: &Rational) -> i128 {
    r.floor().to_integer()
}

pub fn ceil(r: &Rational) -> i128 {
    r.ceil().to_integer()
}

/// Decimal approximation for human-readable output only.
pub fn approx(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational number: {0:?}")]
pub struct ParseRationalError(pub alloc::string::String);

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.into());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = i128::from_str(n).map_err(|_| err())?;
    let d = i128::from_str(d).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Ratio::new(n, d))
}

/// Displays an affine function `a + b*x` with exact coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub constant: Rational,
    pub slope: Rational,
}

impl Affine {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        Affine { constant, slope }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.constant + self.slope * x
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_negative() {
            write!(f, "{} - {}*x", self.constant, -self.slope)
        } else {
            write!(f, "{} + {}*x", self.constant, self.slope)
        }
    }
}
