//! Coefficient fields.
//!
//! Every linear object in the crate carries coefficients of type
//! `Complex<R>` where `R: Real`. Two families are provided: the exact field
//! of rationals ([`BigRational`], giving Gaussian rationals as coefficients)
//! and IEEE floats (`f32`, `f64`). Exact and approximate values never mix:
//! the field is a type parameter, so combining them is a type error.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Real field underlying complex coefficients.
pub trait Real:
    Num
    + Signed
    + Clone
    + Debug
    + Display
    + FromStr
    + PartialOrd
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Arithmetic in this field is error-free.
    const EXACT: bool;

    /// Threshold below which a value is treated as zero (0 for exact fields).
    const DEFAULT_TOL: f64;

    /// Stored coefficients must not be negligible.
    fn is_negligible(&self) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().map_or(false, |v| v.abs() <= Self::DEFAULT_TOL)
        }
    }

    /// Equality up to `tol`; exact fields ignore `tol` and compare exactly.
    fn within(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let d = (self.clone() - other.clone()).abs();
            d.to_f64().map_or(false, |v| v <= tol)
        }
    }
}

impl Real for BigRational {
    const EXACT: bool = true;
    const DEFAULT_TOL: f64 = 0.0;
}

impl Real for f64 {
    const EXACT: bool = false;
    const DEFAULT_TOL: f64 = 1e-9;
}

impl Real for f32 {
    const EXACT: bool = false;
    const DEFAULT_TOL: f64 = 1e-5;
}

/// Coefficient negligible in both parts.
pub fn negligible<R: Real>(c: &Complex<R>) -> bool {
    c.re.is_negligible() && c.im.is_negligible()
}

pub fn coeff_within<R: Real>(a: &Complex<R>, b: &Complex<R>, tol: f64) -> bool {
    a.re.within(&b.re, tol) && a.im.within(&b.im, tol)
}

/// Largest componentwise deviation, as f64.
pub fn coeff_deviation<R: Real>(a: &Complex<R>, b: &Complex<R>) -> f64 {
    let dr = (a.re.clone() - b.re.clone()).abs().to_f64().unwrap_or(f64::INFINITY);
    let di = (a.im.clone() - b.im.clone()).abs().to_f64().unwrap_or(f64::INFINITY);
    dr.max(di)
}

pub fn from_int<R: Real>(v: i64) -> Complex<R> {
    Complex::new(R::from_i64(v).expect("integer fits the field"), R::zero())
}

/// Gaussian rational `re + im·i` from integer parts.
pub fn gaussian(re: i64, im: i64) -> Complex<BigRational> {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// Lossy conversion of a coefficient to double precision.
pub fn to_complex64<R: Real>(c: &Complex<R>) -> Complex<f64> {
    Complex::new(c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN))
}
