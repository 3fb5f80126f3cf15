//! Arbitrary-precision rational and Gaussian-rational arithmetic.
//!
//! [`Rational`] wraps `num_rational::BigRational` and guarantees canonical
//! form (positive denominator, reduced fraction). [`GaussianRational`] is a
//! complex number with rational real and imaginary parts; it is the
//! coefficient field for every polynomial and matrix in this crate.
//!
//! Values are immutable and freely shareable between threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("invalid Gaussian rational literal `{0}`")]
    ParseGaussian(String),
}

/// An exact rational number in canonical form: reduced fraction with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_pair(num: i64, den: i64) -> Result<Self, ArithError> {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Exact sign: -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Total bit size of numerator and denominator; used for pivot selection.
    pub fn bit_size(&self) -> u64 {
        self.0.numer().magnitude().bits() + self.0.denom().magnitude().bits()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Lossy conversion for report rendering only. Never feeds back into the
    /// exact pipeline.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        let bad = || ArithError::ParseRational(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str.trim()).map_err(|_| bad())?;
        let den = match den_str {
            Some(d) => {
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Panicking division; use [`Rational::checked_div`] when the divisor may be
/// zero.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).checked_div(&rhs).expect("division by zero")
    }
}

/// A complex number with rational real and imaginary parts, in canonical
/// form componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Rational::from_integer(v).into()
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(re),
            im: Rational::from_integer(im),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate: real part unchanged, imaginary part negated.
    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|x|² = re² + im²`, an exact non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn bit_size(&self) -> u64 {
        self.re.bit_size() + self.im.bit_size()
    }

    pub fn checked_div(&self, rhs: &GaussianRational) -> Result<GaussianRational, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // x / y = x * conj(y) / |y|²
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Ok(GaussianRational {
            re: num.re.checked_div(&n)?,
            im: num.im.checked_div(&n)?,
        })
    }

    pub fn recip(&self) -> Result<GaussianRational, ArithError> {
        GaussianRational::one().checked_div(self)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from_integer(v)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i, skipping the imaginary
        // half when both operands are real.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational {
                re: &self.re * &rhs.re,
                im: Rational::zero(),
            };
        }
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

macro_rules! gaussian_forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

gaussian_forward_binop!(Add, add);
gaussian_forward_binop!(Sub, sub);
gaussian_forward_binop!(Mul, mul);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

/// Panicking division; use [`GaussianRational::checked_div`] when the divisor
/// may be zero.
impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        (&self).checked_div(&rhs).expect("division by zero")
    }
}

impl fmt::Display for GaussianRational {
    /// Textual form `a/b+c/di` with explicit signs and an `i` suffix, e.g.
    /// `1/2+3/4i`, `-2i`, `7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.sign() > 0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}-{}i", self.re, self.im.abs())
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        let bad = || ArithError::ParseGaussian(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        // Split at the sign that separates the real and imaginary parts;
        // a leading sign belongs to the real part.
        let mut split = None;
        for (idx, ch) in t.char_indices().skip(1) {
            if ch == '+' || ch == '-' {
                if split.is_some() {
                    return Err(bad());
                }
                split = Some((idx, ch));
            }
        }
        match split {
            Some((idx, sign)) => {
                let re: Rational = t[..idx].parse().map_err(|_| bad())?;
                let im_str = &t[idx + 1..];
                let im_str = im_str.strip_suffix('i').ok_or_else(bad)?;
                let im: Rational = im_str.parse().map_err(|_| bad())?;
                let im = if sign == '-' { -im } else { im };
                Ok(GaussianRational { re, im })
            }
            None => {
                if let Some(im_str) = t.strip_suffix('i') {
                    let im: Rational = im_str.parse().map_err(|_| bad())?;
                    Ok(GaussianRational {
                        re: Rational::zero(),
                        im,
                    })
                } else {
                    let re: Rational = t.parse().map_err(|_| bad())?;
                    Ok(re.into())
                }
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        GaussianRational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(
            Rational::from_pair(re.0, re.1).unwrap(),
            Rational::from_pair(im.0, im.1).unwrap(),
        )
    }

    #[test]
    fn norm_identity() {
        // (1/2 + 1i) * (1/2 - 1i) = 1/4 + 1 = 5/4
        let x = g((1, 2), (1, 1));
        let prod = &x * &x.conj();
        assert_eq!(prod, g((5, 4), (0, 1)));
        assert_eq!(prod, x.norm_sqr().into());
    }

    #[test]
    fn additive_identity() {
        let x = g((3, 7), (-2, 5));
        assert_eq!(&x + &GaussianRational::zero(), x);
    }

    #[test]
    fn canonicalization() {
        let half = Rational::from_pair(2, 4).unwrap();
        assert_eq!(half, Rational::from_pair(1, 2).unwrap());
        assert_eq!(half.to_string(), "1/2");
        let neg = Rational::from_pair(3, -6).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert!(neg.denominator().sign() == num_bigint::Sign::Plus);
    }

    #[test]
    fn conjugation() {
        let x = g((1, 1), (2, 1));
        assert_eq!(x.conj(), g((1, 1), (-2, 1)));
        let real = g((5, 3), (0, 1));
        assert_eq!(real.conj(), real);
        let y = g((3, 7), (-1, 1));
        assert_eq!(y.conj().conj(), y);
    }

    #[test]
    fn sign_of_rationals() {
        assert_eq!(Rational::from_pair(-3, 5).unwrap().sign(), -1);
        assert_eq!(Rational::zero().sign(), 0);
        assert_eq!(Rational::from_integer(7).sign(), 1);
    }

    #[test]
    fn division_by_zero() {
        let x = GaussianRational::one();
        assert_eq!(
            x.checked_div(&GaussianRational::zero()),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(Rational::from_pair(1, 0), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn division_inverse() {
        let x = g((3, 4), (-2, 7));
        let y = g((1, 3), (5, 2));
        let q = x.checked_div(&y).unwrap();
        assert_eq!(&q * &y, x);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "7", "-3/5", "1/2+3/4i", "-1/2-1i", "2i", "-2/9i"] {
            let v: GaussianRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        // non-canonical spellings parse to the canonical value
        let v: GaussianRational = "2/4+0i".parse().unwrap();
        assert_eq!(v.to_string(), "1/2");
    }

    #[test]
    fn rejects_zero_denominator_literal() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/0+2i".parse::<GaussianRational>().is_err());
    }
}
