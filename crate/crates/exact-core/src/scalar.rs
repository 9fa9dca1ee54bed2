//! Exact complex scalars with rational real and imaginary parts.
//!
//! Every coefficient in the workspace is a Gaussian rational `re + im·i` with
//! arbitrary-precision rational parts. There are no floats anywhere: equality
//! of scalars is decidable and every reported value is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Gaussian rational `re + im·i`. The field of constants for every algebra
/// in this workspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn zero() -> Self {
        ExactScalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        ExactScalar { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ExactScalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// Exact rational `num/den`. Panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactScalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `(num/den)·i`.
    pub fn from_ratio_i(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactScalar {
            re: BigRational::zero(),
            im: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        ExactScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(ExactScalar { re: &self.re / &norm, im: -&self.im / &norm })
    }

    /// Canonical text form, e.g. `0`, `3/2`, `-i`, `2/3i`, `1+1/2i`, `1-2i`.
    /// This is the form used in reports and accepted back by the parser.
    pub fn canonical_string(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        fn imag(r: &BigRational) -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", rat(r))
            }
        }
        if self.im.is_zero() {
            rat(&self.re)
        } else if self.re.is_zero() {
            imag(&self.im)
        } else if self.im.is_negative() {
            format!("{}-{}", rat(&self.re), imag(&-self.im.clone()).trim_start_matches('-'))
        } else {
            format!("{}+{}", rat(&self.re), imag(&self.im))
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Sub<&'a ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &'a ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        let inv = rhs.inv().expect("division by zero");
        (&self).mul(&inv)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squares_to_minus_one() {
        let i = ExactScalar::i();
        assert_eq!(&i * &i, ExactScalar::from_int(-1));
    }

    #[test]
    fn inverse_of_gaussian_rational() {
        let z = ExactScalar::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(1)),
        );
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert!(ExactScalar::zero().inv().is_none());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(ExactScalar::zero().canonical_string(), "0");
        assert_eq!(ExactScalar::from_ratio(-3, 2).canonical_string(), "-3/2");
        assert_eq!(ExactScalar::i().canonical_string(), "i");
        assert_eq!((-ExactScalar::i()).canonical_string(), "-i");
        assert_eq!(ExactScalar::from_ratio_i(2, 3).canonical_string(), "2/3i");
        let z = ExactScalar::from_int(1) + ExactScalar::from_ratio_i(1, 2);
        assert_eq!(z.canonical_string(), "1+1/2i");
        let w = ExactScalar::from_int(1) - ExactScalar::from_ratio_i(2, 1);
        assert_eq!(w.canonical_string(), "1-2i");
    }

    #[test]
    fn conjugate_is_involutive_and_multiplicative() {
        let z = ExactScalar::new(
            BigRational::new(BigInt::from(2), BigInt::from(3)),
            BigRational::new(BigInt::from(-1), BigInt::from(5)),
        );
        let w = ExactScalar::new(
            BigRational::new(BigInt::from(7), BigInt::from(4)),
            BigRational::from_integer(BigInt::from(2)),
        );
        assert_eq!(z.conj().conj(), z);
        assert_eq!((&z * &w).conj(), &z.conj() * &w.conj());
    }
}
