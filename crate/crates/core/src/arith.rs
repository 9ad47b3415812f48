//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Every coefficient the engine touches is a [`GaussianRational`]: a pair of
//! arbitrary-precision rationals. Nothing is ever rounded, so a zero test is a
//! proof.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    /// `num/den` as a real Gaussian rational.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(rational(num, den))
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

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

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
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// Writes `|q|` as `a` or `a/b`.
pub(crate) fn fmt_abs_rational(q: &Rational, f: &mut impl fmt::Write) -> fmt::Result {
    let q = q.abs();
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Textual form `a/b + c/d*i`, zero parts omitted, `0` for zero.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut wrote = false;
        if !self.re.is_zero() {
            if self.re.is_negative() {
                f.write_str("-")?;
            }
            fmt_abs_rational(&self.re, f)?;
            wrote = true;
        }
        if !self.im.is_zero() {
            match (wrote, self.im.is_negative()) {
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, true) => f.write_str("-")?,
                (false, false) => {}
            }
            if self.im.abs().is_one() {
                f.write_str("i")?;
            } else {
                fmt_abs_rational(&self.im, f)?;
                f.write_str("*i")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses any scalar expression, in particular the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self, Error> {
        crate::front::parse::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(a: (i64, i64), b: (i64, i64)) -> GaussianRational {
        GaussianRational::new(rational(a.0, a.1), rational(b.0, b.1))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_integer(-1));
    }

    #[test]
    fn half_times_half_i() {
        let half = GaussianRational::frac(1, 2);
        let half_i = gr((0, 1), (1, 2));
        assert_eq!(&half * &half_i, gr((0, 1), (1, 4)));
    }

    #[test]
    fn squared_half_i_times_minus_one() {
        let half_i = gr((0, 1), (1, 2));
        let sq = &half_i * &half_i;
        assert_eq!(
            &sq * &GaussianRational::from_integer(-1),
            GaussianRational::frac(1, 4)
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = GaussianRational::one();
        assert!(matches!(
            one.checked_div(&GaussianRational::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(GaussianRational::zero().inv().is_err());
    }

    #[test]
    fn components_stay_reduced() {
        let x = gr((2, 4), (-6, 8));
        assert_eq!(x.re.numer(), &BigInt::from(1));
        assert_eq!(x.re.denom(), &BigInt::from(2));
        assert_eq!(x.im.numer(), &BigInt::from(-3));
        assert_eq!(x.im.denom(), &BigInt::from(4));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(gr((1, 2), (3, 4)).to_string(), "1/2 + 3/4*i");
        assert_eq!(gr((-1, 2), (-1, 1)).to_string(), "-1/2 - i");
        assert_eq!(gr((0, 1), (1, 4)).to_string(), "1/4*i");
        assert_eq!(gr((0, 1), (-1, 1)).to_string(), "-i");
        assert_eq!(GaussianRational::from_integer(-3).to_string(), "-3");
    }

    #[test]
    fn display_round_trips() {
        for x in [
            gr((1, 2), (3, 4)),
            gr((-1, 2), (-1, 1)),
            gr((0, 1), (1, 4)),
            gr((7, 1), (0, 1)),
            gr((0, 1), (-5, 3)),
            GaussianRational::zero(),
        ] {
            let back: GaussianRational = x.to_string().parse().unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn gaussian_integer_inverse() {
        // (1 + 2i)^-1 = (1 - 2i)/5
        let x = gr((1, 1), (2, 1));
        assert_eq!(x.inv().unwrap(), gr((1, 5), (-2, 5)));
    }
}
