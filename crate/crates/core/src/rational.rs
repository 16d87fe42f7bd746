//! Exact signed rationals over arbitrary-precision integers.
//!
//! A thin newtype over [`num_rational::BigRational`] that keeps every value in
//! canonical form (positive denominator, coprime parts) and adds the handful of
//! operations the bound code needs: floor/ceil, perfect-square roots, and a
//! float-free decimal rendering for human output.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// An exact rational number. Always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, RationalError> {
        let d = denominator.into();
        if d.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator.into(), d)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, RationalError> {
        if rhs.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, RationalError> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Exact square root when `self` is the square of a rational, `None`
    /// otherwise (including negative values).
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        if &(&n * &n) == self.0.numer() && &(&d * &d) == self.0.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Decimal rendering with `sig` significant digits, rounded half away
    /// from zero and with trailing zeros trimmed. Computed with integers only.
    pub fn to_decimal(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        let ten = BigInt::from(10);

        // exponent e with 10^e <= |x| < 10^(e+1)
        let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ge_pow = |e: i64| -> bool {
            if e >= 0 {
                num >= &den * num_traits::pow(ten.clone(), e as usize)
            } else {
                &num * num_traits::pow(ten.clone(), (-e) as usize) >= den
            }
        };
        while !ge_pow(e) {
            e -= 1;
        }
        while ge_pow(e + 1) {
            e += 1;
        }

        // scaled = round(|x| * 10^(sig-1-e))
        let shift = sig as i64 - 1 - e;
        let (sn, sd) = if shift >= 0 {
            (&num * num_traits::pow(ten.clone(), shift as usize), den.clone())
        } else {
            (num.clone(), &den * num_traits::pow(ten.clone(), (-shift) as usize))
        };
        let (q, r) = sn.div_rem(&sd);
        let mut digits = if &r * 2 >= sd { q + 1 } else { q };
        let mut shift = shift;
        if digits.to_string().len() as u32 > sig {
            digits /= 10;
            shift -= 1;
        }

        let s = digits.to_string();
        let mut out = if shift <= 0 {
            let mut s = s;
            s.extend(std::iter::repeat_n('0', (-shift) as usize));
            s
        } else if (shift as usize) < s.len() {
            let (int, frac) = s.split_at(s.len() - shift as usize);
            format!("{int}.{frac}")
        } else {
            let zeros = shift as usize - s.len();
            format!("0.{}{}", "0".repeat(zeros), s)
        };
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        if neg {
            out.insert(0, '-');
        }
        out
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    /// Accepts `p`, `p/q` and plain decimals such as `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || RationalError::Parse(s.to_string());
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return Rational::new(p, q);
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let neg = int.starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            let whole: BigInt = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                int_digits.parse().map_err(|_| bad())?
            };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let frac: BigInt = frac.parse().map_err(|_| bad())?;
            let mag = Rational::new(whole * &scale + frac, scale)?;
            return Ok(if neg { -mag } else { mag });
        }
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rational::integer(n))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("numerator", &self.0.numer().to_string())?;
        st.serialize_field("denominator", &self.0.denom().to_string())?;
        st.end()
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, i128, u32, u64, usize, BigInt);

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like the integer operators. Use `checked_div` when
// the divisor is data-dependent.
binop!(Div, div);

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

/// Shorthand for `Rational::new(n, d).unwrap()` with small literals.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = ratio(6, -4);
        assert_eq!(r.numerator(), &BigInt::from(-3));
        assert_eq!(r.denominator(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(ratio(14, 2).to_string(), "7");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(Rational::new(1, 0), Err(RationalError::DivisionByZero));
        assert_eq!(ratio(1, 2).checked_div(&Rational::zero()), Err(RationalError::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(ratio(11, 3).floor(), BigInt::from(3));
        assert_eq!(ratio(11, 3).ceil(), BigInt::from(4));
        assert_eq!(ratio(-11, 3).floor(), BigInt::from(-4));
        assert_eq!(ratio(-11, 3).ceil(), BigInt::from(-3));
        assert_eq!(ratio(6, 1).ceil(), BigInt::from(6));
    }

    #[test]
    fn perfect_square_roots() {
        assert_eq!(ratio(9, 4).sqrt_exact(), Some(ratio(3, 2)));
        assert_eq!(Rational::from(16).sqrt_exact(), Some(Rational::from(4)));
        assert_eq!(Rational::from(2).sqrt_exact(), None);
        assert_eq!(Rational::from(-4).sqrt_exact(), None);
        assert_eq!(Rational::zero().sqrt_exact(), Some(Rational::zero()));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ratio(2, 11).to_decimal(6), "0.181818");
        assert_eq!(ratio(225, 11).to_decimal(6), "20.4545");
        assert_eq!(ratio(7, 1).to_decimal(6), "7");
        assert_eq!(ratio(-1, 3).to_decimal(6), "-0.333333");
        assert_eq!(ratio(2, 3).to_decimal(6), "0.666667");
        assert_eq!(ratio(9999995, 10).to_decimal(6), "1000000");
        assert_eq!(ratio(1, 400).to_decimal(6), "0.0025");
        assert_eq!(Rational::from(123456789).to_decimal(6), "123457000");
    }

    #[test]
    fn parsing() {
        assert_eq!("1/4".parse::<Rational>().unwrap(), ratio(1, 4));
        assert_eq!("-6/4".parse::<Rational>().unwrap(), ratio(-3, 2));
        assert_eq!("0.25".parse::<Rational>().unwrap(), ratio(1, 4));
        assert_eq!("-0.5".parse::<Rational>().unwrap(), ratio(-1, 2));
        assert_eq!("12".parse::<Rational>().unwrap(), Rational::from(12));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
    }
}
