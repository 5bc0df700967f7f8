//! Gaussian rationals: a + b·i with arbitrary-precision rational a, b.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use num_complex::Complex64;

use super::Ring;
use crate::Error;

/// An element of ℚ(i). Arithmetic is exact; conversion to `Complex64` is the
/// only lossy operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
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

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|² as an exact rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse. `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        fn f(r: &BigRational) -> f64 {
            let num = r.numer();
            let den = r.denom();
            bigint_to_f64(num) / bigint_to_f64(den)
        }
        Complex64::new(f(&self.re), f(&self.im))
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    num::ToPrimitive::to_f64(n).unwrap_or(f64::NAN)
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    /// Canonical text form: `3`, `-3/4`, `i`, `-i`, `2/3i`, `(1+2i)`,
    /// `(1/2-i)`. Mixed values are parenthesized so they can serve as
    /// coefficients in polynomial serialization without ambiguity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_part = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", fmt_rat(&self.im))
        };
        if self.re.is_zero() {
            return write!(f, "{}", im_part);
        }
        if self.im.is_negative() {
            write!(f, "({}{})", fmt_rat(&self.re), im_part)
        } else {
            write!(f, "({}+{})", fmt_rat(&self.re), im_part)
        }
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let bad = || Error::Parse(format!("invalid Gaussian rational `{s}`"));

        fn parse_rat(t: &str) -> Option<BigRational> {
            let t = t.trim();
            if let Some((n, d)) = t.split_once('/') {
                Some(BigRational::new(
                    BigInt::from_str(n.trim()).ok()?,
                    BigInt::from_str(d.trim()).ok()?,
                ))
            } else {
                Some(BigRational::from_integer(BigInt::from_str(t).ok()?))
            }
        }

        // single term: real, or something ending in `i`
        fn parse_term(t: &str) -> Option<GaussRat> {
            let t = t.trim();
            if let Some(coeff) = t.strip_suffix('i') {
                let coeff = coeff.trim();
                let im = match coeff {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    c => parse_rat(c.strip_suffix('*').unwrap_or(c))?,
                };
                Some(GaussRat::new(BigRational::zero(), im))
            } else {
                Some(GaussRat::new(parse_rat(t)?, BigRational::zero()))
            }
        }

        // split at the last +/- that is not leading
        let chars: Vec<char> = inner.chars().collect();
        for k in (1..chars.len()).rev() {
            if (chars[k] == '+' || chars[k] == '-') && chars[k - 1] != '/' && chars[k - 1] != '*' {
                let (a, b) = inner.split_at(inner.char_indices().nth(k).unwrap().0);
                let lhs = parse_term(a).ok_or_else(bad)?;
                let rhs = parse_term(b).ok_or_else(bad)?;
                if !(lhs.im.is_zero() && rhs.re.is_zero()) {
                    return Err(bad());
                }
                return Ok(GaussRat::new(lhs.re, rhs.im));
            }
        }
        parse_term(inner).ok_or_else(bad)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &'b GaussRat) -> GaussRat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &'b GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussRat::new(&a.re + &b.re, &a.im + &b.im));
binop!(Sub, sub, |a, b| GaussRat::new(&a.re - &b.re, &a.im - &b.im));
binop!(Mul, mul, |a, b| GaussRat::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl<'a, 'b> Div<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &'b GaussRat) -> GaussRat {
        self * &rhs.inv().expect("division by zero in GaussRat")
    }
}

impl Div<GaussRat> for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        &self / &rhs
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

impl Ring for GaussRat {
    fn zero_like(&self) -> Self {
        GaussRat::zero()
    }
    fn one_like(&self) -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = GaussRat::from_ratio(1, 2) + GaussRat::i() * GaussRat::from_int(3);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["3", "-3/4", "i", "-i", "2/3i", "(1+2i)", "(1/2-i)", "(-2-5/7i)"] {
            let g: GaussRat = s.parse().unwrap();
            assert_eq!(g.to_string(), s, "roundtrip of {s}");
        }
    }

    #[test]
    fn i_squared() {
        assert_eq!(GaussRat::i() * GaussRat::i(), GaussRat::from_int(-1));
    }
}
