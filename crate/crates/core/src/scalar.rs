//! Exact scalars: the field ℚ(i) of Gaussian rationals.
//!
//! A [`Scalar`] is a pair of arbitrary-precision rationals (real and imaginary
//! part). The derived total order is lexicographic with respect to the real
//! basis {1, i}: compare real parts first, then imaginary parts. It is
//! translation-invariant, restricts to the usual order on the integers, and
//! every scalar is below some integer, which is all the dominance machinery
//! needs. It is not compatible with multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element of ℚ(i), kept in reduced form by `num-rational`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
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

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        // 1/(a+bi) = (a-bi)/(a²+b²)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar::new(&self.re / &norm, -&self.im / &norm))
    }

    /// The total order ≺ used throughout: lexicographic on (Re, Im).
    pub fn precedes(&self, other: &Scalar) -> bool {
        self.cmp(other) == Ordering::Less
    }

    /// Parses "a", "a/b", "a+b/ci", "-3/2-1/4i", "i", "-i".
    pub fn parse(s: &str) -> Result<Scalar, Error> {
        parse_scalar(s)
    }
}

/// Spec-level comparison entry point for the order ≺.
pub fn compare(x: &Scalar, y: &Scalar) -> Ordering {
    x.cmp(y)
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = |_| Error::Parse(format!("invalid rational `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(bad)?;
        let d = BigInt::from_str(den.trim()).map_err(bad)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(bad)?;
        Ok(BigRational::from_integer(n))
    }
}

fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    if let Some(im_part) = s.strip_suffix('i') {
        // Split off the trailing imaginary term: scan for the last +/- that is
        // not a leading sign and not inside a fraction.
        let bytes = im_part.as_bytes();
        let mut split = None;
        for (pos, &b) in bytes.iter().enumerate().skip(1).rev() {
            if b == b'+' || b == b'-' {
                split = Some(pos);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(pos) => (&im_part[..pos], &im_part[pos..]),
            None => ("", im_part),
        };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        let re = if re_str.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_str)?
        };
        Ok(Scalar::new(re, im))
    } else {
        Ok(Scalar::from_rational(parse_rational(&s)?))
    }
}

// JSON form: a 4-tuple of integers (re_num, re_den, im_num, im_den). The
// integers are emitted as JSON numbers with full precision (serde_json's
// arbitrary_precision feature), never as floats or strings.
pub(crate) fn bigint_to_number(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integer literal")
}

pub(crate) fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt, String> {
    let s = n.to_string();
    BigInt::from_str(&s).map_err(|_| format!("expected an integer, got `{s}`"))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(4)?;
        tup.serialize_element(&bigint_to_number(self.re.numer()))?;
        tup.serialize_element(&bigint_to_number(self.re.denom()))?;
        tup.serialize_element(&bigint_to_number(self.im.numer()))?;
        tup.serialize_element(&bigint_to_number(self.im.denom()))?;
        tup.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ScalarVisitor;
        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a 4-tuple of integers [re_num, re_den, im_num, im_den]")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Scalar, A::Error> {
                let mut parts = Vec::with_capacity(4);
                while let Some(n) = seq.next_element::<serde_json::Number>()? {
                    parts.push(number_to_bigint(&n).map_err(de::Error::custom)?);
                }
                if parts.len() != 4 {
                    return Err(de::Error::invalid_length(parts.len(), &self));
                }
                let im_den = parts.pop().unwrap();
                let im_num = parts.pop().unwrap();
                let re_den = parts.pop().unwrap();
                let re_num = parts.pop().unwrap();
                if re_den.is_zero() || im_den.is_zero() {
                    return Err(de::Error::custom("zero denominator in scalar"));
                }
                Ok(Scalar::new(
                    BigRational::new(re_num, re_den),
                    BigRational::new(im_num, im_den),
                ))
            }
        }
        deserializer.deserialize_tuple(4, ScalarVisitor)
    }
}
