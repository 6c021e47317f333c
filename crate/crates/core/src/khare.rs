//! The SL(2,ℂ) / A+∞ bridge.
//!
//! A deformation of the symplectic oscillator algebra is specified by a
//! polynomial f in the quadratic Casimir. On the quiver side it becomes the
//! weight λ_i = (i+1)(1+f(b_i)) where b_i = i(i+2)/8 is the Casimir scalar on
//! the (i+1)-dimensional irreducible. The module classifications on the two
//! sides match interval by interval; `enumerate_vrs` lists the modules
//! V(r,s) = ⊕_{i=s}^r V_C(i) directly from the partial-sum conditions.
//!
//! The classical convention takes f without constant term; a constant term is
//! accepted here since only the combination 1+f enters the dictionary.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// A polynomial in the Casimir Δ with exact rational coefficients, stored low
/// degree first. JSON form: a list of `[num, den]` integer pairs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CasimirPolynomial {
    coeffs: Vec<BigRational>,
}

impl Serialize for CasimirPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[serde_json::Number; 2]> = self
            .coeffs
            .iter()
            .map(|c| {
                [
                    crate::scalar::bigint_to_number(c.numer()),
                    crate::scalar::bigint_to_number(c.denom()),
                ]
            })
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CasimirPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let pairs = Vec::<[serde_json::Number; 2]>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(pairs.len());
        for [num, den] in &pairs {
            let n = crate::scalar::number_to_bigint(num).map_err(D::Error::custom)?;
            let d = crate::scalar::number_to_bigint(den).map_err(D::Error::custom)?;
            if d.is_zero() {
                return Err(D::Error::custom("zero denominator in coefficient"));
            }
            coeffs.push(BigRational::new(n, d));
        }
        Ok(CasimirPolynomial::new(coeffs))
    }
}

impl CasimirPolynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CasimirPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        CasimirPolynomial { coeffs: vec![] }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        CasimirPolynomial::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    /// Parses a comma-separated coefficient list, low degree first, each
    /// entry an integer or `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(CasimirPolynomial::zero());
        }
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let sc = Scalar::parse(part)?;
            if !sc.is_real() {
                return Err(Error::Parse(format!("coefficient `{part}` is not rational")));
            }
            coeffs.push(sc.re().clone());
        }
        Ok(CasimirPolynomial::new(coeffs))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn has_constant_term(&self) -> bool {
        self.coeffs.first().is_some_and(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// (i+1)(1+f(b_i)) as an exact scalar.
    pub fn khare_value(&self, i: u64) -> Scalar {
        let b = casimir_scalar_rational(i);
        let val = (BigRational::one() + self.eval(&b))
            * BigRational::from_integer((i + 1).into());
        Scalar::from_rational(val)
    }
}

fn casimir_scalar_rational(i: u64) -> BigRational {
    BigRational::new((i * (i + 2)).into(), 8.into())
}

/// b_i = i(i+2)/8, the scalar by which the Casimir acts on the
/// (i+1)-dimensional irreducible.
pub fn casimir_scalar(i: u64) -> Scalar {
    Scalar::from_rational(casimir_scalar_rational(i))
}

/// The weight λ with λ_i = (i+1)(1+f(b_i)).
pub fn khare_lambda(f: &CasimirPolynomial) -> Weight {
    Weight::khare(f.clone())
}

/// A module V(r,s) = ⊕_{i=s}^r V_C(i); dimension Σ_{i=s}^r (i+1).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VrsModule {
    pub s: u64,
    pub r: u64,
    pub dim: u64,
}

impl VrsModule {
    fn new(s: u64, r: u64) -> Self {
        let dim = (s..=r).map(|i| i + 1).sum();
        VrsModule { s, r, dim }
    }
}

/// All (s,r) with r ≤ r_max such that Σ_{i=s}^r λ_i = 0 and every proper tail
/// sum Σ_{i=k}^r λ_i (s < k ≤ r) is nonzero, for λ_i = (i+1)(1+f(b_i)).
///
/// For fixed r at most one s qualifies: the largest k with vanishing tail sum.
pub fn enumerate_vrs(f: &CasimirPolynomial, r_max: u64) -> Vec<VrsModule> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        let mut tail = Scalar::zero();
        for k in (0..=r).rev() {
            tail += &f.khare_value(k);
            if tail.is_zero() {
                out.push(VrsModule::new(k, r));
                break;
            }
        }
    }
    out.sort_by_key(|m| (m.r, m.s));
    out
}

/// The parameter dictionary for Γ = SL(2,ℂ): a deformation datum
/// c = (1+f(Δ))δ_e and coupling k map to (λ, ν) with λ_i = (i+1)(1+f(b_i))
/// and ν = 2k.
pub fn morita_params(f: &CasimirPolynomial, k: &Scalar) -> (Weight, Scalar) {
    (khare_lambda(f), &Scalar::from_int(2) * k)
}
