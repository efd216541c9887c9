//! Laurent polynomials in `x` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Zero};

use super::poly::{render_terms, Poly};
use super::Rational;
use crate::error::{Error, Result};

/// `sum_k c_k x^(low + k)`, with nonzero first and last coefficients.
///
/// The zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::new(0, vec![Rational::one()])
    }

    /// `x^k`.
    pub fn monomial(k: i64) -> Self {
        LaurentPoly::new(k, vec![Rational::one()])
    }

    pub fn new(low: i64, coeffs: Vec<Rational>) -> Self {
        let start = coeffs.iter().position(|c| !c.is_zero());
        let Some(start) = start else {
            return LaurentPoly::zero();
        };
        let end = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        LaurentPoly {
            low: low + start as i64,
            coeffs: coeffs[start..=end].to_vec(),
        }
    }

    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(low, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `x^shift * p(x)`.
    pub fn from_poly(p: &Poly, shift: i64) -> Self {
        LaurentPoly::new(shift, p.coeffs().to_vec())
    }

    /// The ordinary polynomial `x^(-low) * self`, whose constant term is nonzero.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: i64) -> Rational {
        let idx = k - self.low;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::new(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluate at a nonzero rational.
    pub fn eval(&self, x: &Rational) -> Rational {
        let body = self.to_poly().eval(x);
        if self.low >= 0 {
            body * pow_rational(x, self.low as u64)
        } else {
            body / pow_rational(x, self.low.unsigned_abs())
        }
    }

    /// `p(x^-1)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly::new(-self.high(), coeffs)
    }

    /// Formal derivative `d/dx`, negative exponents included.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(self.low + k as i64)))
            .collect();
        LaurentPoly::new(self.low - 1, coeffs)
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let q = self.to_poly().exact_div(&d.to_poly()).ok_or(Error::NotDivisible)?;
        Ok(LaurentPoly::from_poly(&q, self.low - d.low))
    }

    /// Greatest common divisor, normalized to lowest exponent 0 with primitive
    /// integer coefficients and positive leading coefficient. Units `±x^k` are
    /// invisible to this normalization.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> Self {
        let g = Poly::gcd(&a.to_poly(), &b.to_poly());
        LaurentPoly::from_poly(&g.primitive(), 0)
    }

    /// True when `p(x^-1) = ±x^k p(x)` for some `k`.
    pub fn is_self_reciprocal(&self) -> bool {
        let r = self.reciprocal().shift(self.low + self.high());
        &r == self || r == -self
    }

    /// Shift so the exponents run symmetrically from `-span/2` to `span/2`.
    /// Requires an even span.
    pub fn centered(&self) -> Result<Self> {
        if self.span() % 2 == 1 {
            return Err(Error::OddSpan(self.span()));
        }
        Ok(self.shift(-(self.low + self.span() as i64 / 2)))
    }

    /// Integer coefficients, lowest exponent first, or `None` if some coefficient
    /// is not an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Render in the given variable, highest exponent first.
    pub fn display_with(&self, var: &str) -> String {
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (self.low + k as i64, c.clone()))
            .collect();
        render_terms(&terms, var)
    }
}

fn pow_rational(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.display_with("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        LaurentPoly::new(low, (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_poly(&(&self.to_poly() * &rhs.to_poly()), self.low + rhs.low)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
