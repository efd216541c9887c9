//! The trace variable `z = x + x^-1` for self-reciprocal polynomials.

use num::Zero;

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial `q(z)` together with the self-reciprocal `p(x)` it came from,
/// related by `p(x) = ±x^k · x^(deg q) · q(x + x^-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TracePoly {
    q: Poly,
    source: LaurentPoly,
}

/// `x^k + x^-k` written in `z`, for `k = 0..=n` (with `k = 0` giving 2).
fn power_sums(n: usize) -> Vec<Poly> {
    let mut t = vec![Poly::from_ints(&[2]), Poly::var()];
    while t.len() <= n {
        let k = t.len();
        let next = &(&Poly::var() * &t[k - 1]) - &t[k - 2];
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

impl TracePoly {
    /// Convert a self-reciprocal Laurent polynomial with even span.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.span() % 2 == 1 {
            return Err(Error::OddSpan(p.span()));
        }
        let c = p.centered()?;
        let d = (c.span() / 2) as i64;
        if (1..=d).any(|k| c.coeff(k) != c.coeff(-k)) {
            return Err(Error::NotSymmetric(p.display_with("x")));
        }
        let sums = power_sums(d as usize);
        let mut q = Poly::constant(c.coeff(0));
        for k in 1..=d {
            let a = c.coeff(k);
            if !a.is_zero() {
                q = &q + &sums[k as usize].scale(&a);
            }
        }
        Ok(TracePoly { q, source: p.clone() })
    }

    /// Wrap a polynomial in `z`; the source is its pull-back.
    pub fn from_poly(q: Poly) -> Self {
        let source = pull_back(&q);
        TracePoly { q, source }
    }

    pub fn poly(&self) -> &Poly {
        &self.q
    }

    pub fn source(&self) -> &LaurentPoly {
        &self.source
    }

    pub fn degree(&self) -> usize {
        self.q.degree().unwrap_or(0)
    }

    /// `x^(deg q) · q(x + x^-1)` as a Laurent polynomial with lowest exponent 0.
    pub fn pull_back(&self) -> LaurentPoly {
        pull_back(&self.q)
    }
}

/// `x^d · q(x + x^-1)` for `d = deg q`.
pub fn pull_back(q: &Poly) -> LaurentPoly {
    let Some(d) = q.degree() else {
        return LaurentPoly::zero();
    };
    // z^k x^d = (x^2 + 1)^k x^(d - k)
    let x2p1 = Poly::from_ints(&[1, 0, 1]);
    let mut acc = Poly::zero();
    let mut pw = Poly::one();
    for k in 0..=d {
        let c: &Rational = &q.coeffs()[k];
        if !c.is_zero() {
            acc = &acc + &pw.shift(d - k).scale(c);
        }
        pw = &pw * &x2p1;
    }
    LaurentPoly::from_poly(&acc, 0)
}
