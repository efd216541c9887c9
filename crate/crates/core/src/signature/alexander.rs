//! The Alexander polynomial `Δ(x) = x^-g · det(V - xVᵀ)`.

use num::{BigInt, One, Zero};

use crate::algebra::{LaurentPoly, Poly, Rational};
use crate::seifert::{integer_determinant, SeifertMatrix};

/// `det(V - xVᵀ)` for `x = 0, 1, ..., n`, interpolated in the Newton basis.
fn det_polynomial(v: &SeifertMatrix) -> Poly {
    let n = v.size();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|x| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(v.get(i, j) - x * v.get(j, i))).collect())
                .collect();
            integer_determinant(m)
        })
        .collect();
    // forward differences Δ^k f(0), then p(x) = Σ Δ^k f(0) · C(x, k)
    let mut diffs = values;
    let mut leading = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut out = Poly::zero();
    let mut binom = Poly::one();
    for (k, d) in leading.iter().enumerate() {
        if !d.is_zero() {
            out = &out + &binom.scale(&Rational::from_integer(d.clone()));
        }
        // C(x, k+1) = C(x, k) · (x - k) / (k + 1)
        let step = Poly::from_coeffs(vec![
            Rational::new(BigInt::from(-(k as i64)), BigInt::from(k as i64 + 1)),
            Rational::new(BigInt::one(), BigInt::from(k as i64 + 1)),
        ]);
        binom = &binom * &step;
    }
    out
}

/// The symmetric Alexander polynomial of the knot with Seifert matrix `v`,
/// normalized so that `Δ(x^-1) = Δ(x)` and `Δ(1) = 1`.
pub fn alexander_polynomial(v: &SeifertMatrix) -> LaurentPoly {
    let det = v
        .blocks()
        .iter()
        .map(|b| det_polynomial(&v.principal(b)))
        .fold(Poly::one(), |acc, p| &acc * &p);
    LaurentPoly::from_poly(&det, -(v.genus() as i64))
}
