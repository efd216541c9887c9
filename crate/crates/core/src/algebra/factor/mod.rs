//! Factorization of rational polynomials into irreducibles.
//!
//! The squarefree parts of the input are first stripped of cyclotomic
//! polynomials `Φ_n` and their trace images `Ψ_n` (the minimal polynomial of
//! `2cos(2π/n)`) by trial division; what remains is factored by Berlekamp's
//! algorithm modulo a small prime, Hensel lifting and recombination.

mod hensel;
mod modp;

use std::sync::OnceLock;

use num::{BigInt, One, Zero};

use super::poly::Poly;
use super::trace::TracePoly;
use crate::error::{Error, Result};
use hensel::{div_monic_exact, factor_monic_squarefree, monic_transform, primitive_z, undo_transform, PolyZ};

/// Largest index `n` tried by the cyclotomic fast path.
pub const CYCLOTOMIC_LIMIT: u32 = 120;

struct CyclotomicTables {
    /// `Φ_n` for `n = 1..=LIMIT` (index `n - 1`).
    phi: Vec<PolyZ>,
    /// `Ψ_n` for `n = 1..=LIMIT`.
    psi: Vec<PolyZ>,
}

fn tables() -> &'static CyclotomicTables {
    static TABLES: OnceLock<CyclotomicTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut phi: Vec<PolyZ> = Vec::new();
        for n in 1..=CYCLOTOMIC_LIMIT as usize {
            // x^n - 1 divided by Φ_d for proper divisors d
            let mut num: PolyZ = vec![BigInt::zero(); n + 1];
            num[0] = -BigInt::one();
            num[n] = BigInt::one();
            for d in 1..n {
                if n % d == 0 {
                    num = div_monic_exact(&num, &phi[d - 1]).expect("Φ_d divides x^n - 1");
                }
            }
            phi.push(num);
        }
        let psi = phi
            .iter()
            .enumerate()
            .map(|(i, p)| match i + 1 {
                1 => vec![BigInt::from(-2), BigInt::one()],
                2 => vec![BigInt::from(2), BigInt::one()],
                _ => {
                    let t = TracePoly::from_laurent(&super::LaurentPoly::from_poly(&Poly::from_bigints(p), 0))
                        .expect("Φ_n is palindromic of even degree for n >= 3");
                    int_coeffs(t.poly())
                }
            })
            .collect();
        CyclotomicTables { phi, psi }
    })
}

fn int_coeffs(p: &Poly) -> PolyZ {
    p.primitive_part().1
}

/// The `n`-th cyclotomic polynomial `Φ_n(x)`, for `1 <= n <= CYCLOTOMIC_LIMIT`.
pub fn cyclotomic(n: u32) -> Poly {
    assert!((1..=CYCLOTOMIC_LIMIT).contains(&n), "cyclotomic index out of range");
    Poly::from_bigints(&tables().phi[n as usize - 1])
}

/// The minimal polynomial of `2cos(2π/n)`, for `1 <= n <= CYCLOTOMIC_LIMIT`.
pub fn cyclotomic_trace(n: u32) -> Poly {
    assert!((1..=CYCLOTOMIC_LIMIT).contains(&n), "cyclotomic index out of range");
    Poly::from_bigints(&tables().psi[n as usize - 1])
}

/// `Some(n)` if `p` is a rational multiple of `Φ_n` with `n <= CYCLOTOMIC_LIMIT`.
pub fn cyclotomic_index(p: &Poly) -> Option<u32> {
    let prim = int_coeffs(p);
    tables().phi.iter().position(|c| *c == prim).map(|i| i as u32 + 1)
}

/// `Some(n)` if `q` is a rational multiple of `Ψ_n` with `n <= CYCLOTOMIC_LIMIT`.
pub fn cyclotomic_trace_index(q: &Poly) -> Option<u32> {
    let prim = int_coeffs(q);
    tables().psi.iter().position(|c| *c == prim).map(|i| i as u32 + 1)
}

/// Factor `q` into irreducible factors over the rationals.
///
/// Each factor has coprime integer coefficients and a positive leading
/// coefficient; the product of the factors raised to their multiplicities
/// equals `q` up to a rational constant. Factors are sorted by degree, then
/// coefficients. Constants have no factors.
pub fn factor_over_rationals(q: &Poly) -> Result<Vec<(Poly, usize)>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in q.squarefree_decomposition() {
        for f in factor_squarefree(&int_coeffs(&part)) {
            out.push((Poly::from_bigints(&f), mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| compare_polys(a, b));
    Ok(out)
}

/// Order by degree, then by integer coefficients from the top down.
pub fn compare_polys(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// True when `q` is non-constant and irreducible over the rationals.
pub fn is_irreducible(q: &Poly) -> bool {
    match factor_over_rationals(q) {
        Ok(f) => f.len() == 1 && f[0].1 == 1,
        Err(_) => false,
    }
}

fn factor_squarefree(f: &[BigInt]) -> Vec<PolyZ> {
    let mut f = primitive_z(f);
    let mut out = Vec::new();
    if f.len() <= 2 {
        if f.len() == 2 {
            out.push(f);
        }
        return out;
    }
    let t = tables();
    for cand in t.phi.iter().chain(t.psi.iter()) {
        if cand.len() > f.len() {
            continue;
        }
        if let Some(q) = div_monic_exact(&f, cand) {
            out.push(cand.clone());
            f = q;
            if f.len() <= 1 {
                return out;
            }
        }
    }
    let f = primitive_z(&f);
    if f.len() == 2 {
        out.push(f);
        return out;
    }
    let lc = f.last().unwrap().clone();
    let monic = monic_transform(&f);
    for g in factor_monic_squarefree(&monic) {
        out.push(undo_transform(&g, &lc));
    }
    out
}
