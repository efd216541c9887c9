#![allow(dead_code)]

use nalgebra::{Complex, DMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tristram::{resolve_expression, KnotTable, SeifertMatrix};

pub const SEED: u64 = 0x7157_2a11;

const TORUS: &[&str] = &["T(2,3)", "T(2,5)", "T(3,4)", "T(2,7)", "T(3,5)"];

/// Names in the built-in table, unknot excluded.
pub fn table_names() -> Vec<String> {
    KnotTable::builtin()
        .entries()
        .iter()
        .map(|e| e.name.clone())
        .filter(|n| n != "0_1")
        .collect()
}

/// Random connected sums of table knots, torus knots and mirrors.
pub fn random_expressions(count: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = table_names();
    (0..count)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            let parts: Vec<String> = (0..terms)
                .map(|_| {
                    let base = if rng.gen_bool(0.2) {
                        TORUS.choose(&mut rng).unwrap().to_string()
                    } else {
                        names.choose(&mut rng).unwrap().clone()
                    };
                    if rng.gen_bool(0.5) {
                        format!("-{base}")
                    } else {
                        base
                    }
                })
                .collect();
            parts.join(" # ")
        })
        .collect()
}

/// Every table knot plus fifty random expressions.
pub fn suite() -> Vec<(String, SeifertMatrix)> {
    let table = KnotTable::builtin();
    let mut out: Vec<(String, SeifertMatrix)> =
        table.entries().iter().map(|e| (e.name.clone(), e.matrix.clone())).collect();
    for e in random_expressions(50, SEED) {
        let v = resolve_expression(&e, &table).unwrap();
        out.push((e, v));
    }
    out
}

pub fn resolve(e: &str) -> SeifertMatrix {
    resolve_expression(e, &KnotTable::builtin()).unwrap()
}

/// `(1 - ω)V + (1 - ω̄)Vᵀ` in floating point for `ω = e^(2πit)` with
/// `ω + ω̄ = z`.
pub fn float_form(v: &SeifertMatrix, z: f64) -> DMatrix<Complex<f64>> {
    let omega = Complex::new(z / 2.0, (1.0 - z * z / 4.0).max(0.0).sqrt());
    let one = Complex::new(1.0, 0.0);
    let n = v.size();
    DMatrix::from_fn(n, n, |i, j| {
        (one - omega) * v.get(i, j) as f64 + (one - omega.conj()) * v.get(j, i) as f64
    })
}

/// Signature and nullity from floating-point eigenvalues. Returns `None` when
/// some eigenvalue is too close to the rounding threshold to classify.
pub fn float_signature(v: &SeifertMatrix, z: f64) -> Option<(i32, usize)> {
    let n = v.size();
    if n == 0 {
        return Some((0, 0));
    }
    let w = float_form(v, z);
    let norm = w.norm();
    let eig = w.symmetric_eigenvalues();
    // eigenvalues of a hermitian matrix move by at most the perturbation norm
    let err = 1e-9 * norm.max(1.0);
    let mut sig = 0;
    let mut nullity = 0;
    for &l in eig.iter() {
        if l.abs() <= err {
            nullity += 1;
        } else if l.abs() < 1e3 * err {
            return None;
        } else {
            sig += if l > 0.0 { 1 } else { -1 };
        }
    }
    Some((sig, nullity))
}

/// `det(V - xVᵀ)` in floating point.
pub fn float_alexander_det(v: &SeifertMatrix, x: f64) -> f64 {
    let n = v.size();
    if n == 0 {
        return 1.0;
    }
    DMatrix::from_fn(n, n, |i, j| v.get(i, j) as f64 - x * v.get(j, i) as f64).determinant()
}
