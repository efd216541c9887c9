//! Hermitian forms `(1 - ω)V + (1 - ω̄)Vᵀ` over `K(ω)`, where `K` is a real
//! field containing `c = ω + ω^-1` and `ω^2 = cω - 1`.
//!
//! For `-2 < c < 2` the quadratic `ω^2 - cω + 1` has no real roots, so `K(ω)`
//! is a field with conjugation `ω ↦ c - ω`. Congruence diagonalization over
//! `K(ω)` leaves real diagonal entries in `K`, whose signs under the embedding
//! give the signature.

use num::Zero;
use rayon::prelude::*;

use crate::algebra::{NumberField, RealField, Rational, Rationals, UnitRoot};
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;

/// `a + bω`.
#[derive(Clone, Debug)]
struct Q<E> {
    a: E,
    b: E,
}

struct Ext<'f, F: RealField> {
    k: &'f F,
    c: F::Elem,
}

impl<'f, F: RealField> Ext<'f, F> {
    fn new(k: &'f F) -> Self {
        Ext { k, c: k.distinguished() }
    }

    fn is_zero(&self, x: &Q<F::Elem>) -> bool {
        self.k.is_zero(&x.a) && self.k.is_zero(&x.b)
    }

    fn add(&self, x: &Q<F::Elem>, y: &Q<F::Elem>) -> Q<F::Elem> {
        Q { a: self.k.add(&x.a, &y.a), b: self.k.add(&x.b, &y.b) }
    }

    fn sub(&self, x: &Q<F::Elem>, y: &Q<F::Elem>) -> Q<F::Elem> {
        Q { a: self.k.sub(&x.a, &y.a), b: self.k.sub(&x.b, &y.b) }
    }

    fn mul(&self, x: &Q<F::Elem>, y: &Q<F::Elem>) -> Q<F::Elem> {
        let k = self.k;
        let bb = k.mul(&x.b, &y.b);
        let a = k.sub(&k.mul(&x.a, &y.a), &bb);
        let b = k.add(&k.add(&k.mul(&x.a, &y.b), &k.mul(&x.b, &y.a)), &k.mul(&bb, &self.c));
        Q { a, b }
    }

    fn scale(&self, x: &Q<F::Elem>, s: &F::Elem) -> Q<F::Elem> {
        Q { a: self.k.mul(&x.a, s), b: self.k.mul(&x.b, s) }
    }

    fn conj(&self, x: &Q<F::Elem>) -> Q<F::Elem> {
        let k = self.k;
        Q { a: k.add(&x.a, &k.mul(&x.b, &self.c)), b: k.neg(&x.b) }
    }

}

/// Diagonal of a congruence diagonalization: nonzero real entries plus the
/// dimension of the radical.
#[derive(Clone, Debug)]
pub struct Diagonal<E> {
    pub entries: Vec<E>,
    pub nullity: usize,
}

impl<E> Diagonal<E> {
    /// Signature under the field's embedding.
    pub fn signature<F: RealField<Elem = E>>(&self, k: &F) -> i32 {
        self.entries.iter().map(|e| k.sign(e)).sum()
    }
}

/// Diagonalize `(1 - ω)V + (1 - ω̄)Vᵀ` over `K(ω)` with `ω + ω^-1` equal to the
/// field's distinguished element.
pub fn diagonalize<F: RealField>(k: &F, v: &SeifertMatrix) -> Diagonal<F::Elem> {
    let ext = Ext::new(k);
    let n = v.size();
    let one_minus_c = k.sub(&k.one(), &ext.c);
    let mut m: Vec<Vec<Q<F::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let vij = k.from_int(v.get(i, j));
                    let vji = k.from_int(v.get(j, i));
                    Q { a: k.add(&vij, &k.mul(&one_minus_c, &vji)), b: k.sub(&vji, &vij) }
                })
                .collect()
        })
        .collect();

    let mut entries = Vec::with_capacity(n);
    for p in 0..n {
        // Pivot: a nonzero diagonal entry, or manufacture one from a nonzero
        // off-diagonal entry.
        if let Some(i) = (p..n).find(|&i| !k.is_zero(&m[i][i].a)) {
            swap_sym(&mut m, p, i);
        } else {
            let found = (p..n).find_map(|i| (i + 1..n).find(|&j| !ext.is_zero(&m[i][j])).map(|j| (i, j)));
            let Some((i, j)) = found else {
                return Diagonal { entries, nullity: n - p };
            };
            swap_sym(&mut m, p, i);
            let j = if j == p { i } else { j };
            // row_p += a row_j, col_p += conj(a) col_j with a = m[p][j]
            let a = m[p][j].clone();
            let ac = ext.conj(&a);
            for col in p..n {
                let add = ext.mul(&a, &m[j][col]);
                m[p][col] = ext.add(&m[p][col], &add);
            }
            for row in p..n {
                let add = ext.mul(&m[row][j], &ac);
                m[row][p] = ext.add(&m[row][p], &add);
            }
            debug_assert!(k.is_zero(&m[p][p].b));
        }
        let d = m[p][p].a.clone();
        let d_inv = k.inv(&d);
        // Schur complement on the trailing block, upper triangle then mirror.
        let factors: Vec<Q<F::Elem>> = (p + 1..n).map(|i| ext.scale(&m[i][p], &d_inv)).collect();
        for i in p + 1..n {
            let f = &factors[i - p - 1];
            for j in i..n {
                let upd = ext.mul(f, &m[p][j]);
                m[i][j] = ext.sub(&m[i][j], &upd);
            }
            m[i][i].b = k.zero();
            for j in i + 1..n {
                m[j][i] = ext.conj(&m[i][j]);
            }
        }
        entries.push(d);
    }
    Diagonal { entries, nullity: 0 }
}

fn swap_sym<E>(m: &mut [Vec<E>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Signature of `W(ω)` at the point with `ω + ω^-1 = z`, `-2 < z < 2`. The
/// form must be nonsingular there.
pub fn signature_at_sample(v: &SeifertMatrix, z: &Rational) -> Result<i32> {
    let two = Rational::from_integer(2.into());
    if z <= &-two.clone() || z >= &two {
        return Err(Error::SingularSample(format!("{z} (outside (-2, 2))")));
    }
    let k = Rationals { value: z.clone() };
    let mut total = 0;
    for block in v.blocks() {
        let d = diagonalize(&k, &v.principal(&block));
        if d.nullity > 0 {
            return Err(Error::SingularSample(z.to_string()));
        }
        total += d.signature(&k);
    }
    Ok(total)
}

/// Signatures (positive minus negative count) and nullities of `W(ω)` at every
/// root in `roots`, all of which must share one irreducible trace polynomial.
pub fn signatures_at_roots(v: &SeifertMatrix, roots: &[UnitRoot]) -> Vec<(i32, usize)> {
    let Some(first) = roots.first() else {
        return Vec::new();
    };
    let field = NumberField::at_root(first);
    let diagonals: Vec<Diagonal<_>> = v
        .blocks()
        .par_iter()
        .map(|block| diagonalize(&field, &v.principal(block)))
        .collect();
    roots
        .iter()
        .map(|r| {
            let emb = field.with_embedding(r);
            diagonals
                .iter()
                .fold((0, 0), |(s, nul), d| (s + d.signature(&emb), nul + d.nullity))
        })
        .collect()
}

/// The signature of the possibly singular form at a single root: the
/// non-balanced signature there.
pub fn nonbalanced_at_root(v: &SeifertMatrix, root: &UnitRoot) -> i32 {
    signatures_at_roots(v, std::slice::from_ref(root))[0].0
}

/// Signature of the symmetric matrix `V + Vᵀ` (the value at `ω = -1`).
pub fn murasugi_signature(v: &SeifertMatrix) -> i32 {
    let n = v.size();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer((v.get(i, j) + v.get(j, i)).into())).collect())
        .collect();
    let mut sig = 0;
    for p in 0..n {
        if let Some(i) = (p..n).find(|&i| !m[i][i].is_zero()) {
            swap_sym(&mut m, p, i);
        } else {
            let Some((i, j)) = (p..n).find_map(|i| (i + 1..n).find(|&j| !m[i][j].is_zero()).map(|j| (i, j))) else {
                break;
            };
            swap_sym(&mut m, p, i);
            let j = if j == p { i } else { j };
            for col in p..n {
                let add = m[j][col].clone();
                m[p][col] += add;
            }
            for row in p..n {
                let add = m[row][j].clone();
                m[row][p] += add;
            }
        }
        let d = m[p][p].clone();
        for i in p + 1..n {
            let f = &m[i][p] / &d;
            for j in p + 1..n {
                let upd = &f * &m[p][j];
                m[i][j] -= upd;
            }
        }
        sig += if d > Rational::zero() { 1 } else { -1 };
    }
    sig
}
