//! Polynomials over a small prime field and Berlekamp's factoring algorithm.

use num::{BigInt, Integer, ToPrimitive};

/// Coefficients mod `p`, lowest degree first, trimmed.
pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn reduce_big(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn from_bigints(&self, f: &[BigInt]) -> PolyP {
        trim(f.iter().map(|c| self.reduce_big(c)).collect())
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        // p is prime, so a^(p-2) is the inverse.
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        trim((0..n)
            .map(|k| {
                (a.get(k).copied().unwrap_or(0) + self.p - b.get(k).copied().unwrap_or(0)) % self.p
            })
            .collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        trim(a.iter().map(|&x| self.mul_mod(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let db = b.len() - 1;
        let lc_inv = self.inv(b[db]);
        let mut rem = a.to_vec();
        if rem.len() <= db {
            return (Vec::new(), trim(rem));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let q = self.mul_mod(rem[k], lc_inv);
            if q == 0 {
                continue;
            }
            for (j, &c) in b.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = (rem[idx] + self.p - self.mul_mod(q, c)) % self.p;
            }
            quot[k - db] = q;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        trim(a.iter().enumerate().skip(1).map(|(k, &c)| self.mul_mod(c, k as u64 % self.p)).collect())
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &[u64], mut e: u64, m: &[u64]) -> PolyP {
        let mut acc = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let g = self.gcd(f, &self.derivative(f));
        g.len() == 1
    }

    /// Berlekamp factorization of a monic squarefree polynomial into monic
    /// irreducible factors, sorted by (degree, coefficients).
    pub fn berlekamp(&self, f: &[u64]) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let p = self.p;
        // Rows of Q: x^(i p) mod f.
        let xp = self.pow_mod(&[0, 1], p, f);
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = self.rem(&self.mul(&cur, &xp), f);
        }
        // Kernel of (Q - I)^T: vectors v with sum_i v_i (Q - I)[i][j] = 0.
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let q = rows[i][j];
                        if i == j {
                            (q + p - 1) % p
                        } else {
                            q
                        }
                    })
                    .collect()
            })
            .collect();
        let basis = self.kernel(&mut m, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        for v in basis.iter() {
            if factors.len() == r {
                break;
            }
            let v = trim(v.clone());
            if v.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for h in factors {
                if h.len() <= 2 {
                    next.push(h);
                    continue;
                }
                let mut h = h;
                for s in 0..p {
                    if h.len() <= 2 {
                        break;
                    }
                    let shifted = self.sub(&v, &[s]);
                    let g = self.gcd(&h, &shifted);
                    if g.len() > 1 && g.len() < h.len() {
                        h = self.div_rem(&h, &g).0;
                        next.push(g);
                    }
                }
                next.push(self.monic(&h));
            }
            factors = next;
        }
        factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        factors
    }

    /// Null space basis of the `n x n` matrix `m` (rows), by Gaussian elimination.
    fn kernel(&self, m: &mut [Vec<u64>], n: usize) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut pivot_col_of_row = Vec::new();
        let mut is_pivot = vec![false; n];
        let mut row = 0;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            let inv = self.inv(m[row][col]);
            for c in 0..n {
                m[row][c] = self.mul_mod(m[row][c], inv);
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..n {
                        let sub = self.mul_mod(factor, m[row][c]);
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
            row += 1;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = (p - m[r][free]) % p;
            }
            basis.push(v);
        }
        basis
    }
}

pub(crate) fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}
