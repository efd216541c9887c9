//! Factoring squarefree integer polynomials: modular factorization, Hensel
//! lifting and recombination of lifted factors.

use num::{BigInt, Integer, One, Signed, Zero};

use super::modp::{Fp, PolyP};

pub(crate) type PolyZ = Vec<BigInt>;

const PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

/// Number of admissible primes compared before committing to the one with the
/// fewest modular factors.
const PRIME_TRIALS: usize = 5;

pub(crate) fn trim_z(mut a: PolyZ) -> PolyZ {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> PolyZ {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_z(out)
}

/// Division by a monic integer polynomial; `None` unless exact.
pub(crate) fn div_monic_exact(a: &[BigInt], b: &[BigInt]) -> Option<PolyZ> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() <= db {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let q = rem[k].clone();
        if q.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k - db + j] -= &q * c;
        }
        quot[k - db] = q;
    }
    rem[..db].iter().all(Zero::is_zero).then(|| trim_z(quot))
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_sym(a: &[BigInt], m: &BigInt) -> PolyZ {
    trim_z(a.iter().map(|c| symmetric_mod(c, m)).collect())
}

fn to_z(a: &PolyP) -> PolyZ {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn add_scaled(a: &[BigInt], b: &PolyP, m: &BigInt) -> PolyZ {
    let n = a.len().max(b.len());
    trim_z(
        (0..n)
            .map(|k| {
                let x = a.get(k).cloned().unwrap_or_default();
                let y = b.get(k).copied().unwrap_or(0);
                x + m * BigInt::from(y)
            })
            .collect(),
    )
}

/// Lift `f ≡ g0 h0 (mod p)` to `f ≡ g h (mod p^k)` with monic `g`, `h`.
fn lift_pair(fp: &Fp, f: &[BigInt], g0: &PolyP, h0: &PolyP, k: u32) -> (PolyZ, PolyZ) {
    let (_, s, t) = fp.ext_gcd(g0, h0);
    let pb = BigInt::from(fp.p);
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let mut m = pb.clone();
    for _ in 1..k {
        let gh = mul_z(&g, &h);
        let n = f.len().max(gh.len());
        let diff: PolyZ = (0..n)
            .map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default())
            .collect();
        let e: PolyZ = diff.iter().map(|c| c / &m).collect();
        let ep = fp.from_bigints(&e);
        let a = fp.rem(&fp.mul(&t, &ep), g0);
        let b = fp.rem(&fp.mul(&s, &ep), h0);
        g = add_scaled(&g, &a, &m);
        h = add_scaled(&h, &b, &m);
        m *= &pb;
    }
    (reduce_sym(&g, &m), reduce_sym(&h, &m))
}

/// Coefficient bound for integer factors of `f`.
fn factor_bound(f: &[BigInt]) -> BigInt {
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    (norm2.sqrt() + 1) << (f.len() - 1)
}

fn choose_prime(f: &[BigInt]) -> (Fp, Vec<PolyP>) {
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let fp = Fp { p };
        let fm = fp.from_bigints(f);
        if fm.len() != f.len() || !fp.is_squarefree(&fm) {
            continue;
        }
        let factors = fp.berlekamp(&fm);
        if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
            best = Some((fp, factors));
        }
        tried += 1;
        if tried == PRIME_TRIALS || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.expect("a squarefree integer polynomial stays squarefree modulo some small prime")
}

/// Factor a monic squarefree integer polynomial of degree >= 2 into monic
/// irreducible integer polynomials.
pub(crate) fn factor_monic_squarefree(f: &[BigInt]) -> Vec<PolyZ> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let (fp, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = factor_bound(f) * 2;
    let pb = BigInt::from(fp.p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }

    // Peel off one modular factor at a time.
    let mut lifted = Vec::with_capacity(modular.len());
    let mut target = f.to_vec();
    for i in 0..modular.len() - 1 {
        let rest = modular[i + 1..].iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
        let (g, h) = lift_pair(&fp, &target, &modular[i], &rest, k);
        lifted.push(g);
        target = h;
    }
    lifted.push(target);

    recombine(f, &lifted, &m)
}

fn recombine(f: &[BigInt], lifted: &[PolyZ], m: &BigInt) -> Vec<PolyZ> {
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut cur = f.to_vec();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<usize> = combo.iter().map(|&i| remaining[i]).collect();
            let constant = subset
                .iter()
                .fold(BigInt::one(), |acc, &i| symmetric_mod(&(acc * &lifted[i][0]), m));
            let plausible = cur[0].is_zero() || (!constant.is_zero() && (&cur[0] % &constant).is_zero());
            if plausible {
                let cand = subset
                    .iter()
                    .fold(vec![BigInt::one()], |acc, &i| reduce_sym(&mul_z(&acc, &lifted[i]), m));
                if let Some(q) = div_monic_exact(&cur, &cand) {
                    out.push(cand);
                    cur = q;
                    remaining.retain(|i| !subset.contains(i));
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        size += 1;
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}

/// Advance to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `lc^(n-1) f(y / lc)`: a monic integer polynomial whose factors correspond to
/// those of `f`.
pub(crate) fn monic_transform(f: &[BigInt]) -> PolyZ {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let mut out = Vec::with_capacity(n + 1);
    let mut pw = BigInt::one();
    // coefficient of y^k is f_k lc^(n-1-k) for k < n
    let mut pows = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        pw *= &lc;
        pows[k] = pw.clone();
    }
    for k in 0..n {
        out.push(&f[k] * &pows[n - 1 - k]);
    }
    out.push(BigInt::one());
    out
}

/// Undo [`monic_transform`] on a factor: the primitive part of `g(lc x)`.
pub(crate) fn undo_transform(g: &[BigInt], lc: &BigInt) -> PolyZ {
    let mut pw = BigInt::one();
    let mut out = Vec::with_capacity(g.len());
    for c in g {
        out.push(c * &pw);
        pw *= lc;
    }
    primitive_z(&out)
}

pub(crate) fn primitive_z(a: &[BigInt]) -> PolyZ {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}
