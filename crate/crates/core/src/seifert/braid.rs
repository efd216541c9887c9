//! Seifert matrices of braid closures.
//!
//! The closure of an `n`-strand braid bounds the surface made of `n` stacked
//! disks joined by one half-twisted band per crossing. Between two consecutive
//! crossings of the same generator `σ_i` runs a loop through both bands; these
//! loops form a basis of the first homology, and their linking numbers follow
//! the rules of Collins' algorithm.

use std::fmt;
use std::str::FromStr;

use num::Integer;

use super::matrix::SeifertMatrix;
use crate::error::{Error, Result};

/// A word in the braid generators `σ_i^{±1}` on `strands` strands, written as
/// nonzero integers `±i` with `1 <= i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    gens: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidBraid(format!("need at least 2 strands, got {strands}")));
        }
        if let Some(g) = gens.iter().find(|g| **g == 0 || g.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!("generator {g} invalid on {strands} strands")));
        }
        Ok(BraidWord { strands, gens })
    }

    /// The braid `(σ_1 σ_2 ⋯ σ_{p-1})^q` on `p = min(p, q)` strands, whose
    /// closure is the torus knot `T(p, q)`.
    pub fn torus(p: u64, q: u64) -> Result<Self> {
        if p < 2 || q < 2 || p.gcd(&q) != 1 {
            return Err(Error::InvalidTorus { p, q });
        }
        let (p, q) = (p.min(q), p.max(q));
        let gens = (0..q).flat_map(|_| 1..p as i32).collect();
        BraidWord::new(p as usize, gens)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn generators(&self) -> &[i32] {
        &self.gens
    }

    /// The permutation of strand positions induced by the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for g in &self.gens {
            let i = g.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        pos
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        count
    }

    /// Seifert matrix of the closure's canonical Seifert surface.
    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        let c = self.components();
        if c != 1 {
            return Err(Error::MultiComponent { components: c });
        }
        let sign = |k: usize| if self.gens[k] > 0 { 1i64 } else { -1 };
        // (column, first crossing, second crossing)
        let mut loops = Vec::new();
        for col in 1..self.strands {
            let pos: Vec<usize> = (0..self.gens.len())
                .filter(|&k| self.gens[k].unsigned_abs() as usize == col)
                .collect();
            for w in pos.windows(2) {
                loops.push((col, w[0], w[1]));
            }
        }
        let m = loops.len();
        let mut v = vec![0i64; m * m];
        for (u, &(i, a, b)) in loops.iter().enumerate() {
            v[u * m + u] = -(sign(a) + sign(b)) / 2;
            for (w, &(j, c, d)) in loops.iter().enumerate() {
                if i == j && c == b {
                    // consecutive loops sharing the band at crossing b
                    if sign(b) > 0 {
                        v[w * m + u] = 1;
                    } else {
                        v[u * m + w] = -1;
                    }
                } else if j == i + 1 {
                    if c < a && a < d && d < b {
                        v[w * m + u] = 1;
                    } else if a < c && c < b && b < d {
                        v[w * m + u] = -1;
                    }
                }
            }
        }
        let matrix = SeifertMatrix::from_flat_unchecked(m, v);
        debug_assert!(num::One::is_one(&matrix.skew_determinant()));
        Ok(matrix)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.gens.iter().map(i32::to_string).collect();
        write!(f, "{}:[{}]", self.strands, body.join(","))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `[1,-2,1]` or `1 -2 1`, optionally prefixed by `n:` to fix the
    /// strand count (otherwise one more than the largest generator).
    fn from_str(s: &str) -> Result<Self> {
        let (strands, body) = match s.split_once(':') {
            Some((n, rest)) => {
                let n = n.trim().parse::<usize>().map_err(|e| Error::InvalidBraid(format!("strand count: {e}")))?;
                (Some(n), rest)
            }
            None => (None, s),
        };
        let body = body.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
        let gens = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|e| Error::InvalidBraid(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let n = strands.unwrap_or_else(|| gens.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(1) + 1);
        BraidWord::new(n, gens)
    }
}
