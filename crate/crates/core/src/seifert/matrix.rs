use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};

/// A square integer matrix `V` of even size with `det(V - Vᵀ) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    /// The 0 x 0 matrix of the unknot.
    pub fn empty() -> Self {
        SeifertMatrix::default()
    }

    /// Validate and wrap a row-major matrix.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        SeifertMatrix::named("<matrix>", rows)
    }

    /// Like [`SeifertMatrix::new`], naming the matrix in error messages.
    pub fn named(name: &str, rows: Vec<Vec<i64>>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidSeifert { name: name.to_string(), reason };
        let size = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(invalid(format!("row {i} has {} entries, expected {size}", r.len())));
        }
        if size % 2 == 1 {
            return Err(invalid(format!("size {size} is odd")));
        }
        let m = SeifertMatrix { size, entries: rows.into_iter().flatten().collect() };
        let d = m.skew_determinant();
        if !d.is_one() {
            return Err(invalid(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(m)
    }

    pub(crate) fn from_flat_unchecked(size: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        SeifertMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Half the size: the genus of the underlying surface.
    pub fn genus(&self) -> usize {
        self.size / 2
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        SeifertMatrix { size: n, entries }
    }

    /// `det(V - Vᵀ)`.
    pub fn skew_determinant(&self) -> BigInt {
        let n = self.size;
        let m = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j) - self.get(j, i))).collect())
            .collect();
        integer_determinant(m)
    }

    /// Block sum: the Seifert matrix of the connected sum.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> Self {
        let n = self.size + other.size;
        let mut entries = vec![0; n * n];
        for i in 0..self.size {
            for j in 0..self.size {
                entries[i * n + j] = self.get(i, j);
            }
        }
        let o = self.size;
        for i in 0..other.size {
            for j in 0..other.size {
                entries[(o + i) * n + o + j] = other.get(i, j);
            }
        }
        SeifertMatrix { size: n, entries }
    }

    /// `-Vᵀ`: the Seifert matrix of the mirror image.
    pub fn mirror(&self) -> Self {
        let t = self.transpose();
        SeifertMatrix { size: t.size, entries: t.entries.into_iter().map(|e| -e).collect() }
    }

    /// Connected sum of `n` copies.
    pub fn repeat(&self, n: usize) -> Self {
        (0..n).fold(SeifertMatrix::empty(), |acc, _| acc.connected_sum(self))
    }

    /// The elementary enlargement
    /// `[[V, ξ, 0], [0, 0, 1], [0, 0, 0]]`, which presents the same knot up to
    /// S-equivalence.
    pub fn stabilize(&self, xi: &[i64]) -> Self {
        assert_eq!(xi.len(), self.size, "stabilization column must match the size");
        let n = self.size + 2;
        let mut entries = vec![0; n * n];
        for i in 0..self.size {
            for j in 0..self.size {
                entries[i * n + j] = self.get(i, j);
            }
            entries[i * n + self.size] = xi[i];
        }
        entries[self.size * n + self.size + 1] = 1;
        SeifertMatrix { size: n, entries }
    }

    /// Groups of indices that the nonzero entries connect; the matrix is the
    /// block sum of the corresponding principal submatrices. Groups are sorted
    /// by their smallest index.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) != 0 || self.get(j, i) != 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(i);
        }
        groups
    }

    /// Principal submatrix on the given indices (not revalidated).
    pub fn principal(&self, idx: &[usize]) -> SeifertMatrix {
        let entries = idx.iter().flat_map(|&i| idx.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
        SeifertMatrix { size: idx.len(), entries }
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix{:?}", self.rows())
    }
}

/// Fraction-free Gaussian elimination (Bareiss).
pub(crate) fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 0], vec![-1, -1]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            Err(Error::InvalidSeifert { .. })
        ));
        assert!(matches!(SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]), Err(Error::InvalidSeifert { .. })));
        assert!(SeifertMatrix::new(Vec::new()).unwrap().is_empty());
    }

    #[test]
    fn mirror_and_sum() {
        let t = trefoil();
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(SeifertMatrix::empty().mirror(), SeifertMatrix::empty());
        assert_eq!(t.connected_sum(&SeifertMatrix::empty()), t);
        let s = t.connected_sum(&t);
        assert_eq!(s.size(), 4);
        assert!(s.skew_determinant().is_one());
        assert_eq!(s.blocks(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(s.principal(&[2, 3]), t);
    }

    #[test]
    fn stabilization_keeps_determinant() {
        let s = trefoil().stabilize(&[3, -2]);
        assert_eq!(s.size(), 4);
        assert!(s.skew_determinant().is_one());
    }

    #[test]
    fn bareiss() {
        let m = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        assert_eq!(integer_determinant(m), BigInt::from(6));
    }
}
