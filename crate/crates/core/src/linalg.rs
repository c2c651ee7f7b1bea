//! Dense matrices and vectors over `Z_m`.

use std::fmt;

/// Row-major matrix with entries reduced modulo `modulus`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] mod {}", self.modulus)
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, modulus: u32) -> Self {
        Matrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: u32) -> Self {
        let mut m = Self::zero(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// `E_ij`: one in row `i`, column `j`.
    pub fn elementary(n: usize, i: usize, j: usize, modulus: u32) -> Self {
        let mut m = Self::zero(n, n, modulus);
        m.set(i, j, 1);
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], modulus: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c, modulus);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_columns(columns: &[Vec<u32>], rows: usize, modulus: u32) -> Self {
        let mut m = Self::zero(rows, columns.len(), modulus);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Builds a matrix from a flat row-major slice, reducing entries.
    pub fn from_flat(rows: usize, cols: usize, modulus: u32, data: &[u32]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            modulus,
            data: data.iter().map(|v| v % modulus).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn as_flat(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let m = u64::from(self.modulus);
        let mut out = Matrix::zero(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = u64::from(self.get(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] =
                        ((u64::from(out.data[idx]) + a * u64::from(other.get(k, j))) % m) as u32;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let m = self.modulus;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a + b) % m)
            .collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let m = self.modulus;
        let data = self.data.iter().map(|&a| (m - a) % m).collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let m = u64::from(self.modulus);
        let c = u64::from(c) % m;
        let data = self
            .data
            .iter()
            .map(|&a| ((u64::from(a) * c) % m) as u32)
            .collect();
        Matrix { data, ..*self }
    }

    /// Commutator `AB - BA`.
    pub fn bracket(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let m = u64::from(self.modulus);
        (0..self.rows)
            .map(|i| {
                let s: u64 = (0..self.cols)
                    .map(|j| u64::from(self.get(i, j)) * u64::from(v[j]))
                    .sum();
                (s % m) as u32
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Determinant reduced modulo the modulus.
    pub fn determinant(&self) -> u32 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1 % self.modulus;
        }
        let m = i128::from(self.modulus);
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(self.get(i, j))).collect())
            .collect();
        // Bareiss fraction-free elimination over the integers.
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n.saturating_sub(1) {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]).rem_euclid(m) as u32
    }

    /// Inverse over `Z_m`, via the adjugate; `None` when the determinant is not a unit.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let det_inv = inv_mod(self.determinant(), self.modulus)?;
        if n == 0 {
            return Some(self.clone());
        }
        let mut adj = Matrix::zero(n, n, self.modulus);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = if n == 1 {
                    1 % self.modulus
                } else {
                    minor.determinant()
                };
                let c = if (i + j) % 2 == 1 {
                    (self.modulus - c) % self.modulus
                } else {
                    c
                };
                adj.set(j, i, c);
            }
        }
        Some(adj.scale(det_inv))
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let n = self.rows;
        let mut out = Matrix::zero(n - 1, n - 1, self.modulus);
        let mut r = 0;
        for i in (0..n).filter(|&i| i != row) {
            let mut c = 0;
            for j in (0..n).filter(|&j| j != col) {
                out.set(r, c, self.get(i, j));
                c += 1;
            }
            r += 1;
        }
        out
    }
}

/// Multiplicative inverse of `a` modulo `m`.
pub fn inv_mod(a: u32, m: u32) -> Option<u32> {
    let (mut old_r, mut r) = (i64::from(a % m), i64::from(m));
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(i64::from(m)) as u32)
}

/// Basis of the solution space of `rows · x = 0` over the prime field `Z_p`.
pub fn nullspace_mod_p(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let pm = u64::from(p);
    let mut a: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v % p).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(r) = (row..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = u64::from(inv_mod(a[row][col], p).expect("prime modulus"));
        for v in a[row].iter_mut() {
            *v = ((u64::from(*v) * inv) % pm) as u32;
        }
        for r2 in 0..a.len() {
            if r2 != row && a[r2][col] != 0 {
                let f = u64::from(a[r2][col]);
                for c in 0..ncols {
                    let sub = (f * u64::from(a[row][c])) % pm;
                    a[r2][c] = ((u64::from(a[r2][c]) + pm - sub) % pm) as u32;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ((pm - u64::from(a[r][f])) % pm) as u32;
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in the span of linearly independent vectors over `Z_p`.
pub fn coordinates_in_span(basis: &[Vec<u32>], v: &[u32], p: u32) -> Option<Vec<u32>> {
    let k = basis.len();
    let rows: Vec<Vec<u32>> = (0..v.len())
        .map(|t| {
            basis
                .iter()
                .map(|b| b[t])
                .chain(std::iter::once(v[t]))
                .collect()
        })
        .collect();
    let sol = nullspace_mod_p(&rows, k + 1, p)
        .into_iter()
        .find(|s| s[k] != 0)?;
    let scale = inv_mod(sol[k], p)?;
    Some(
        sol[..k]
            .iter()
            .map(|&c| ((u64::from(p - c % p) * u64::from(scale)) % u64::from(p)) as u32 % p)
            .collect(),
    )
}

/// Base-`m` little-endian encoding of a coordinate vector.
#[inline]
pub fn encode(coords: &[u32], m: u32) -> u32 {
    coords.iter().rev().fold(0u32, |acc, &c| acc * m + c % m)
}

#[inline]
pub fn decode(mut index: u32, m: u32, rank: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(rank);
    for _ in 0..rank {
        out.push(index % m);
        index /= m;
    }
    out
}
