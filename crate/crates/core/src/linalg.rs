//! Dense matrices and subspaces over `F_p`.
//!
//! Every subspace is kept as a [`RowBasis`] in reduced row-echelon form, so
//! two subspaces are equal exactly when their bases are equal entrywise.

use crate::error::{Error, Result};
use crate::field::Fp;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    /// Builds a matrix from row-major residues, reducing each entry mod `p`.
    pub fn new(field: Fp, rows: usize, cols: usize, mut data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        let p = field.p();
        for x in data.iter_mut() {
            *x %= p;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Stacks `rows`, each of which must have length `cols`.
    pub fn from_rows<R: AsRef<[u32]>>(field: Fp, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// `self · v^T` as a vector of length `rows`.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = self.field;
        Ok(self.row_iter().map(|r| dot(f, r, v)).collect())
    }

    /// Reduced row-echelon form. Pivots are chosen as the topmost nonzero
    /// entry of the leftmost remaining column, so the output is canonical.
    pub fn rref(&self) -> RowBasis {
        let f = self.field;
        let cols = self.cols;
        let mut data = self.data.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            if top == self.rows {
                break;
            }
            let Some(r) = (top..self.rows).find(|&r| data[r * cols + c] != 0) else {
                continue;
            };
            if r != top {
                for j in 0..cols {
                    data.swap(r * cols + j, top * cols + j);
                }
            }
            let lead = data[top * cols + c];
            if lead != 1 {
                let s = f.inv(lead).expect("nonzero pivot");
                for x in &mut data[top * cols + c..(top + 1) * cols] {
                    *x = f.mul(*x, s);
                }
            }
            for r in 0..self.rows {
                if r == top {
                    continue;
                }
                let factor = data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, data[top * cols + j]);
                    data[r * cols + j] = f.sub(data[r * cols + j], sub);
                }
            }
            pivots.push(c);
            top += 1;
        }
        data.truncate(top * cols);
        RowBasis {
            matrix: Matrix {
                field: f,
                rows: top,
                cols,
                data,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().dim()
    }

    /// Basis of `{ v : self · v^T = 0 }`.
    pub fn kernel(&self) -> RowBasis {
        let reduced = self.rref();
        let f = self.field;
        let cols = self.cols;
        let mut is_pivot = vec![false; cols];
        for &c in &reduced.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (i, &pc) in reduced.pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.matrix.get(i, free));
            }
            out.extend_from_slice(&v);
        }
        let rows = if cols == 0 { 0 } else { out.len() / cols };
        Matrix {
            field: f,
            rows,
            cols,
            data: out,
        }
        .rref()
    }
}

/// Standard inner product of two residue vectors.
pub fn dot(f: Fp, a: &[u32], b: &[u32]) -> u32 {
    let p = f.p() as u64;
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = (acc + x as u64 * y as u64) % p;
    }
    acc as u32
}

/// A subspace of `F_p^cols` held as a canonical RREF basis without zero rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowBasis {
    matrix: Matrix,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn zero(field: Fp, cols: usize) -> Self {
        RowBasis {
            matrix: Matrix::zeros(field, 0, cols),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Fp, cols: usize) -> Self {
        Matrix::identity(field, cols).rref()
    }

    /// Canonical basis of the span of `rows`.
    pub fn span<R: AsRef<[u32]>>(field: Fp, cols: usize, rows: &[R]) -> Result<Self> {
        Ok(Matrix::from_rows(field, cols, rows)?.rref())
    }

    pub fn field(&self) -> Fp {
        self.matrix.field
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Pivot columns; they form an information set of the subspace.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> &[u32] {
        self.matrix.row(i)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.matrix.row_iter()
    }

    fn check_compatible(&self, other: &RowBasis) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::ModulusMismatch {
                left: self.field().p(),
                right: other.field().p(),
            });
        }
        if self.cols() != other.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                found: other.cols(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                found: v.len(),
            });
        }
        let f = self.field();
        let mut w: Vec<u32> = v.iter().map(|&x| x % f.p()).collect();
        for (i, &c) in self.pivots.iter().enumerate() {
            let factor = w[c];
            if factor == 0 {
                continue;
            }
            for (x, &b) in w.iter_mut().zip(self.row(i)) {
                *x = f.sub(*x, f.mul(factor, b));
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Whether `self` is a subspace of `other`.
    pub fn is_subspace_of(&self, other: &RowBasis) -> Result<bool> {
        self.check_compatible(other)?;
        for r in self.rows() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal_spaces(&self, other: &RowBasis) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &RowBasis) -> Result<RowBasis> {
        self.check_compatible(other)?;
        let mut data = self.matrix.data.clone();
        data.extend_from_slice(&other.matrix.data);
        Ok(Matrix {
            field: self.field(),
            rows: self.dim() + other.dim(),
            cols: self.cols(),
            data,
        }
        .rref())
    }

    /// Orthogonal complement under the standard inner product.
    pub fn orthogonal(&self) -> RowBasis {
        self.matrix.kernel()
    }

    /// `a ∩ b = (a^⊥ + b^⊥)^⊥`.
    pub fn intersect(&self, other: &RowBasis) -> Result<RowBasis> {
        self.check_compatible(other)?;
        Ok(self.orthogonal().sum(&other.orthogonal())?.orthogonal())
    }
}

/// Packs a 0/1 vector of length at most 64 into a bit mask (bit `i` = entry `i`).
pub fn pack_bits(v: &[u32]) -> u64 {
    debug_assert!(v.len() <= 64);
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &x)| acc | (((x & 1) as u64) << i))
}

/// Rank over `F_2` of bit-packed rows; `rows` is clobbered.
pub fn gf2_rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let r = rows[i];
        if r == 0 {
            continue;
        }
        rank += 1;
        let low = r & r.wrapping_neg();
        for x in rows[i + 1..].iter_mut() {
            if *x & low != 0 {
                *x ^= r;
            }
        }
    }
    rank
}
