//! Sparse exact matrices over Q(i) with rank, nullspace and inverse.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

pub type ExactVector = Vec<GaussianRational>;

/// Sparse matrix; zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), GaussianRational>,
}

type SparseRow = BTreeMap<usize, GaussianRational>;

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    /// Builds a matrix from dense rows. All rows must have equal length.
    pub fn from_rows(rows: &[ExactVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    /// Builds a `len × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[ExactVector]) -> Result<Self> {
        let mut m = Self::zeros(len, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: col.len(),
                });
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> GaussianRational {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &GaussianRational) {
        if v.is_zero() {
            return;
        }
        let sum = self.get(r, c) + v;
        self.set(r, c, sum);
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<ExactVector> {
        let mut out = vec![vec![GaussianRational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn column(&self, c: usize) -> ExactVector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.entries.insert((c, r), v.clone());
        }
        m
    }

    /// Conjugate transpose: `(m*)_{jk} = conj(m_{kj})`.
    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.entries.insert((c, r), v.conj());
        }
        m
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut m = Self::zeros(self.rows, self.cols);
        if s.is_zero() {
            return m;
        }
        for (r, c, v) in self.iter() {
            m.entries.insert((r, c), v * s);
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut m = self.clone();
        for (r, c, v) in other.iter() {
            m.add_to(r, c, v);
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let other_rows = other.sparse_rows();
        let mut acc: Vec<SparseRow> = vec![SparseRow::new(); self.rows];
        for (r, k, a) in self.iter() {
            for (&c, b) in &other_rows[k] {
                let e = acc[r].entry(c).or_default();
                *e += a * b;
            }
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for (r, row) in acc.into_iter().enumerate() {
            for (c, v) in row {
                if !v.is_zero() {
                    m.entries.insert((r, c), v);
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<ExactVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![GaussianRational::zero(); self.rows];
        for (r, c, a) in self.iter() {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        Ok(out)
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut m = self.clone();
        m.rows += other.rows;
        for (r, c, v) in other.iter() {
            m.entries.insert((r + self.rows, c), v.clone());
        }
        Ok(m)
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        let mut rows = vec![SparseRow::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    /// Rank over Q(i).
    pub fn rank(&self) -> usize {
        Echelon::reduce(self.sparse_rows(), self.cols, false).pivots.len()
    }

    /// Basis of the kernel read off the reduced row echelon form: one vector per
    /// free column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<ExactVector> {
        let ech = Echelon::reduce(self.sparse_rows(), self.cols, true);
        let pivot_of: BTreeMap<usize, usize> = ech
            .pivots
            .iter()
            .enumerate()
            .map(|(i, &(col, _))| (col, i))
            .collect();
        (0..self.cols)
            .filter(|c| !pivot_of.contains_key(c))
            .map(|free| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[free] = GaussianRational::one();
                for &(pcol, row) in &ech.pivots {
                    if let Some(x) = ech.rows[row].get(&free) {
                        v[pcol] = -x;
                    }
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows = self.sparse_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.insert(n + i, GaussianRational::one());
        }
        let ech = Echelon::reduce(rows, n, true);
        if ech.pivots.len() < n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for &(pcol, row) in &ech.pivots {
            for (&c, v) in ech.rows[row].range(n..) {
                inv.entries.insert((pcol, c - n), v.clone());
            }
        }
        Some(inv)
    }
}

/// Row reduction restricted to the first `cols` columns. Rows may carry extra
/// columns beyond `cols` (used for augmented systems).
struct Echelon {
    rows: Vec<SparseRow>,
    /// (pivot column, row index) in order of discovery.
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    fn reduce(mut rows: Vec<SparseRow>, cols: usize, full: bool) -> Self {
        let mut pivots = Vec::new();
        let mut used = vec![false; rows.len()];
        for col in 0..cols {
            // sparsest available row wins; ties go to the lowest index
            let pick = rows
                .iter()
                .enumerate()
                .filter(|(r, row)| !used[*r] && row.contains_key(&col))
                .min_by_key(|(r, row)| (row.len(), *r))
                .map(|(r, _)| r);
            let Some(p) = pick else { continue };
            used[p] = true;
            let inv = rows[p][&col].inv().expect("pivot is nonzero");
            for v in rows[p].values_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[p].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == p || (!full && used[r]) {
                    continue;
                }
                let Some(factor) = row.get(&col).cloned() else { continue };
                for (&c, v) in &pivot_row {
                    let e = row.entry(c).or_default();
                    *e -= &(&factor * v);
                    if e.is_zero() {
                        row.remove(&c);
                    }
                }
            }
            pivots.push((col, p));
        }
        Self { rows, pivots }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of vectors of equal length.
pub fn span_rank(vectors: &[ExactVector]) -> usize {
    match ExactMatrix::from_rows(vectors) {
        Ok(m) => m.rank(),
        Err(_) => 0,
    }
}
