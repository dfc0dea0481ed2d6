//! Sparse matrices with exact row reduction.

use std::collections::BTreeMap;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    // row-major by construction of the key order; zeros never stored
    entries: BTreeMap<(usize, usize), Scalar>,
}

/// Result of [`SparseMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl SparseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols);
        for (r, c, v) in entries {
            if r >= rows {
                return Err(Error::DimensionMismatch { expected: rows, found: r });
            }
            if c >= cols {
                return Err(Error::DimensionMismatch { expected: cols, found: c });
            }
            m.add_to(r, c, &v);
        }
        Ok(m)
    }

    /// Builds a matrix from dense rows of integers (test and example convenience).
    pub fn from_rows_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.from_i64(v));
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (r, c, v) in self.entries() {
            if !x[c].is_zero() {
                out[r] += &(v * &x[c]);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (r, c, v) in other.entries() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.field, self.rows, other.cols);
        for (r, k, a) in self.entries() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zeros(self.field, self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.set(c, r, v.clone());
        }
        t
    }

    fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            d[r][c] = v.clone();
        }
        d
    }

    fn from_dense(field: FieldSpec, rows: usize, cols: usize, d: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for (r, row) in d.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let mut d = self.to_dense();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !d[r][col].is_zero()) else {
                continue;
            };
            d.swap(row, p);
            let inv = d[row][col].inv();
            for v in d[row].iter_mut().skip(col) {
                *v = &*v * &inv;
            }
            let pivot_row = d[row].clone();
            for (r, other) in d.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let f = other[col].clone();
                for c in col..self.cols {
                    if !pivot_row[c].is_zero() {
                        other[c] -= &(&f * &pivot_row[c]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Echelon {
            matrix: Self::from_dense(self.field, self.rows, self.cols, &d),
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Some `x` with `Mx = b`, free variables set to zero; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = SparseMatrix::zeros(self.field, self.rows, self.cols + 1);
        for (r, c, v) in self.entries() {
            aug.set(r, c, v.clone());
        }
        for (r, v) in b.iter().enumerate() {
            aug.set(r, self.cols, v.clone());
        }
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(row, self.cols);
        }
        Ok(Some(x))
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let ech = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = ech.pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = -ech.matrix.get(row, free);
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank of a list of vectors of equal length.
pub fn span_rank(field: FieldSpec, dim: usize, vectors: &[Vector]) -> Result<usize> {
    Ok(SparseMatrix::from_columns(field, dim, vectors)?.rank())
}

/// `dim(span A / span B)` for `span B ⊆ span A`. Containment is checked.
pub fn quotient_dim(field: FieldSpec, dim: usize, span_a: &[Vector], span_b: &[Vector]) -> Result<usize> {
    let ra = span_rank(field, dim, span_a)?;
    let rb = span_rank(field, dim, span_b)?;
    let mut both = span_a.to_vec();
    both.extend_from_slice(span_b);
    if span_rank(field, dim, &both)? != ra {
        return Err(Error::Inconsistent(
            "quotient_dim: second span is not contained in the first".into(),
        ));
    }
    Ok(ra - rb)
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(field: FieldSpec, v: &[Scalar], vectors: &[Vector]) -> Result<bool> {
    let m = SparseMatrix::from_columns(field, v.len(), vectors)?;
    Ok(m.solve(v)?.is_some())
}


/// Cohomology at the middle of `U --incoming--> V --outgoing--> W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub dim: usize,
    pub cycle_dim: usize,
    pub boundary_rank: usize,
    /// Cycles spanning a complement of the boundaries, chosen greedily from
    /// the kernel basis.
    pub representatives: Vec<Vector>,
}

pub fn homology(incoming: &SparseMatrix, outgoing: &SparseMatrix) -> Result<Homology> {
    if incoming.rows() != outgoing.cols() {
        return Err(Error::DimensionMismatch { expected: outgoing.cols(), found: incoming.rows() });
    }
    let field = outgoing.field();
    let n = outgoing.cols();
    let cycles = outgoing.kernel_basis();
    let mut span: Vec<Vector> = (0..incoming.cols())
        .map(|c| (0..n).map(|r| incoming.get(r, c)).collect())
        .collect();
    let boundary_rank = span_rank(field, n, &span)?;
    let mut rank = boundary_rank;
    let mut representatives = Vec::new();
    for z in &cycles {
        span.push(z.clone());
        let r = span_rank(field, n, &span)?;
        if r > rank {
            rank = r;
            representatives.push(z.clone());
        } else {
            span.pop();
        }
    }
    Ok(Homology { dim: representatives.len(), cycle_dim: cycles.len(), boundary_rank, representatives })
}
