//! Exact sparse and dense linear algebra over [`Ring`] / [`Field`] scalars.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Sparse vector: index → nonzero entry.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<S> {
    entries: BTreeMap<usize, S>,
}

impl<S> Default for SparseVector<S> {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }
}

impl<S: Ring> SparseVector<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(i, S::one());
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut v = Self::new();
        for (i, s) in entries {
            v.add_at(i, s);
        }
        v
    }

    pub fn from_dense(values: &[S]) -> Self {
        Self::from_entries(values.iter().cloned().enumerate())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> S {
        self.entries.get(&i).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        self.entries.iter().map(|(&i, s)| (i, s))
    }

    pub fn first(&self) -> Option<(usize, &S)> {
        self.entries.iter().next().map(|(&i, s)| (i, s))
    }

    pub fn add_at(&mut self, i: usize, s: S) {
        if s.is_zero() {
            return;
        }
        match self.entries.remove(&i) {
            Some(old) => {
                let sum = old + s;
                if !sum.is_zero() {
                    self.entries.insert(i, sum);
                }
            }
            None => {
                self.entries.insert(i, s);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (&i, s) in &other.entries {
            self.add_at(i, c.clone() * s.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_entries(self.entries.iter().map(|(&i, s)| (i, c.clone() * s.clone())))
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> SparseVector<T> {
        SparseVector::from_entries(self.entries.iter().map(|(&i, s)| (i, f(s))))
    }

    pub fn to_dense(&self, dim: usize) -> Vec<S> {
        let mut out = vec![S::zero(); dim];
        for (&i, s) in &self.entries {
            out[i] = s.clone();
        }
        out
    }
}

impl<S: Ring> std::ops::Add for SparseVector<S> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (i, s) in rhs.entries {
            self.add_at(i, s);
        }
        self
    }
}

impl<S: Ring> std::ops::Sub for SparseVector<S> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (i, s) in rhs.entries {
            self.add_at(i, -s);
        }
        self
    }
}

impl<S: Ring> FromIterator<(usize, S)> for SparseVector<S> {
    fn from_iter<I: IntoIterator<Item = (usize, S)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

/// Column-major sparse matrix. Each column is sorted by row with no zeros,
/// so derived equality is entrywise equality.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: Vec<SparseVector<S>>,
}

impl<S: Ring> SparseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![SparseVector::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: (0..n).map(SparseVector::unit).collect(),
        }
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let n = diag.len();
        Self {
            rows: n,
            cols: diag
                .into_iter()
                .enumerate()
                .map(|(i, s)| SparseVector::from_entries([(i, s)]))
                .collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVector<S>>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.iter().all(|(i, _)| i < rows)));
        Self { rows, cols }
    }

    /// Builds from `(row, col, value)` triples; repeated positions add.
    pub fn from_triplets(rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, s) in triples {
            m.cols[c].add_at(r, s);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVector<S> {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.cols[j].get(i)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, s)| (i, j, s)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVector::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVector::is_zero)
    }

    pub fn apply(&self, v: &SparseVector<S>) -> SparseVector<S> {
        let mut out = SparseVector::new();
        for (j, s) in v.iter() {
            out.add_scaled(s, &self.cols[j]);
        }
        out
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols(), rhs.nrows(), "matrix product shape mismatch");
        Self {
            rows: self.rows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.ncols()), (rhs.rows, rhs.ncols()));
        Self {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.ncols(),
            self.rows,
            self.triplets().map(|(i, j, s)| (j, i, s.clone())),
        )
    }

    /// Multiplies row `i` by `d[i]`.
    pub fn left_diag(&self, d: &[S]) -> Self {
        Self {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, s)| (i, d[i].clone() * s.clone())).collect())
                .collect(),
        }
    }

    /// Multiplies column `j` by `d[j]`.
    pub fn right_diag(&self, d: &[S]) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols.iter().zip(d).map(|(c, s)| c.scale(s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = self.mul(&out);
        }
        out
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|c| c.map(&f)).collect(),
        }
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        Self {
            rows: rows.len(),
            cols: cols
                .iter()
                .map(|&j| {
                    self.cols[j]
                        .iter()
                        .filter_map(|(i, s)| pos.get(&i).map(|&p| (p, s.clone())))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        let mut d = DenseMatrix::zeros(self.rows, self.ncols());
        for (i, j, s) in self.triplets() {
            d.set(i, j, s.clone());
        }
        d
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> DenseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: S) {
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Reduced row echelon form. Pivots are chosen leftmost column first, and
/// within a column the first row (at or below the current one) holding a
/// nonzero entry.
pub fn rref<F: Field>(m: &DenseMatrix<F>) -> (DenseMatrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, row * a.cols + j);
            }
        }
        let inv = a.get(row, col).inv().expect("nonzero pivot");
        for j in col..a.cols {
            let v = a.get(row, j).clone() * inv.clone();
            a.set(row, j, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..a.cols {
                let v = a.get(r, j).clone() - factor.clone() * a.get(row, j).clone();
                a.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &DenseMatrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`, one vector per free column in increasing order,
/// with that free coordinate equal to 1.
pub fn kernel_basis<F: Field>(m: &DenseMatrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![F::zero(); m.cols];
            x[fc] = F::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                x[pc] = -r.get(prow, fc).clone();
            }
            x
        })
        .collect()
}

/// One solution of `m x = rhs` (free variables set to zero).
pub fn solve<F: Field>(m: &DenseMatrix<F>, rhs: &[F]) -> Result<Vec<F>> {
    if rhs.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            got: rhs.len(),
        });
    }
    let mut aug = DenseMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, rhs[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![F::zero(); m.cols];
    for (prow, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(prow, m.cols).clone();
    }
    Ok(x)
}

/// Incrementally maintained echelon basis of a subspace of sparse vectors,
/// remembering how each reduced row is expressed through the vectors that
/// were inserted.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    /// (pivot, reduced row with pivot entry 1, coefficients over inserted vectors)
    rows: Vec<(usize, SparseVector<F>, SparseVector<F>)>,
    inserted: usize,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self {
            rows: Vec::new(),
            inserted: 0,
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`. Returns the remainder and `c` with
    /// `v = remainder + Σ c_j · inserted_j`.
    pub fn reduce(&self, v: &SparseVector<F>) -> (SparseVector<F>, SparseVector<F>) {
        let mut rem = v.clone();
        let mut coeffs = SparseVector::new();
        for (pivot, row, comb) in &self.rows {
            let c = rem.get(*pivot);
            if c.is_zero() {
                continue;
            }
            rem.add_scaled(&-c.clone(), row);
            coeffs.add_scaled(&c, comb);
        }
        (rem, coeffs)
    }

    pub fn contains(&self, v: &SparseVector<F>) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v` if independent; returns its index among inserted vectors.
    pub fn insert(&mut self, v: &SparseVector<F>) -> Option<usize> {
        let (rem, coeffs) = self.reduce(v);
        let (pivot, lead) = rem.first()?;
        let inv = lead.inv().expect("nonzero lead");
        let idx = self.inserted;
        self.inserted += 1;
        // rem = v - Σ coeffs_j inserted_j, and v is inserted vector idx
        let mut comb = coeffs.scale(&-F::one());
        comb.add_at(idx, F::one());
        let row = rem.scale(&inv);
        let comb = comb.scale(&inv);
        // keep rows fully reduced with respect to the new pivot
        for (_, r, c) in self.rows.iter_mut() {
            let x = r.get(pivot);
            if !x.is_zero() {
                r.add_scaled(&-x.clone(), &row);
                c.add_scaled(&-x, &comb);
            }
        }
        self.rows.push((pivot, row, comb));
        Some(idx)
    }

    /// Coordinates of `v` over the inserted vectors, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVector<F>) -> Option<SparseVector<F>> {
        let (rem, coeffs) = self.reduce(v);
        rem.is_zero().then_some(coeffs)
    }
}
