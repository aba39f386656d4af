//! Sparse vectors and incremental Gaussian elimination.

use super::field::{FieldConfig, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: FieldConfig) -> Self {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    /// Builds from arbitrary pairs; duplicate indices are summed and zeros dropped.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldConfig) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in self.entries.iter_mut() {
            *v = &*v * c;
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) => {
                    if i < j {
                        out.push(a.next().unwrap());
                    } else if j < i {
                        let (j, v) = b.next().unwrap();
                        out.push((*j, c * v));
                    } else {
                        let (i, x) = a.next().unwrap();
                        let (_, y) = b.next().unwrap();
                        let s = &x + &(c * y);
                        if !s.is_zero() {
                            out.push((i, s));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, c * v));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec, field: FieldConfig) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&field.one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec, field: FieldConfig) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&-field.one(), other);
        out
    }

    pub fn dot(&self, other: &SparseVec, field: FieldConfig) -> Scalar {
        let mut acc = field.zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            if a < b {
                i += 1;
            } else if b < a {
                j += 1;
            } else {
                acc = &acc + &(x * y);
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Relabels indices through `f`; the map must be injective.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    pub fn push_unchecked(&mut self, i: usize, c: Scalar) {
        debug_assert!(self.entries.last().is_none_or(|(j, _)| *j < i));
        if !c.is_zero() {
            self.entries.push((i, c));
        }
    }
}

/// Incremental row echelon form. Each stored row has leading coefficient 1 at its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldConfig,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: FieldConfig, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduces `v` against the stored rows until no entry sits on a pivot column.
    pub fn reduce(&self, v: &mut SparseVec) {
        let mut pos = 0;
        while pos < v.entries.len() {
            let (idx, c) = &v.entries[pos];
            match self.pivot_row[*idx] {
                Some(r) => {
                    let c = -c;
                    v.axpy(&c, &self.rows[r as usize]);
                }
                None => pos += 1,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the span; returns the new pivot column if `v` was independent.
    pub fn insert(&mut self, mut v: SparseVec) -> Option<usize> {
        self.reduce(&mut v);
        let (p, lead) = v.leading()?.clone();
        let inv = lead.inv().expect("nonzero leading entry");
        v.scale(&inv);
        self.pivot_row[p] = Some(self.rows.len() as u32);
        self.rows.push(v);
        Some(p)
    }

    pub fn into_rref(self) -> Rref {
        let Echelon {
            field,
            ncols,
            rows,
            pivot_row: _,
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(rows[r].leading().unwrap().0));
        let mut pivot_row = vec![None; ncols];
        let mut done: Vec<SparseVec> = Vec::with_capacity(rows.len());
        for r in order {
            let mut row = rows[r].clone();
            let pivot = row.leading().unwrap().0;
            let coefs: Vec<(usize, Scalar)> = row
                .entries()
                .iter()
                .skip(1)
                .filter(|(i, _)| pivot_row[*i].is_some())
                .cloned()
                .collect();
            for (i, c) in coefs {
                let k: usize = pivot_row[i].unwrap();
                row.axpy(&-c, &done[k]);
            }
            pivot_row[pivot] = Some(done.len());
            done.push(row);
        }
        // ascending pivot order
        done.reverse();
        let pivots: Vec<usize> = done.iter().map(|r| r.leading().unwrap().0).collect();
        Rref {
            field,
            ncols,
            rows: done,
            pivots,
        }
    }
}

/// Reduced row echelon form with rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub field: FieldConfig,
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn from_rows(field: FieldConfig, ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.ncols];
        for &p in &self.pivots {
            m[p] = true;
        }
        m
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mask = self.pivot_mask();
        (0..self.ncols).filter(|&c| !mask[c]).collect()
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut pos_of = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            pos_of[f] = k;
        }
        let mut cols: Vec<Vec<(usize, Scalar)>> = free.iter().map(|&f| vec![(f, self.field.one())]).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (i, c) in row.entries().iter().skip(1) {
                let k = pos_of[*i];
                debug_assert!(k != usize::MAX);
                cols[k].push((p, -c));
            }
        }
        cols.into_iter().map(SparseVec::from_pairs).collect()
    }

    pub fn to_echelon(&self) -> Echelon {
        let mut pivot_row = vec![None; self.ncols];
        for (k, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(k as u32);
        }
        Echelon {
            field: self.field,
            ncols: self.ncols,
            rows: self.rows.clone(),
            pivot_row,
        }
    }
}

/// A matrix stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub field: FieldConfig,
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(field: FieldConfig, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn from_rows(field: FieldConfig, ncols: usize, rows: Vec<SparseVec>) -> Self {
        SparseMatrix {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds the matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: FieldConfig, nrows: usize, cols: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::zero(field, cols.len(), nrows);
        m.rows = cols.to_vec();
        m.transpose()
    }

    pub fn identity(field: FieldConfig, n: usize) -> Self {
        SparseMatrix::from_rows(field, n, (0..n).map(|i| SparseVec::unit(i, field)).collect())
    }

    pub fn from_dense(field: FieldConfig, rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_rows(field, ncols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols, self.field)).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter() {
                cols[*j].push((i, c.clone()));
            }
        }
        SparseMatrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows: cols.into_iter().map(|e| SparseVec { entries: e }).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `M x` for a column vector `x`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let pairs = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.dot(x, self.field)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SparseVec { entries: pairs }
    }

    /// `x^t M` for a row vector `x`.
    pub fn apply_left(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            out.axpy(c, &self.rows[*i]);
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "matrix product shape");
        let rows = self.rows.iter().map(|r| other.apply_left(r)).collect();
        SparseMatrix::from_rows(self.field, other.ncols, rows)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.lincomb(&self.field.one(), other)
    }

    /// `self + c * other`.
    pub fn lincomb(&self, c: &Scalar, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.axpy(c, b);
                r
            })
            .collect();
        SparseMatrix::from_rows(self.field, self.ncols, rows)
    }

    pub fn scaled(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix::from_rows(self.field, self.ncols, self.rows.iter().map(|r| r.scaled(c)).collect())
    }

    pub fn rref(&self) -> Rref {
        Rref::from_rows(self.field, self.ncols, self.rows.iter().cloned())
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.nrows <= self.ncols {
            self.rref().rank()
        } else {
            self.transpose().rref().rank()
        }
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        self.rref().null_space()
    }

    /// Basis of `{y : y^t M = 0}`.
    pub fn left_kernel(&self) -> Vec<SparseVec> {
        self.transpose().kernel()
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let n = self.ncols;
        let t = self.transpose();
        let mut e = Echelon::new(self.field, self.nrows + n);
        // column j of M, tagged with e_j so the reduction records the combination
        for (j, col) in t.rows.iter().enumerate() {
            let mut v = col.clone();
            v.push_unchecked(self.nrows + j, self.field.one());
            e.insert(v);
        }
        let mut target = b.clone();
        e.reduce(&mut target);
        if target.leading().is_some_and(|(i, _)| *i < self.nrows) {
            return None;
        }
        // target = b - sum c_j col_j written with tags; the tag part gives -x
        let x = SparseVec::from_pairs(
            target
                .iter()
                .filter(|(i, _)| *i >= self.nrows)
                .map(|(i, c)| (i - self.nrows, -c))
                .collect(),
        );
        debug_assert!(self.apply(&x) == *b);
        Some(x)
    }

    /// The inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        assert_eq!(self.nrows, self.ncols, "inverse of a non-square matrix");
        let n = self.nrows;
        // rows of [M | I]; the rref is [I | M^{-1}] when M is invertible
        let rows = self.rows.iter().enumerate().map(|(i, r)| {
            let mut v = r.clone();
            v.push_unchecked(n + i, self.field.one());
            v
        });
        let r = Rref::from_rows(self.field, 2 * n, rows);
        if r.rank() < n || r.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let rows = r
            .rows
            .iter()
            .map(|v| SparseVec::from_pairs(v.iter().filter(|(j, _)| *j >= n).map(|(j, c)| (j - n, c.clone())).collect()))
            .collect();
        Some(SparseMatrix::from_rows(self.field, n, rows))
    }

    /// Exact determinant by fraction-free elimination; dense, for small square matrices.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let n = self.nrows;
        let mut a = self.to_dense();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return self.field.zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let inv = a[k][k].inv().unwrap();
            det = &det * &a[k][k];
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        FieldConfig::Rational.from_i64(v)
    }

    #[test]
    fn axpy_cancels() {
        let f = FieldConfig::Rational;
        let mut a = SparseVec::from_pairs(vec![(0, q(1)), (3, q(2))]);
        let b = SparseVec::from_pairs(vec![(3, q(1)), (5, q(7))]);
        a.axpy(&q(-2), &b);
        assert_eq!(a, SparseVec::from_pairs(vec![(0, q(1)), (5, q(-14))]));
        assert_eq!(a.dot(&b, f), q(-98));
    }

    #[test]
    fn rref_and_kernel() {
        let f = FieldConfig::Rational;
        let m = SparseMatrix::from_dense(
            f,
            &[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]],
        );
        let r = m.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
        assert_eq!(m.determinant(), q(0));
    }

    #[test]
    fn solve_round_trip() {
        let f = FieldConfig::Rational;
        let m = SparseMatrix::from_dense(f, &[vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(0)]]);
        let b = SparseVec::from_dense(&[q(3), q(1), q(4)]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        let bad = SparseVec::from_dense(&[q(3), q(1), q(5)]);
        assert!(m.solve(&bad).is_none());
    }
}
