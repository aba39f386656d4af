//! Subspaces of a fixed tensor power `E^{⊗n}`, stored in reduced row echelon form.

use super::field::{FieldConfig, Scalar};
use super::sparse::{Echelon, Rref, SparseVec};
use super::word::{self, word_count};
use crate::error::{Error, Result};

/// An element of `E^{⊗n}` (or of `(E*)^{⊗n}` in the dual word basis): a sparse vector over words.
pub type TensorElement = SparseVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSubspace {
    d: usize,
    degree: usize,
    rref: Rref,
}

impl TensorSubspace {
    pub fn zero(field: FieldConfig, d: usize, degree: usize) -> Result<Self> {
        let n = word_count(d, degree)?;
        Ok(TensorSubspace {
            d,
            degree,
            rref: Rref::from_rows(field, n, std::iter::empty()),
        })
    }

    pub fn full(field: FieldConfig, d: usize, degree: usize) -> Result<Self> {
        let n = word_count(d, degree)?;
        Ok(TensorSubspace {
            d,
            degree,
            rref: Rref::from_rows(field, n, (0..n).map(|i| SparseVec::unit(i, field))),
        })
    }

    pub fn span(field: FieldConfig, d: usize, degree: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Result<Self> {
        let n = word_count(d, degree)?;
        let mut e = Echelon::new(field, n);
        for v in vectors {
            if v.max_index().is_some_and(|i| i >= n) {
                return Err(Error::DimensionMismatch(format!(
                    "vector index out of range for degree {degree} over {d} letters"
                )));
            }
            e.insert(v);
        }
        Ok(TensorSubspace {
            d,
            degree,
            rref: e.into_rref(),
        })
    }

    pub(crate) fn from_rref(d: usize, degree: usize, rref: Rref) -> Self {
        debug_assert_eq!(rref.ncols, word::pow(d, degree));
        TensorSubspace { d, degree, rref }
    }

    pub fn field(&self) -> FieldConfig {
        self.rref.field
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.rref.ncols
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rref.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    pub fn echelon(&self) -> Echelon {
        self.rref.to_echelon()
    }

    /// Reduces `v` modulo the subspace; the result has no entries at pivot words.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        for (row, &p) in self.rref.rows.iter().zip(&self.rref.pivots) {
            if let Some(c) = v.get(p) {
                w.axpy(&-c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.residual(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis.
    pub fn coords(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        if !self.contains(v) {
            return Err(Error::NotInSubspace);
        }
        let f = self.field();
        Ok(self
            .rref
            .pivots
            .iter()
            .map(|&p| v.get(p).cloned().unwrap_or_else(|| f.zero()))
            .collect())
    }

    fn check_compatible(&self, other: &TensorSubspace) -> Result<()> {
        if self.degree != other.degree || self.d != other.d || self.field() != other.field() {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of degree {} and {} (d = {} vs {})",
                self.degree, other.degree, self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &TensorSubspace) -> Result<TensorSubspace> {
        self.check_compatible(other)?;
        TensorSubspace::span(
            self.field(),
            self.d,
            self.degree,
            self.basis().iter().chain(other.basis()).cloned(),
        )
    }

    /// Zassenhaus: eliminate `[u | u]` and `[v | 0]`; rows with vanishing left half span `u ∩ v`.
    pub fn intersect(&self, other: &TensorSubspace) -> Result<TensorSubspace> {
        self.check_compatible(other)?;
        let n = self.ambient_dim();
        let f = self.field();
        let mut e = Echelon::new(f, 2 * n);
        for b in self.basis() {
            let mut pairs: Vec<(usize, Scalar)> = b.iter().cloned().collect();
            pairs.extend(b.iter().map(|(i, c)| (i + n, c.clone())));
            e.insert(SparseVec::from_pairs(pairs));
        }
        for b in other.basis() {
            e.insert(b.clone());
        }
        let rref = e.into_rref();
        let rows = rref
            .rows
            .iter()
            .zip(&rref.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r.map_indices(|i| i - n));
        TensorSubspace::span(f, self.d, self.degree, rows)
    }

    /// The annihilator in `(E*)^{⊗n}` under the pairing of dual word bases.
    pub fn annihilator(&self) -> TensorSubspace {
        let f = self.field();
        let null = self.rref.null_space();
        // null-space vectors have distinct free-column leading terms after sorting
        let rref = Rref::from_rows(f, self.ambient_dim(), null);
        TensorSubspace::from_rref(self.d, self.degree, rref)
    }

    /// `E^{⊗r} ⊗ U ⊗ E^{⊗s}`.
    pub fn box_subspace(r: usize, u: &TensorSubspace, s: usize) -> Result<TensorSubspace> {
        let d = u.d;
        let degree = r + u.degree + s;
        let total = word_count(d, degree)?;
        let left = word::pow(d, r);
        let right = word::pow(d, s);
        let inner = u.ambient_dim();
        let mut rows: Vec<(usize, SparseVec)> = Vec::with_capacity(left * right * u.dim());
        for w1 in 0..left {
            for (b, &p) in u.basis().iter().zip(u.pivots()) {
                for w2 in 0..right {
                    let v = b.map_indices(|i| (w1 * inner + i) * right + w2);
                    rows.push(((w1 * inner + p) * right + w2, v));
                }
            }
        }
        // distinct pivots; each pivot word occurs in no other row, so this is already reduced
        rows.sort_by_key(|(p, _)| *p);
        let pivots = rows.iter().map(|(p, _)| *p).collect();
        let rref = Rref {
            field: u.field(),
            ncols: total,
            rows: rows.into_iter().map(|(_, v)| v).collect(),
            pivots,
        };
        Ok(TensorSubspace::from_rref(d, degree, rref))
    }

    /// Non-pivot words: a monomial basis of the quotient `E^{⊗n} / U`.
    pub fn quotient_words(&self) -> Vec<usize> {
        self.rref.free_columns()
    }
}
