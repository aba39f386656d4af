//! Graded components of `T(E)/(R)` realized on normal words.
//!
//! Degree `n` is computed from degree `n − 1`: the columns are pairs (normal word of `A_{n−1}`,
//! letter) and the relations are the images of `u ⊗ r` for normal `u ∈ A_{n−N}` and `r ∈ R`.
//! The non-pivot columns of the reduced relation matrix are the normal words of `A_n`.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::presentation::HomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::word::{self, MAX_WORDS};
use crate::exactlin::{Echelon, FieldConfig, Scalar, SparseVec, TensorSubspace};

#[derive(Clone, Debug)]
struct Level {
    /// Normal words as word indices in `E^{⊗n}`, increasing.
    words: Vec<usize>,
    /// For each normal word, its column `(prefix position) * d + last letter`.
    cols: Vec<usize>,
    /// Normal form of every column, in normal-word coordinates.
    col_nf: Vec<SparseVec>,
}

/// The graded algebra `A = T(E)/(R)` up to a degree cap.
#[derive(Debug)]
pub struct GradedAlgebra {
    pres: HomogeneousPresentation,
    cap: usize,
    levels: Vec<Level>,
    left: Vec<OnceLock<Vec<Vec<SparseVec>>>>,
}

impl GradedAlgebra {
    pub fn new(pres: &HomogeneousPresentation, cap: usize) -> Result<Self> {
        let d = pres.d();
        let mut levels = vec![Level {
            words: vec![0],
            cols: vec![],
            col_nf: vec![],
        }];
        let mut alg = GradedAlgebra {
            pres: pres.clone(),
            cap: 0,
            levels: Vec::new(),
            left: Vec::new(),
        };
        for n in 1..=cap {
            let prev = &levels[n - 1];
            let ncols = prev.words.len() * d;
            if ncols > MAX_WORDS {
                return Err(Error::Capacity(format!(
                    "degree {n} needs {ncols} columns, above the limit of {MAX_WORDS}"
                )));
            }
            let mut ech = Echelon::new(pres.field(), ncols);
            if n >= pres.n {
                alg.levels = levels;
                alg.cap = n - 1;
                let rows = alg.relation_rows(n);
                levels = std::mem::take(&mut alg.levels);
                for r in rows {
                    ech.insert(r);
                }
            }
            let rref = ech.into_rref();
            let mask = rref.pivot_mask();
            let mut pos = vec![usize::MAX; ncols];
            let mut words = Vec::new();
            let mut cols = Vec::new();
            let prev_words = &levels[n - 1].words;
            for c in 0..ncols {
                if !mask[c] {
                    pos[c] = cols.len();
                    cols.push(c);
                    words.push(prev_words[c / d] * d + c % d);
                }
            }
            let mut col_nf = vec![SparseVec::new(); ncols];
            for c in 0..ncols {
                if !mask[c] {
                    col_nf[c] = SparseVec::unit(pos[c], pres.field());
                }
            }
            for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                let tail: Vec<(usize, Scalar)> = row.iter().skip(1).map(|(c, v)| (pos[*c], -v)).collect();
                col_nf[p] = SparseVec::from_pairs(tail);
            }
            levels.push(Level { words, cols, col_nf });
        }
        alg.levels = levels;
        alg.cap = cap;
        alg.left = (0..=cap).map(|_| OnceLock::new()).collect();
        Ok(alg)
    }

    /// Images of `u ⊗ r` in `A_{n−1} ⊗ E`, for normal `u` of degree `n − N`.
    fn relation_rows(&self, n: usize) -> Vec<SparseVec> {
        let d = self.d();
        let big_n = self.pres.n;
        let base = n - big_n;
        let field = self.field();
        let mut rows = Vec::new();
        for u in 0..self.levels[base].words.len() {
            let mut memo: HashMap<usize, SparseVec> = HashMap::new();
            for r in self.pres.relations.basis() {
                let mut row = SparseVec::new();
                for (w, c) in r.iter() {
                    let (prefix, last) = word::split(*w, big_n - 1, big_n, d);
                    let head = memo.entry(prefix).or_insert_with(|| {
                        let mut v = SparseVec::unit(u, field);
                        for (k, a) in word::letters(prefix, d, big_n - 1).into_iter().enumerate() {
                            v = self.right_mul_letter(base + k, &v, a);
                        }
                        v
                    });
                    let shifted = head.map_indices(|i| i * d + last);
                    row.axpy(c, &shifted);
                }
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
        rows
    }

    pub fn presentation(&self) -> &HomogeneousPresentation {
        &self.pres
    }

    pub fn field(&self) -> FieldConfig {
        self.pres.field()
    }

    pub fn d(&self) -> usize {
        self.pres.d()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `dim A_n`, or `None` above the cap.
    pub fn dim(&self, n: usize) -> Option<usize> {
        self.levels.get(n).map(|l| l.words.len())
    }

    /// `dim A_n` for possibly negative `n` (zero there), `None` above the cap.
    pub fn dim_signed(&self, n: i64) -> Option<usize> {
        if n < 0 {
            Some(0)
        } else {
            self.dim(n as usize)
        }
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.words.len()).collect()
    }

    pub fn normal_words(&self, n: usize) -> &[usize] {
        &self.levels[n].words
    }

    pub fn render_basis(&self, n: usize, i: usize) -> String {
        self.pres.render_word(self.levels[n].words[i], n)
    }

    pub fn render(&self, n: usize, v: &SparseVec) -> String {
        super::presentation::render_poly(v, |i| self.render_basis(n, i))
    }

    /// `v · x_a` for `v ∈ A_n`.
    pub fn right_mul_letter(&self, n: usize, v: &SparseVec, a: usize) -> SparseVec {
        let d = self.d();
        let nf = &self.levels[n + 1].col_nf;
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &nf[i * d + a]);
        }
        out
    }

    fn left_table(&self, n: usize) -> &Vec<Vec<SparseVec>> {
        self.left[n].get_or_init(|| {
            let d = self.d();
            (0..d)
                .map(|a| {
                    if n == 0 {
                        return vec![self.levels[1].col_nf[a].clone()];
                    }
                    let lower = self.left_table(n - 1);
                    self.levels[n]
                        .cols
                        .iter()
                        .map(|&c| self.right_mul_letter(n, &lower[a][c / d], c % d))
                        .collect::<Vec<_>>()
                })
                .collect()
        })
    }

    /// `x_a · v` for `v ∈ A_n`.
    pub fn left_mul_letter(&self, a: usize, n: usize, v: &SparseVec) -> SparseVec {
        let table = &self.left_table(n)[a];
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &table[*i]);
        }
        out
    }

    /// Letters of the `i`-th normal word of degree `n`.
    pub fn basis_letters(&self, n: usize, i: usize) -> Vec<usize> {
        word::letters(self.levels[n].words[i], self.d(), n)
    }

    /// The product `x y` with `x ∈ A_m`, `y ∈ A_n`.
    pub fn mul(&self, m: usize, x: &SparseVec, n: usize, y: &SparseVec) -> Result<SparseVec> {
        if m + n > self.cap {
            return Err(Error::Capacity(format!(
                "product lands in degree {} above the cap {}",
                m + n,
                self.cap
            )));
        }
        let mut out = SparseVec::new();
        for (j, c) in y.iter() {
            let mut v = x.clone();
            for (k, a) in self.basis_letters(n, *j).into_iter().enumerate() {
                v = self.right_mul_letter(m + k, &v, a);
            }
            out.axpy(c, &v);
        }
        Ok(out)
    }

    /// Normal form of a word of length `n`.
    pub fn nf_word(&self, w: usize, n: usize) -> SparseVec {
        let mut v = SparseVec::unit(0, self.field());
        for (k, a) in word::letters(w, self.d(), n).into_iter().enumerate() {
            v = self.right_mul_letter(k, &v, a);
        }
        v
    }

    /// Normal form of a tensor in `E^{⊗n}`.
    pub fn nf_tensor(&self, v: &SparseVec, n: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in v.iter() {
            out.axpy(c, &self.nf_word(*w, n));
        }
        out
    }

    /// The tensor in `E^{⊗n}` represented by normal-word coordinates.
    pub fn lift(&self, n: usize, v: &SparseVec) -> SparseVec {
        v.map_indices(|i| self.levels[n].words[i])
    }
}

/// `A_n` computed directly from the ideal component `Σ E^{⊗r} ⊗ R ⊗ E^{⊗s}`.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub n: usize,
    pub ideal_part: TensorSubspace,
    pub normal_words: Vec<usize>,
    pub dim: usize,
}

pub fn degree_component(pres: &HomogeneousPresentation, n: usize) -> Result<GradedComponent> {
    let field = pres.field();
    let d = pres.d();
    let mut ideal = TensorSubspace::zero(field, d, n)?;
    if n >= pres.n {
        for r in 0..=(n - pres.n) {
            let s = n - pres.n - r;
            ideal = ideal.sum(&TensorSubspace::box_subspace(r, &pres.relations, s)?)?;
        }
    }
    let normal_words = ideal.quotient_words();
    Ok(GradedComponent {
        n,
        dim: normal_words.len(),
        normal_words,
        ideal_part: ideal,
    })
}

/// `A^{!*}_n = ∩_{r+s=n−N} E^{⊗r} ⊗ R ⊗ E^{⊗s}`, computed as `(A^{!*}_{n−1} ⊗ E) ∩ (E^{⊗(n−N)} ⊗ R)`.
pub fn dual_components(pres: &HomogeneousPresentation, cap: usize) -> Result<Vec<TensorSubspace>> {
    let field = pres.field();
    let d = pres.d();
    let big_n = pres.n;
    let mut out: Vec<TensorSubspace> = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        if n < big_n {
            out.push(TensorSubspace::full(field, d, n)?);
            continue;
        }
        word::word_count(d, n)?;
        let prev = &out[n - 1];
        let slice = word::pow(d, big_n);
        // residual of each candidate b ⊗ x_a modulo E^{⊗(n−N)} ⊗ R, slice by slice
        let mut residuals: Vec<SparseVec> = Vec::with_capacity(prev.dim() * d);
        let mut candidates: Vec<SparseVec> = Vec::with_capacity(prev.dim() * d);
        for b in prev.basis() {
            for a in 0..d {
                let v = b.map_indices(|w| w * d + a);
                let mut by_prefix: Vec<(usize, Vec<(usize, Scalar)>)> = Vec::new();
                for (w, c) in v.iter() {
                    let (p, s) = (w / slice, w % slice);
                    match by_prefix.last_mut() {
                        Some((q, e)) if *q == p => e.push((s, c.clone())),
                        _ => by_prefix.push((p, vec![(s, c.clone())])),
                    }
                }
                let mut res = Vec::new();
                for (p, e) in by_prefix {
                    let r = pres.relations.residual(&SparseVec::from_pairs(e));
                    res.extend(r.iter().map(|(s, c)| (p * slice + s, c.clone())));
                }
                residuals.push(SparseVec::from_pairs(res));
                candidates.push(v);
            }
        }
        let m = crate::exactlin::SparseMatrix::from_columns(field, word::pow(d, n), &residuals);
        let kernel = m.kernel();
        let vectors = kernel.into_iter().map(|k| {
            let mut v = SparseVec::new();
            for (i, c) in k.iter() {
                v.axpy(c, &candidates[*i]);
            }
            v
        });
        out.push(TensorSubspace::span(field, d, n, vectors)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldConfig;

    fn sym(d: usize) -> HomogeneousPresentation {
        let f = FieldConfig::Rational;
        let mut rels = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                rels.push(SparseVec::from_pairs(vec![(i * d + j, f.one()), (j * d + i, -f.one())]));
            }
        }
        let names = (0..d).map(|i| format!("x{i}")).collect();
        HomogeneousPresentation::from_relations("sym", f, names, 2, rels).unwrap()
    }

    #[test]
    fn symmetric_hilbert_series() {
        let a = GradedAlgebra::new(&sym(3), 5).unwrap();
        assert_eq!(a.hilbert(), vec![1, 3, 6, 10, 15, 21]);
    }

    #[test]
    fn normal_words_match_direct_ideal() {
        let p = sym(3);
        let a = GradedAlgebra::new(&p, 4).unwrap();
        for n in 0..=4 {
            let c = degree_component(&p, n).unwrap();
            assert_eq!(c.normal_words, a.normal_words(n));
        }
    }

    #[test]
    fn commutative_product() {
        let p = sym(2);
        let a = GradedAlgebra::new(&p, 3).unwrap();
        let f = FieldConfig::Rational;
        let x = SparseVec::unit(0, f);
        let y = SparseVec::unit(1, f);
        assert_eq!(a.mul(1, &y, 1, &x).unwrap(), a.mul(1, &x, 1, &y).unwrap());
        assert_eq!(a.left_mul_letter(1, 1, &x), a.right_mul_letter(1, &x, 1));
    }

    #[test]
    fn exterior_coalgebra_dims() {
        let comps = dual_components(&sym(3), 4).unwrap();
        let dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![1, 3, 3, 1, 0]);
    }
}
