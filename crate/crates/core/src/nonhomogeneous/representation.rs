use super::presentation::NonhomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{word, FieldConfig, SparseMatrix, SparseVec};
use crate::homogeneous::Side;

/// A module over `𝔄` given by the matrices `ρ(x^λ)` on `V = 𝕂^dim`. For a right module the
/// matrix of `x` is `v ↦ v·x`, so a word acts by the product in reversed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub side: Side,
    pub dim: usize,
    pub matrices: Vec<SparseMatrix>,
    pub field: FieldConfig,
}

impl Representation {
    pub fn new(pres: &NonhomogeneousPresentation, side: Side, dim: usize, matrices: Vec<SparseMatrix>) -> Result<Self> {
        if side == Side::Bimodule {
            return Err(Error::Precondition("representations are one-sided".into()));
        }
        if matrices.len() != pres.d() || matrices.iter().any(|m| m.nrows != dim || m.ncols != dim) {
            return Err(Error::DimensionMismatch(format!(
                "need {} matrices of size {dim}x{dim}",
                pres.d()
            )));
        }
        let rep = Representation {
            side,
            dim,
            matrices,
            field: pres.field(),
        };
        for j in 0..pres.relations.dim() {
            let parts = pres.relation_parts(j);
            if !rep.act_parts(&parts, pres.d()).is_zero() {
                let text = parts
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(n, v)| pres.homogeneous_part().render_tensor(v, n))
                    .collect::<Vec<_>>()
                    .join(" + ");
                return Err(Error::Precondition(format!("the representation violates the relation {text} = 0")));
            }
        }
        Ok(rep)
    }

    /// `ρ` of a word of length `n`.
    pub fn word_matrix(&self, idx: usize, n: usize, d: usize) -> SparseMatrix {
        let mut acc = SparseMatrix::identity(self.field, self.dim);
        for a in word::letters(idx, d, n) {
            acc = match self.side {
                Side::Left => acc.mul(&self.matrices[a]),
                _ => self.matrices[a].mul(&acc),
            };
        }
        acc
    }

    /// `ρ` of a tensor in `E^{⊗n}`.
    pub fn tensor_matrix(&self, v: &SparseVec, n: usize, d: usize) -> SparseMatrix {
        let mut acc = SparseMatrix::zero(self.field, self.dim, self.dim);
        for (w, c) in v.iter() {
            acc = acc.lincomb(c, &self.word_matrix(*w, n, d));
        }
        acc
    }

    /// `ρ` of an inhomogeneous element given by its components, index = degree.
    fn act_parts(&self, parts: &[SparseVec], d: usize) -> SparseMatrix {
        let mut acc = SparseMatrix::zero(self.field, self.dim, self.dim);
        for (n, v) in parts.iter().enumerate() {
            acc = acc.add(&self.tensor_matrix(v, n, d));
        }
        acc
    }

    pub fn trivial(pres: &NonhomogeneousPresentation, side: Side, dim: usize) -> Result<Self> {
        let zero = SparseMatrix::zero(pres.field(), dim, dim);
        Representation::new(pres, side, dim, vec![zero; pres.d()])
    }
}
