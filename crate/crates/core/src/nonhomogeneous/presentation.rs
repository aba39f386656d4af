use crate::error::{Error, Result};
use crate::exactlin::{FieldConfig, Scalar, SparseVec, TensorSubspace};
use crate::homogeneous::HomogeneousPresentation;

/// `𝔄 = T(E)/({r − φ(r) | r ∈ R})` with `φ = Σ_{n<N} φ_n`, `φ_n : R → E^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonhomogeneousPresentation {
    pub name: String,
    pub generators: Vec<String>,
    pub n: usize,
    pub relations: TensorSubspace,
    /// `phi[k][j] = φ_k(r_j)` on the echelon basis `r_j` of `R`.
    pub phi: Vec<Vec<SparseVec>>,
}

impl NonhomogeneousPresentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        n: usize,
        relations: TensorSubspace,
        phi: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let name = name.into();
        HomogeneousPresentation::new(name.clone(), generators.clone(), n, relations.clone())?;
        if phi.len() != n || phi.iter().any(|p| p.len() != relations.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "φ needs {n} components with one value per relation ({} relations)",
                relations.dim()
            )));
        }
        let d = generators.len();
        for (k, comp) in phi.iter().enumerate() {
            let size = crate::exactlin::word::pow(d, k);
            if comp.iter().any(|v| v.max_index().is_some_and(|i| i >= size)) {
                return Err(Error::DimensionMismatch(format!("φ_{k} value outside E^{k}")));
            }
        }
        Ok(NonhomogeneousPresentation {
            name,
            generators,
            n,
            relations,
            phi,
        })
    }

    /// The quadratic-linear presentation `r − φ_1(r) − φ_0(r)` with `φ_0 = 0` unless given.
    pub fn homogeneous(pres: &HomogeneousPresentation) -> Self {
        let k = pres.relations.dim();
        NonhomogeneousPresentation {
            name: pres.name.clone(),
            generators: pres.generators.clone(),
            n: pres.n,
            relations: pres.relations.clone(),
            phi: vec![vec![SparseVec::new(); k]; pres.n],
        }
    }

    pub fn d(&self) -> usize {
        self.generators.len()
    }

    pub fn field(&self) -> FieldConfig {
        self.relations.field()
    }

    pub fn homogeneous_part(&self) -> HomogeneousPresentation {
        HomogeneousPresentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            n: self.n,
            relations: self.relations.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.phi.iter().all(|c| c.iter().all(|v| v.is_zero()))
    }

    /// `φ_k(r)` for an arbitrary `r ∈ R`.
    pub fn apply_phi(&self, k: usize, r: &SparseVec) -> Result<SparseVec> {
        let coords = self.relations.coords(r)?;
        Ok(self.combine(k, &coords))
    }

    pub(crate) fn combine(&self, k: usize, coords: &[Scalar]) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, v) in coords.iter().zip(&self.phi[k]) {
            out.axpy(c, v);
        }
        out
    }

    /// Full relation `r_j − φ(r_j)` as tensors per degree, index = degree.
    pub fn relation_parts(&self, j: usize) -> Vec<SparseVec> {
        let mut parts: Vec<SparseVec> = self.phi.iter().map(|c| c[j].neg()).collect();
        parts.push(self.relations.basis()[j].clone());
        parts
    }
}
