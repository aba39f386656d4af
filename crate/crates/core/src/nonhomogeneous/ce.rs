//! Generalized Chevalley-Eilenberg complexes `V ⊗ 𝒜^!` of quadratic-linear algebras.

use super::curved::{antiderivation, check_curved, to_curved_dga};
use super::presentation::NonhomogeneousPresentation;
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::exactlin::{SparseMatrix, SparseVec};
use crate::homogeneous::{GradedAlgebra, Side};

#[derive(Clone, Debug)]
pub struct CeComplex {
    /// `Left`: cochains on `V ⊗ 𝒜^!`. `Right`: chains on `W ⊗ 𝒜^{!*}`.
    pub side: Side,
    pub dim: usize,
    /// `dim V ⊗ 𝒜^!_n`, up to the last nonzero degree within the cap.
    pub dims: Vec<usize>,
    /// Left: `δ_V : C^n → C^{n+1}`. Right: `δ_W : C_{n+1} → C_n`.
    pub differentials: Vec<SparseMatrix>,
    pub square_zero: bool,
    /// Cohomology (left) or homology (right) dimensions per degree.
    pub homology: Vec<usize>,
}

/// `δ` on `𝒜^!_n` as a matrix into `𝒜^!_{n+1}`.
fn delta_matrix(alg: &GradedAlgebra, delta: &[SparseVec], n: usize) -> SparseMatrix {
    let lifts: Vec<SparseVec> = delta.iter().map(|v| alg.lift(2, v)).collect();
    let cols: Vec<SparseVec> = (0..alg.dim(n).expect("within cap"))
        .map(|k| {
            let t = alg.lift(n, &SparseVec::unit(k, alg.field()));
            alg.nf_tensor(&antiderivation(&lifts, &t, n, alg.d()), n + 1)
        })
        .collect();
    SparseMatrix::from_columns(alg.field(), alg.dim(n + 1).expect("within cap"), &cols)
}

/// `δ_V(Φ ⊗ α) = Σ_λ ρ(x^λ)Φ ⊗ θ_λ α + Φ ⊗ δα`. A right module `W` is handled through the left
/// module `W*` with `ρ(x) = R(x)^t`; its chain complex is the transpose.
pub fn ce_complex(pres: &NonhomogeneousPresentation, rep: &Representation, cap: usize) -> Result<CeComplex> {
    if pres.n != 2 {
        return Err(Error::Precondition("Chevalley-Eilenberg complexes need N = 2".into()));
    }
    if pres.phi[0].iter().any(|v| !v.is_zero()) {
        return Err(Error::Precondition("Chevalley-Eilenberg complexes need φ_0 = 0".into()));
    }
    let rep = Representation::new(pres, rep.side, rep.dim, rep.matrices.clone())?;
    let curved = to_curved_dga(pres)?;
    if let Some(f) = check_curved(&curved.dga)?.first_failure {
        return Err(Error::Precondition(format!("condition ({}′) fails; δ is not a differential", f.condition)));
    }
    let field = pres.field();
    let alg = GradedAlgebra::new(&curved.dga.dual, cap + 1)?;
    let top = (0..=cap).take_while(|&n| alg.dim(n) != Some(0)).last().unwrap_or(0);
    let action: Vec<SparseMatrix> = match rep.side {
        Side::Left => rep.matrices.clone(),
        _ => rep.matrices.iter().map(|m| m.transpose()).collect(),
    };
    let v = rep.dim;
    let dims: Vec<usize> = (0..=top).map(|n| v * alg.dim(n).unwrap()).collect();
    let mut differentials = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let (dn, dn1) = (alg.dim(n).unwrap(), alg.dim(n + 1).unwrap());
        let delta = delta_matrix(&alg, &curved.dga.delta, n);
        let mut cols = Vec::with_capacity(v * dn);
        for i in 0..v {
            for k in 0..dn {
                let basis = SparseVec::unit(k, field);
                let mut col = SparseVec::new();
                for (lambda, rho) in action.iter().enumerate() {
                    let prod = alg.left_mul_letter(lambda, n, &basis);
                    let image = rho.apply(&SparseVec::unit(i, field));
                    for (i2, c) in image.iter() {
                        col.axpy(c, &prod.map_indices(|k2| i2 * dn1 + k2));
                    }
                }
                col.axpy(&field.one(), &delta.apply(&basis).map_indices(|k2| i * dn1 + k2));
                cols.push(col);
            }
        }
        differentials.push(SparseMatrix::from_columns(field, v * dn1, &cols));
    }
    let square_zero = differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero());
    let ranks: Vec<usize> = differentials.iter().map(|m| m.rank()).collect();
    let homology = (0..=top)
        .map(|n| dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect();
    if rep.side != Side::Left {
        differentials = differentials.iter().map(|m| m.transpose()).collect();
    }
    Ok(CeComplex {
        side: rep.side,
        dim: v,
        dims,
        differentials,
        square_zero,
        homology,
    })
}
