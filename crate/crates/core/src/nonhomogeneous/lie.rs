//! Lie prealgebras: quadratic-linear presentations with Koszul AS-Gorenstein homogeneous part
//! and the PBW property.

use super::curved::{to_curved_dga, CurvedDualReport};
use super::pbw::{pbw_check, FiltrationReport};
use super::presentation::NonhomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::SparseVec;
use crate::homogeneous::{
    gorenstein_check, graded_frobenius_test, is_koszul, FrobeniusVerdict, GorensteinVerdict, GradedAlgebra,
    KoszulVerdict, Workspace,
};

#[derive(Clone, Debug)]
pub struct LiePrealgebra {
    pub base: NonhomogeneousPresentation,
    pub cap: usize,
    pub koszul: KoszulVerdict,
    /// `None` when the homogeneous part is not Koszul.
    pub gorenstein: Option<GorensteinVerdict>,
    pub pbw: FiltrationReport,
    /// The dual `(𝒜^!, δ)`; `δ² = 0` is condition (b′) with `F = 0`.
    pub dual: CurvedDualReport,
    pub dual_dims: Vec<usize>,
    pub dual_frobenius: FrobeniusVerdict,
}

impl LiePrealgebra {
    pub fn certified(&self) -> bool {
        self.koszul == KoszulVerdict::KoszulUpToCap
            && matches!(self.gorenstein, Some(GorensteinVerdict::GorensteinUpToCap { .. }))
            && self.pbw.pbw_holds()
    }

    /// `(𝒜^!, δ)` is a differential quadratic algebra on a Frobenius algebra.
    pub fn dual_is_differential_frobenius(&self) -> bool {
        self.dual.checks.holds() && matches!(self.dual_frobenius, FrobeniusVerdict::Frobenius { .. })
    }
}

pub fn lie_prealgebra_certify(pres: &NonhomogeneousPresentation, cap: usize) -> Result<LiePrealgebra> {
    if pres.n != 2 {
        return Err(Error::Precondition(format!("Lie prealgebras are quadratic, got N = {}", pres.n)));
    }
    if pres.phi[0].iter().any(|v| !v.is_zero()) {
        return Err(Error::Precondition("Lie prealgebras need φ_0 = 0".into()));
    }
    let work = Workspace::new(&pres.homogeneous_part(), cap)?;
    let koszul = is_koszul(&work)?.verdict;
    let gorenstein = match koszul {
        KoszulVerdict::KoszulUpToCap => Some(gorenstein_check(&work)?.verdict),
        KoszulVerdict::FailsAt { .. } => None,
    };
    let pbw = pbw_check(pres, cap)?;
    let dual = to_curved_dga(pres)?;
    let dual_alg = GradedAlgebra::new(&dual.dga.dual, cap)?;
    let dual_dims = dual_alg.hilbert();
    let field = pres.field();
    let dual_frobenius = graded_frobenius_test(&dual_dims, |i, a, j, b| {
        dual_alg.mul(i, &SparseVec::unit(a, field), j, &SparseVec::unit(b, field))
    })?;
    Ok(LiePrealgebra {
        base: pres.clone(),
        cap,
        koszul,
        gorenstein,
        pbw,
        dual,
        dual_dims,
        dual_frobenius,
    })
}
