//! The overlap space `𝒱_{N+1}` and the conditions (a), (b), (c) on `φ`.

use std::collections::BTreeMap;
use std::fmt;

use super::presentation::NonhomogeneousPresentation;
use crate::error::Result;
use crate::exactlin::{word, SparseVec, TensorSubspace};

/// `𝒱_{N+1} = (R ⊗ E) ∩ (E ⊗ R)`.
pub fn v_space(pres: &NonhomogeneousPresentation) -> Result<TensorSubspace> {
    let r = &pres.relations;
    TensorSubspace::box_subspace(0, r, 1)?.intersect(&TensorSubspace::box_subspace(1, r, 0)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    A,
    /// Condition (b) for the given `n`, `1 ≤ n ≤ N − 1`.
    B(usize),
    C,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::A => write!(f, "a"),
            Condition::B(n) => write!(f, "b(n={n})"),
            Condition::C => write!(f, "c"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcFailure {
    pub condition: Condition,
    /// Basis vector of `𝒱_{N+1}` on which the condition fails.
    pub witness: SparseVec,
    /// The offending value: the component of `X` outside `R` for (a), the nonzero element otherwise.
    pub defect: SparseVec,
    /// Tensor degree of `defect`.
    pub defect_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcReport {
    pub v_dim: usize,
    pub a: bool,
    /// `b[n − 1]` for `1 ≤ n ≤ N − 1`; `None` when (a) fails, since `φ_n(X)` is then undefined.
    pub b: Vec<Option<bool>>,
    pub c: Option<bool>,
    pub first_failure: Option<AbcFailure>,
}

impl AbcReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `(φ_k ⊗ I)(v)` for `v ∈ R ⊗ E`, using the slices of `v` along its last letter.
fn phi_left(pres: &NonhomogeneousPresentation, k: usize, v: &SparseVec) -> Result<SparseVec> {
    let (d, big_n) = (pres.d(), pres.n);
    let mut slices: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for (idx, c) in v.iter() {
        let (head, a) = word::split(*idx, big_n, big_n + 1, d);
        slices.entry(a).or_default().push((head, c.clone()));
    }
    let mut out = SparseVec::new();
    for (a, pairs) in slices {
        let image = pres.apply_phi(k, &SparseVec::from_pairs(pairs))?;
        out.axpy(&pres.field().one(), &image.map_indices(|w| word::concat(w, a, 1, d)));
    }
    Ok(out)
}

/// `(I ⊗ φ_k)(v)` for `v ∈ E ⊗ R`.
fn phi_right(pres: &NonhomogeneousPresentation, k: usize, v: &SparseVec) -> Result<SparseVec> {
    let (d, big_n) = (pres.d(), pres.n);
    let mut slices: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for (idx, c) in v.iter() {
        let (a, tail) = word::split(*idx, 1, big_n + 1, d);
        slices.entry(a).or_default().push((tail, c.clone()));
    }
    let mut out = SparseVec::new();
    for (a, pairs) in slices {
        let image = pres.apply_phi(k, &SparseVec::from_pairs(pairs))?;
        out.axpy(&pres.field().one(), &image.map_indices(|w| word::concat(a, w, k, d)));
    }
    Ok(out)
}

/// `(φ_k ⊗ I − I ⊗ φ_k)(v)`, an element of `E^{⊗(k+1)}`.
pub fn phi_commutator(pres: &NonhomogeneousPresentation, k: usize, v: &SparseVec) -> Result<SparseVec> {
    Ok(phi_left(pres, k, v)?.sub(&phi_right(pres, k, v)?, pres.field()))
}

/// Evaluates (a), (b) for `1 ≤ n ≤ N − 1`, and (c) on the echelon basis of `𝒱_{N+1}`.
pub fn check_conditions_abc(pres: &NonhomogeneousPresentation) -> Result<AbcReport> {
    let big_n = pres.n;
    let field = pres.field();
    let v = v_space(pres)?;
    let mut report = AbcReport {
        v_dim: v.dim(),
        a: true,
        b: vec![Some(true); big_n - 1],
        c: Some(true),
        first_failure: None,
    };
    let mut failures = Vec::new();
    for basis in v.basis() {
        let x = phi_commutator(pres, big_n - 1, basis)?;
        let outside = pres.relations.residual(&x);
        if !outside.is_zero() {
            report.a = false;
            report.b = vec![None; big_n - 1];
            report.c = None;
            failures.push(AbcFailure {
                condition: Condition::A,
                witness: basis.clone(),
                defect: outside,
                defect_degree: big_n,
            });
            continue;
        }
        for n in 1..big_n {
            let mut value = pres.apply_phi(n, &x)?;
            value.axpy(&field.one(), &phi_commutator(pres, n - 1, basis)?);
            if !value.is_zero() {
                if let Some(slot) = report.b[n - 1].as_mut() {
                    *slot = false;
                }
                failures.push(AbcFailure {
                    condition: Condition::B(n),
                    witness: basis.clone(),
                    defect: value,
                    defect_degree: n,
                });
            }
        }
        let value = pres.apply_phi(0, &x)?;
        if !value.is_zero() {
            if let Some(slot) = report.c.as_mut() {
                *slot = false;
            }
            failures.push(AbcFailure {
                condition: Condition::C,
                witness: basis.clone(),
                defect: value,
                defect_degree: 0,
            });
        }
    }
    report.first_failure = failures.into_iter().min_by_key(|f| f.condition);
    Ok(report)
}
