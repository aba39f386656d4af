//! Curved differential quadratic duals `(𝒜^!, δ, F)` of nonhomogeneous quadratic algebras.

use super::abc::{check_conditions_abc, AbcReport, Condition};
use super::presentation::NonhomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{word, SparseMatrix, SparseVec};
use crate::homogeneous::{GradedAlgebra, HomogeneousPresentation};

/// `𝒜^!` with `δ` on generators and the curvature `F`, both in normal-word coordinates of `𝒜^!_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvedDga {
    pub dual: HomogeneousPresentation,
    /// `delta[λ] = δθ_λ`.
    pub delta: Vec<SparseVec>,
    pub curvature: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvedFailure {
    pub condition: Condition,
    /// Element of `R^⊥` for (a′), the generator index for (b′), `F` for (c′).
    pub witness: SparseVec,
    /// The nonzero value in `𝒜^!_3`, normal-word coordinates.
    pub defect: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvedChecks {
    pub a: bool,
    /// `None` when (a′) fails and `δ` is not defined on `𝒜^!_2`.
    pub b: Option<bool>,
    pub c: Option<bool>,
    pub first_failure: Option<CurvedFailure>,
}

impl CurvedChecks {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct CurvedDualReport {
    pub dga: CurvedDga,
    pub checks: CurvedChecks,
    pub abc: AbcReport,
}

impl CurvedDga {
    pub fn new(dual: HomogeneousPresentation, delta: Vec<SparseVec>, curvature: SparseVec) -> Result<Self> {
        if dual.n != 2 {
            return Err(Error::Precondition("curved duals are quadratic".into()));
        }
        if delta.len() != dual.d() {
            return Err(Error::DimensionMismatch(format!("need δ on all {} generators", dual.d())));
        }
        let alg = GradedAlgebra::new(&dual, 2)?;
        let dim = alg.dim(2).expect("within cap");
        if delta.iter().chain([&curvature]).any(|v| v.max_index().is_some_and(|i| i >= dim)) {
            return Err(Error::DimensionMismatch(format!("values must lie in a {dim}-dimensional A^!_2")));
        }
        Ok(CurvedDga {
            dual,
            delta,
            curvature,
        })
    }

    /// Builds the data from tensors in `E*⊗E*`, reduced modulo `R^⊥`.
    pub fn from_tensors(dual: HomogeneousPresentation, delta: &[SparseVec], curvature: &SparseVec) -> Result<Self> {
        let alg = GradedAlgebra::new(&dual, 2)?;
        let delta = delta.iter().map(|t| alg.nf_tensor(t, 2)).collect();
        let curvature = alg.nf_tensor(curvature, 2);
        CurvedDga::new(dual, delta, curvature)
    }

    pub fn is_flat(&self) -> bool {
        self.curvature.is_zero()
    }

    pub fn is_differential_zero(&self) -> bool {
        self.delta.iter().all(|v| v.is_zero())
    }

    /// Renders `δθ_λ` and `F` in the dual generators.
    pub fn render(&self) -> Result<(Vec<String>, String)> {
        let alg = GradedAlgebra::new(&self.dual, 2)?;
        Ok((self.delta.iter().map(|v| alg.render(2, v)).collect(), alg.render(2, &self.curvature)))
    }
}

/// The antiderivation of `T(E*)` extending `θ_λ ↦ lifts[λ]`, applied to a tensor of degree `n`.
pub(crate) fn antiderivation(lifts: &[SparseVec], t: &SparseVec, n: usize, d: usize) -> SparseVec {
    let mut out = SparseVec::new();
    for (w, c) in t.iter() {
        let letters = word::letters(*w, d, n);
        for (j, &a) in letters.iter().enumerate() {
            let head = word::index(&letters[..j], d);
            let tail = word::index(&letters[j + 1..], d);
            let tail_len = n - j - 1;
            let placed = lifts[a].map_indices(|u| word::concat(word::concat(head, u, 2, d), tail, tail_len, d));
            let sign = if j % 2 == 0 { c.clone() } else { -c };
            out.axpy(&sign, &placed);
        }
    }
    out
}

/// Checks (a′) descent of `δ` to `𝒜^!`, (b′) `δ²θ = Fθ − θF`, (c′) `δF = 0`.
pub fn check_curved(c: &CurvedDga) -> Result<CurvedChecks> {
    let alg = GradedAlgebra::new(&c.dual, 3)?;
    let (d, field) = (c.dual.d(), c.dual.field());
    let lifts: Vec<SparseVec> = c.delta.iter().map(|v| alg.lift(2, v)).collect();
    let mut checks = CurvedChecks {
        a: true,
        b: Some(true),
        c: Some(true),
        first_failure: None,
    };
    let mut failures = Vec::new();
    for s in c.dual.relations.basis() {
        let value = alg.nf_tensor(&antiderivation(&lifts, s, 2, d), 3);
        if !value.is_zero() {
            checks.a = false;
            failures.push(CurvedFailure {
                condition: Condition::A,
                witness: s.clone(),
                defect: value,
            });
        }
    }
    if !checks.a {
        checks.b = None;
        checks.c = None;
    } else {
        for (lambda, lift) in lifts.iter().enumerate() {
            let dd = alg.nf_tensor(&antiderivation(&lifts, lift, 2, d), 3);
            let theta = SparseVec::unit(lambda, field);
            let bracket = alg
                .mul(2, &c.curvature, 1, &theta)?
                .sub(&alg.mul(1, &theta, 2, &c.curvature)?, field);
            let value = dd.sub(&bracket, field);
            if !value.is_zero() {
                checks.b = Some(false);
                failures.push(CurvedFailure {
                    condition: Condition::B(1),
                    witness: theta,
                    defect: value,
                });
            }
        }
        let value = alg.nf_tensor(&antiderivation(&lifts, &alg.lift(2, &c.curvature), 2, d), 3);
        if !value.is_zero() {
            checks.c = Some(false);
            failures.push(CurvedFailure {
                condition: Condition::C,
                witness: c.curvature.clone(),
                defect: value,
            });
        }
    }
    checks.first_failure = failures.into_iter().min_by_key(|f| f.condition);
    Ok(checks)
}

/// `δθ_λ = −φ_1^t(θ_λ)`, `F = −φ_0^t(1)`, with the verdicts of both condition sets.
pub fn to_curved_dga(pres: &NonhomogeneousPresentation) -> Result<CurvedDualReport> {
    if pres.n != 2 {
        return Err(Error::Precondition(format!("curved duals need N = 2, got N = {}", pres.n)));
    }
    let field = pres.field();
    let dual = pres.homogeneous_part().koszul_dual();
    let alg = GradedAlgebra::new(&dual, 2)?;
    let normal = alg.normal_words(2);
    let rels = pres.relations.basis();
    // pairing of the relation basis with the normal words of 𝒜^!_2
    let rows: Vec<SparseVec> = rels
        .iter()
        .map(|r| SparseVec::from_pairs(normal.iter().enumerate().filter_map(|(i, w)| r.get(*w).map(|c| (i, c.clone()))).collect()))
        .collect();
    let pairing = SparseMatrix::from_rows(field, normal.len(), rows);
    let solve = |values: Vec<_>| {
        pairing
            .solve(&SparseVec::from_pairs(values.into_iter().enumerate().collect()))
            .ok_or_else(|| Error::Inconsistency("R does not pair perfectly with A^!_2".into()))
    };
    let mut delta = Vec::with_capacity(pres.d());
    for lambda in 0..pres.d() {
        let values = pres.phi[1].iter().map(|p| -p.get(lambda).cloned().unwrap_or_else(|| field.zero())).collect();
        delta.push(solve(values)?);
    }
    let values = pres.phi[0].iter().map(|p| -p.get(0).cloned().unwrap_or_else(|| field.zero())).collect();
    let curvature = solve(values)?;
    let dga = CurvedDga::new(dual, delta, curvature)?;
    let checks = check_curved(&dga)?;
    let abc = check_conditions_abc(pres)?;
    let agree = checks.holds() == abc.holds()
        && checks.a == abc.a
        && (checks.b.is_none() || abc.b[0].is_none() || checks.b == abc.b[0])
        && (checks.c.is_none() || abc.c.is_none() || checks.c == abc.c);
    if !agree {
        return Err(Error::Inconsistency(format!(
            "(a)(b)(c) give {:?}/{:?}/{:?} but (a′)(b′)(c′) give {:?}/{:?}/{:?}",
            abc.a, abc.b[0], abc.c, checks.a, checks.b, checks.c
        )));
    }
    Ok(CurvedDualReport { dga, checks, abc })
}

/// Recovers `(R, φ_1, φ_0)` from verified curved data by transposition.
pub fn from_curved_dga(c: &CurvedDga) -> Result<NonhomogeneousPresentation> {
    let checks = check_curved(c)?;
    if let Some(f) = checks.first_failure {
        return Err(Error::Precondition(format!("condition ({}′) fails on the curved data", f.condition)));
    }
    let alg = GradedAlgebra::new(&c.dual, 2)?;
    let field = c.dual.field();
    let base = c.dual.koszul_dual();
    let lifts: Vec<SparseVec> = c.delta.iter().map(|v| alg.lift(2, v)).collect();
    let curvature = alg.lift(2, &c.curvature);
    let mut phi1 = Vec::new();
    let mut phi0 = Vec::new();
    for r in base.relations.basis() {
        phi1.push(SparseVec::from_pairs(lifts.iter().enumerate().map(|(l, t)| (l, -t.dot(r, field))).collect()));
        phi0.push(SparseVec::from_pairs(vec![(0, -curvature.dot(r, field))]));
    }
    NonhomogeneousPresentation::new(base.name, base.generators, 2, base.relations, vec![phi0, phi1])
}
