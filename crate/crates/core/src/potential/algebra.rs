//! The algebra `𝒜(w, N)`, the spaces `𝒲_n`, their complexes, and potential extraction.

use std::collections::BTreeMap;

use super::form::{check_preregular, PreregularityReport, Potential};
use crate::error::{Error, Result};
use crate::exactlin::word;
use crate::exactlin::{Scalar, SparseVec, TensorSubspace};
use crate::homogeneous::complex::{contraction, contraction_bimodule, SlotSpaces};
use crate::homogeneous::koszul::{gorenstein_check, is_koszul, GorensteinReport, BIMODULE_CAP};
use crate::homogeneous::{nu, FreeComplex, GorensteinVerdict, GradedAlgebra, HomogeneousPresentation, KoszulVerdict, Side, Workspace};

/// Span of the contractions of `w` leaving the `n` slots `p, …, p + n − 1` free.
pub fn contraction_span(w: &Potential, n: usize, p: usize) -> Result<TensorSubspace> {
    let (d, m) = (w.d(), w.m);
    if p + n > m {
        return Err(Error::DimensionMismatch(format!("free block {p}..{} exceeds m = {m}", p + n)));
    }
    let mut groups: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (idx, c) in w.coeffs.iter() {
        let (head, rest) = word::split(*idx, p, m, d);
        let (free, tail) = word::split(rest, n, m - p, d);
        let contracted = word::concat(head, tail, m - p - n, d);
        groups.entry(contracted).or_default().push((free, c.clone()));
    }
    TensorSubspace::span(w.field(), d, n, groups.into_values().map(SparseVec::from_pairs))
}

fn require_preregular(w: &Potential) -> Result<PreregularityReport> {
    let report = check_preregular(w)?;
    if !report.preregular() {
        let reason = if report.twist.is_none() {
            "no invertible twisting element".to_string()
        } else {
            let k = report.one_site.iter().position(|b| !b).unwrap_or(0);
            format!("slot {k} is degenerate")
        };
        return Err(Error::Precondition(format!("the potential is not preregular: {reason}")));
    }
    Ok(report)
}

/// `𝒜(w, N) = T(E)/(R_{wN})` with `R_{wN}` spanned by the `(m − N)`-th derivatives of `w`.
pub fn potential_algebra(w: &Potential, big_n: usize) -> Result<HomogeneousPresentation> {
    if w.m < 2 {
        return Err(Error::Precondition("potential algebras need m ≥ 2".into()));
    }
    if big_n < 2 || big_n > w.m {
        return Err(Error::Precondition(format!("need m ≥ N ≥ 2, got m = {}, N = {big_n}", w.m)));
    }
    require_preregular(w)?;
    let r = contraction_span(w, big_n, w.m - big_n)?;
    HomogeneousPresentation::new(format!("A(w,{big_n})"), w.generators.clone(), big_n, r)
}

#[derive(Clone, Debug)]
pub struct WSpaces {
    pub big_n: usize,
    /// `𝒲_0, …, 𝒲_m`.
    pub spaces: Vec<TensorSubspace>,
}

impl WSpaces {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    /// First degree `n` where `𝒲_n ⊄ A^{!*}_n`, among the provided coalgebra components.
    pub fn inclusion_failure(&self, coalgebra: &[TensorSubspace]) -> Option<usize> {
        self.spaces
            .iter()
            .zip(coalgebra)
            .position(|(w, c)| w.basis().iter().any(|v| !c.contains(v)))
    }

    /// The spaces followed by zero spaces through degree `upto`.
    fn padded(&self, upto: usize) -> Result<Vec<TensorSubspace>> {
        let mut out = self.spaces.clone();
        let (field, d) = (out[0].field(), out[0].d());
        for n in out.len()..=upto {
            out.push(TensorSubspace::zero(field, d, n)?);
        }
        Ok(out)
    }
}

pub fn w_spaces(w: &Potential, big_n: usize) -> Result<WSpaces> {
    potential_algebra(w, big_n)?;
    let (d, m) = (w.d(), w.m);
    let mut spaces = Vec::with_capacity(m + 1);
    for n in 0..=m {
        spaces.push(if n < big_n {
            TensorSubspace::full(w.field(), d, n)?
        } else {
            contraction_span(w, n, m - n)?
        });
    }
    Ok(WSpaces { big_n, spaces })
}

/// `D` with `𝒲_{ν(D)} = 𝕂w`: `m` for `N = 2`, `2p + 1` for `m = Np + 1`.
pub fn w_length(m: usize, big_n: usize) -> Result<usize> {
    if big_n == 2 {
        return Ok(m);
    }
    if m < big_n + 1 || m % big_n != 1 {
        return Err(Error::Precondition(format!(
            "for N = {big_n} the degree m = {m} must be Np + 1 with p ≥ 1"
        )));
    }
    Ok(2 * (m / big_n) + 1)
}

#[derive(Clone, Debug)]
pub struct WContractions {
    pub length: usize,
    /// `dim 𝒲_{ν(n)}` for `0 ≤ n ≤ length`.
    pub dims: Vec<usize>,
    pub duality_holds: bool,
    pub left: FreeComplex,
    pub bimodule: FreeComplex,
    pub bimodule_cap: usize,
}

/// `𝒲(𝒜, 𝕂)` and `𝒲(𝒜, 𝒜)`. Building them checks that the differentials stay inside the
/// `𝒲` subspaces; a violation is reported as an inconsistency.
pub fn w_contractions(w: &Potential, big_n: usize, cap: usize) -> Result<WContractions> {
    let length = w_length(w.m, big_n)?;
    let ws = w_spaces(w, big_n)?;
    let pres = potential_algebra(w, big_n)?;
    let alg = GradedAlgebra::new(&pres, cap)?;
    contractions_on(&alg, &ws, length, cap)
}

fn contractions_on(alg: &GradedAlgebra, ws: &WSpaces, length: usize, cap: usize) -> Result<WContractions> {
    let big_n = ws.big_n;
    let dims: Vec<usize> = (0..=length).map(|n| ws.spaces[nu(big_n, n)].dim()).collect();
    let duality_holds = (0..=length).all(|n| dims[n] == dims[length - n]);
    let left = contraction(
        alg,
        SlotSpaces {
            spaces: &ws.spaces,
            tail_zero: true,
        },
        Side::Left,
        big_n,
        cap,
    )?;
    let bimodule_cap = cap.min(BIMODULE_CAP);
    let padded = ws.padded(nu(big_n, length + 1).min(bimodule_cap + big_n))?;
    let bimodule = contraction_bimodule(alg, &padded, big_n, bimodule_cap)?;
    Ok(WContractions {
        length,
        dims,
        duality_holds,
        left,
        bimodule,
        bimodule_cap,
    })
}

/// Extracts the potential spanning the top space `A^{!*}_{ν(D)}` of a Koszul AS-Gorenstein
/// algebra, scaled so its least word has coefficient 1.
pub fn extract_potential(ws: &Workspace, report: &GorensteinReport) -> Result<Potential> {
    let GorensteinVerdict::GorensteinUpToCap { d, .. } = report.verdict else {
        return Err(Error::Precondition("extraction needs a Gorenstein certificate".into()));
    };
    let big_n = ws.big_n();
    if big_n >= 3 && d % 2 == 0 {
        return Err(Error::Precondition(format!("global dimension {d} is even while N = {big_n}")));
    }
    let m = nu(big_n, d);
    let top = ws
        .coalgebra
        .get(m)
        .ok_or_else(|| Error::Capacity(format!("degree {m} is beyond the cap {}", ws.cap)))?;
    if top.dim() != 1 {
        return Err(Error::Inconsistency(format!("A^!*_{m} has dimension {}, expected 1", top.dim())));
    }
    let mut v = top.basis()[0].clone();
    let lead = v.leading().expect("nonzero basis vector").1.inv().expect("nonzero");
    v.scale(&lead);
    let w = Potential::new(ws.pres.generators.clone(), m, v)?;
    let back = potential_algebra(&w, big_n)
        .map_err(|e| Error::Inconsistency(format!("extracted potential is unusable: {e}")))?;
    if back.relations != ws.pres.relations {
        return Err(Error::Inconsistency("the extracted potential does not regenerate the relations".into()));
    }
    Ok(w)
}

#[derive(Clone, Debug)]
pub struct EqRegReport {
    pub cap: usize,
    /// `H_i(𝒲(𝒜, 𝕂)) = 0` for `i ≥ 1` in the computed range.
    pub w_acyclic: bool,
    /// `𝒲_{ν(n)} = A^{!*}_{ν(n)}` for every slot within the cap; `None` when not acyclic.
    pub equals_koszul: Option<bool>,
    pub bimodule_cap: usize,
    pub w_bimodule_acyclic: bool,
    pub koszul: KoszulVerdict,
    pub gorenstein: Option<GorensteinVerdict>,
    /// Both sides of the equivalence were decided and agree.
    pub consistent: bool,
}

impl EqRegReport {
    pub fn holds(&self) -> bool {
        self.w_acyclic && self.equals_koszul == Some(true) && self.consistent
    }
}

fn acyclic_above_zero(c: &FreeComplex) -> bool {
    c.homology().nonzero().all(|((i, _), _)| *i == 0)
}

/// `𝒲(𝒜, 𝕂)` acyclic in positive degrees, cross-checked against Koszulity and AS-Gorenstein.
pub fn eqreg_check(w: &Potential, big_n: usize, cap: usize) -> Result<EqRegReport> {
    let length = w_length(w.m, big_n)?;
    let ws_spaces = w_spaces(w, big_n)?;
    let pres = potential_algebra(w, big_n)?;
    let work = Workspace::new(&pres, cap)?;
    let wc = contractions_on(&work.alg, &ws_spaces, length, cap)?;
    let w_acyclic = acyclic_above_zero(&wc.left);
    let w_bimodule_acyclic = acyclic_above_zero(&wc.bimodule);
    let equals_koszul = w_acyclic.then(|| {
        (0..)
            .map(|n| nu(big_n, n))
            .take_while(|&g| g <= cap)
            .all(|g| match (ws_spaces.spaces.get(g), work.coalgebra.get(g)) {
                (Some(a), Some(b)) => a == b,
                (None, Some(b)) => b.is_zero(),
                _ => true,
            })
    });
    let kr = is_koszul(&work)?;
    let gorenstein = match kr.verdict {
        KoszulVerdict::KoszulUpToCap => Some(gorenstein_check(&work)?.verdict),
        KoszulVerdict::FailsAt { .. } => None,
    };
    let regular = match (&kr.verdict, &gorenstein) {
        (KoszulVerdict::FailsAt { .. }, _) => Some(false),
        (_, Some(GorensteinVerdict::GorensteinUpToCap { .. })) => Some(true),
        (_, Some(GorensteinVerdict::Fails { .. })) => Some(false),
        _ => None,
    };
    let consistent = regular == Some(w_acyclic && equals_koszul == Some(true)) && w_bimodule_acyclic == w_acyclic;
    Ok(EqRegReport {
        cap,
        w_acyclic,
        equals_koszul,
        bimodule_cap: wc.bimodule_cap,
        w_bimodule_acyclic,
        koszul: kr.verdict,
        gorenstein,
        consistent,
    })
}
