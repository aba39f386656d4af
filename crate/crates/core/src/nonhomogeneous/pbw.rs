//! Filtration dimensions of `𝔄` by spanning the truncated ideal in `⊕_{k≤n} E^{⊗k}`.

use super::abc::{check_conditions_abc, AbcReport};
use super::presentation::NonhomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::word::{self, MAX_WORDS};
use crate::exactlin::{Echelon, SparseVec};
use crate::homogeneous::{is_koszul, KoszulVerdict, Workspace};

#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub cap: usize,
    /// `dim F^n(𝔄)` for `0 ≤ n ≤ cap`.
    pub filtration_dims: Vec<usize>,
    /// `Σ_{k≤n} dim A_k`.
    pub homogeneous_cumulative: Vec<usize>,
    /// `dim F^n/F^{n−1}`.
    pub gr_dims: Vec<usize>,
    /// `filtration_dims[n] == homogeneous_cumulative[n]`.
    pub pbw_verdict: Vec<bool>,
    pub koszul: KoszulVerdict,
    pub abc: AbcReport,
}

impl FiltrationReport {
    pub fn pbw_holds(&self) -> bool {
        self.pbw_verdict.iter().all(|&b| b)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.pbw_verdict.iter().position(|&b| !b)
    }

    /// Koszul homogeneous part together with (a), (b), (c).
    pub fn hypotheses_hold(&self) -> bool {
        self.koszul == KoszulVerdict::KoszulUpToCap && self.abc.holds()
    }
}

/// Column layout: the block of degree `k` starts at `Σ_{j>k} d^j`, so leading entries sit in the
/// highest degree present.
struct Layout {
    d: usize,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(d: usize, cap: usize) -> Result<Self> {
        let mut offsets = vec![0; cap + 1];
        let mut total = 0usize;
        for k in (0..=cap).rev() {
            offsets[k] = total;
            total = total
                .checked_add(word::word_count(d, k)?)
                .filter(|&t| t <= MAX_WORDS)
                .ok_or_else(|| Error::Capacity(format!("the filtered ambient space up to degree {cap} is too large")))?;
        }
        Ok(Layout { d, offsets, total })
    }

    /// `u ⊗ part ⊗ v` placed in the block of its degree.
    fn place(&self, out: &mut SparseVec, u: usize, lu: usize, part: &SparseVec, k: usize, v: usize, lv: usize) {
        let d = self.d;
        let deg = lu + k + lv;
        let moved = part.map_indices(|w| self.offsets[deg] + word::concat(word::concat(u, w, k, d), v, lv, d));
        let one = match part.iter().next() {
            Some((_, c)) => c.field().one(),
            None => return,
        };
        out.axpy(&one, &moved);
    }
}

/// Ranks of the truncated ideal spans, cumulative in the total degree.
fn ideal_ranks(pres: &NonhomogeneousPresentation, cap: usize) -> Result<Vec<usize>> {
    let (d, big_n) = (pres.d(), pres.n);
    let layout = Layout::new(d, cap)?;
    let mut ech = Echelon::new(pres.field(), layout.total);
    let parts: Vec<Vec<SparseVec>> = (0..pres.relations.dim()).map(|j| pres.relation_parts(j)).collect();
    let mut ranks = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        if n >= big_n {
            let outer = n - big_n;
            for lu in 0..=outer {
                let lv = outer - lu;
                for u in 0..word::pow(d, lu) {
                    for v in 0..word::pow(d, lv) {
                        for rel in &parts {
                            let mut g = SparseVec::new();
                            for (k, part) in rel.iter().enumerate() {
                                layout.place(&mut g, u, lu, part, k, v, lv);
                            }
                            ech.insert(g);
                        }
                    }
                }
            }
        }
        ranks.push(ech.rank());
    }
    Ok(ranks)
}

/// Filtration dimensions against the Hilbert data of the homogeneous part, cross-checked with the
/// sufficient conditions (Koszul homogeneous part and (a), (b), (c)).
pub fn pbw_check(pres: &NonhomogeneousPresentation, cap: usize) -> Result<FiltrationReport> {
    let d = pres.d();
    let work = Workspace::new(&pres.homogeneous_part(), cap)?;
    let ranks = ideal_ranks(pres, cap)?;
    let mut filtration_dims = Vec::with_capacity(cap + 1);
    let mut homogeneous_cumulative = Vec::with_capacity(cap + 1);
    let (mut ambient, mut cumulative) = (0usize, 0usize);
    for n in 0..=cap {
        ambient += word::pow(d, n);
        cumulative += work.alg.dim(n).expect("within cap");
        filtration_dims.push(ambient - ranks[n]);
        homogeneous_cumulative.push(cumulative);
    }
    if let Some(n) = (0..=cap).find(|&n| filtration_dims[n] > homogeneous_cumulative[n]) {
        return Err(Error::Inconsistency(format!(
            "dim F^{n} = {} exceeds the homogeneous bound {}",
            filtration_dims[n], homogeneous_cumulative[n]
        )));
    }
    let gr_dims = (0..=cap)
        .map(|n| filtration_dims[n] - if n == 0 { 0 } else { filtration_dims[n - 1] })
        .collect();
    let pbw_verdict = (0..=cap).map(|n| filtration_dims[n] == homogeneous_cumulative[n]).collect();
    let report = FiltrationReport {
        cap,
        filtration_dims,
        homogeneous_cumulative,
        gr_dims,
        pbw_verdict,
        koszul: is_koszul(&work)?.verdict,
        abc: check_conditions_abc(pres)?,
    };
    if report.hypotheses_hold() && !report.pbw_holds() {
        return Err(Error::Inconsistency(format!(
            "Koszul homogeneous part and (a), (b), (c) hold, yet the filtration drops at degree {}",
            report.first_failure().unwrap_or(0)
        )));
    }
    if cap >= pres.n + 2 && report.pbw_holds() && !report.abc.holds() {
        return Err(Error::Inconsistency("the filtration has full size while (a), (b), (c) fail".into()));
    }
    Ok(report)
}
