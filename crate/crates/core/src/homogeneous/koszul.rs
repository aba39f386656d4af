//! Koszul complexes of a presentation and the Koszulity and AS-Gorenstein verdicts.

use super::algebra::{dual_components, GradedAlgebra};
use super::complex::{self, nu, FreeComplex, HomologyReport, Side, SlotSpaces};
use super::presentation::HomogeneousPresentation;
use crate::error::{Error, Result};
use crate::exactlin::TensorSubspace;

/// Bimodule cross-checks stop at this internal degree: their components grow quadratically.
pub const BIMODULE_CAP: usize = 6;

/// A presentation with its graded components and dual coalgebra components up to `cap`.
#[derive(Debug)]
pub struct Workspace {
    pub pres: HomogeneousPresentation,
    pub alg: GradedAlgebra,
    pub coalgebra: Vec<TensorSubspace>,
    pub cap: usize,
}

impl Workspace {
    pub fn new(pres: &HomogeneousPresentation, cap: usize) -> Result<Self> {
        let alg = GradedAlgebra::new(pres, cap)?;
        let coalgebra = dual_components(pres, cap)?;
        Ok(Workspace {
            pres: pres.clone(),
            alg,
            coalgebra,
            cap,
        })
    }

    pub fn big_n(&self) -> usize {
        self.pres.n
    }

    fn spaces(&self) -> SlotSpaces<'_> {
        SlotSpaces {
            spaces: &self.coalgebra,
            tail_zero: false,
        }
    }

    /// `K(A)`: `A ⊗ A^{!*}_n` with `d(a ⊗ e_0 e_1 … e_n) = a e_0 ⊗ e_1 … e_n`.
    pub fn koszul_n_complex(&self) -> Result<FreeComplex> {
        complex::n_complex(&self.alg, self.spaces(), Side::Left, self.cap)
    }

    /// `K′(A)`: `A^{!*}_n ⊗ A` peeling the last letter to the right.
    pub fn right_n_complex(&self) -> Result<FreeComplex> {
        complex::n_complex(&self.alg, self.spaces(), Side::Right, self.cap)
    }

    /// `𝒦(A, 𝕂)`.
    pub fn contraction_left(&self) -> Result<FreeComplex> {
        complex::contraction(&self.alg, self.spaces(), Side::Left, self.big_n(), self.cap)
    }

    /// `𝒦(A, A)` up to internal degree `cap` (at most the workspace cap).
    pub fn contraction_bimodule(&self, cap: usize) -> Result<FreeComplex> {
        complex::contraction_bimodule(&self.alg, &self.coalgebra, self.big_n(), cap.min(self.cap))
    }

    /// Dimensions of the generator spaces `E_n = A^{!*}_{ν(n)}` known within the cap.
    pub fn koszul_betti(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while nu(self.big_n(), i) <= self.cap {
            out.push(self.coalgebra[nu(self.big_n(), i)].dim());
            i += 1;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoszulVerdict {
    KoszulUpToCap,
    /// First nonvanishing homology, as (homological degree, internal degree).
    FailsAt { i: usize, k: i64 },
}

#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub cap: usize,
    pub verdict: KoszulVerdict,
    pub homology: HomologyReport,
    /// Degree up to which the bimodule complex was compared.
    pub bimodule_cap: usize,
    pub bimodule_verdict: KoszulVerdict,
    /// Left and bimodule verdicts agree on the common range.
    pub agrees: bool,
}

fn first_failure(h: &HomologyReport, max_k: i64) -> KoszulVerdict {
    h.nonzero()
        .filter(|((i, k), _)| *i >= 1 && *k <= max_k)
        .map(|((i, k), _)| (*k, *i))
        .min()
        .map_or(KoszulVerdict::KoszulUpToCap, |(k, i)| KoszulVerdict::FailsAt { i, k })
}

/// Bimodule acyclicity: `H_i(𝒦(A,A)) = 0` for `i ≥ 1` and `H_0 = A` degreewise.
fn bimodule_verdict(ws: &Workspace, cap: usize) -> Result<KoszulVerdict> {
    let c = ws.contraction_bimodule(cap)?;
    let h = c.homology();
    let mut fail = match first_failure(&h, cap as i64) {
        KoszulVerdict::FailsAt { i, k } => Some((k, i)),
        KoszulVerdict::KoszulUpToCap => None,
    };
    for k in 0..=cap {
        if let Some(h0) = h.get(0, k as i64) {
            if Some(h0) != ws.alg.dim(k) {
                fail = Some(fail.map_or((k as i64, 0), |f| f.min((k as i64, 0))));
            }
        }
    }
    Ok(fail.map_or(KoszulVerdict::KoszulUpToCap, |(k, i)| KoszulVerdict::FailsAt { i, k }))
}

pub fn is_koszul(ws: &Workspace) -> Result<KoszulReport> {
    let c = ws.contraction_left()?;
    let homology = c.homology();
    let verdict = first_failure(&homology, ws.cap as i64);
    let bimodule_cap = ws.cap.min(BIMODULE_CAP);
    let bimodule_verdict = bimodule_verdict(ws, bimodule_cap)?;
    let left_short = first_failure(&homology, bimodule_cap as i64);
    let agrees = matches!(
        (&left_short, &bimodule_verdict),
        (KoszulVerdict::KoszulUpToCap, KoszulVerdict::KoszulUpToCap) | (KoszulVerdict::FailsAt { .. }, KoszulVerdict::FailsAt { .. })
    );
    Ok(KoszulReport {
        cap: ws.cap,
        verdict,
        homology,
        bimodule_cap,
        bimodule_verdict,
        agrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    /// `Ext^D(𝕂, A)` is one-dimensional, sitting in internal degree `shift`.
    GorensteinUpToCap { d: usize, shift: i64 },
    Fails { reason: String },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug)]
pub struct GorensteinReport {
    pub cap: usize,
    pub verdict: GorensteinVerdict,
    pub betti: Vec<usize>,
    pub global_dimension: Option<usize>,
    /// Cohomology of `Hom_A(𝒦(A,𝕂), A)`.
    pub cohomology: HomologyReport,
}

/// Global dimension read off the Betti numbers: the last nonzero `E_D`, provided `E_{D+1} = 0`
/// is itself inside the computed window.
pub fn detect_global_dimension(betti: &[usize]) -> Option<usize> {
    let first_zero = betti.iter().position(|&b| b == 0)?;
    first_zero.checked_sub(1)
}

pub fn gorenstein_check(ws: &Workspace) -> Result<GorensteinReport> {
    let k = is_koszul(ws)?;
    if let KoszulVerdict::FailsAt { i, k } = k.verdict {
        return Err(Error::Precondition(format!(
            "algebra is not Koszul (homology in degree {i}, internal degree {k})"
        )));
    }
    let betti = ws.koszul_betti();
    let global_dimension = detect_global_dimension(&betti);
    let c = ws.contraction_left()?;
    let dual = complex::dualize(&ws.alg, &c)?;
    let cohomology = dual.homology();
    let nonzero: Vec<(usize, i64, usize)> = cohomology.nonzero().map(|((i, k), v)| (*i, *k, *v)).collect();
    let verdict = match global_dimension {
        None => {
            let lower = betti.iter().rposition(|&b| b > 0).unwrap_or(0);
            match nonzero.iter().find(|(i, _, _)| *i < lower) {
                Some((i, kk, v)) => GorensteinVerdict::Fails {
                    reason: format!(
                        "Ext^{i}(k, A) has dimension {v} in internal degree {kk} while the global dimension is at least {lower}"
                    ),
                },
                None => GorensteinVerdict::Inconclusive {
                    reason: format!("no finite global dimension visible up to degree {}", ws.cap),
                },
            }
        }
        Some(d) => {
            if let Some((i, kk, v)) = nonzero.iter().find(|(i, _, _)| *i != d) {
                GorensteinVerdict::Fails {
                    reason: format!("Ext^{i}(k, A) has dimension {v} in internal degree {kk}, expected 0"),
                }
            } else {
                let top: usize = cohomology.total(d);
                let asym = (0..=d).find(|&n| betti[n] != betti[d - n]);
                if top != 1 {
                    GorensteinVerdict::Fails {
                        reason: format!("Ext^{d}(k, A) has total dimension {top}, expected 1"),
                    }
                } else if let Some(n) = asym {
                    GorensteinVerdict::Fails {
                        reason: format!("dim E_{n} = {} differs from dim E_{} = {}", betti[n], d - n, betti[d - n]),
                    }
                } else {
                    let shift = nonzero.iter().find(|(i, _, _)| *i == d).map(|x| x.1).unwrap_or(0);
                    GorensteinVerdict::GorensteinUpToCap { d, shift }
                }
            }
        }
    };
    Ok(GorensteinReport {
        cap: ws.cap,
        verdict,
        betti,
        global_dimension,
        cohomology,
    })
}
