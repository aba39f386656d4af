//! The Yoneda algebra `E(A)` of an N-Koszul algebra: `E_i = A^!_{ν(i)}` with `m_2` and `m_N`.

use super::algebra::GradedAlgebra;
use super::complex::nu;
use super::koszul::{is_koszul, KoszulVerdict, Workspace};
use crate::error::{Error, Result};
use crate::exactlin::{SparseMatrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YonedaElement {
    /// Homological degree.
    pub degree: usize,
    /// Coordinates in the normal-word basis of `A^!_{ν(degree)}`.
    pub coords: SparseVec,
}

#[derive(Debug)]
pub struct YonedaAlgebra {
    pub big_n: usize,
    pub dual: GradedAlgebra,
    pub cap: usize,
}

impl YonedaAlgebra {
    pub fn new(ws: &Workspace) -> Result<Self> {
        if let KoszulVerdict::FailsAt { i, k } = is_koszul(ws)?.verdict {
            return Err(Error::Precondition(format!(
                "Yoneda products need a Koszul algebra; homology found in degree {i}, internal degree {k}"
            )));
        }
        let dual = GradedAlgebra::new(&ws.pres.koszul_dual(), ws.cap)?;
        Ok(YonedaAlgebra {
            big_n: ws.pres.n,
            dual,
            cap: ws.cap,
        })
    }

    /// `dim E_i`, when `ν(i)` is within the cap.
    pub fn dim(&self, i: usize) -> Option<usize> {
        self.dual.dim(nu(self.big_n, i))
    }

    /// Largest homological degree with `ν(i) ≤ cap`.
    pub fn max_degree(&self) -> usize {
        let mut i = 0;
        while nu(self.big_n, i + 1) <= self.cap {
            i += 1;
        }
        i
    }

    pub fn element(&self, degree: usize, coords: SparseVec) -> Result<YonedaElement> {
        let dim = self
            .dim(degree)
            .ok_or_else(|| Error::Capacity(format!("E_{degree} lies above the degree cap")))?;
        if coords.max_index().is_some_and(|m| m >= dim) {
            return Err(Error::DimensionMismatch(format!("E_{degree} has dimension {dim}")));
        }
        Ok(YonedaElement { degree, coords })
    }

    pub fn unit(&self) -> YonedaElement {
        YonedaElement {
            degree: 0,
            coords: SparseVec::unit(0, self.dual.field()),
        }
    }

    pub fn m2(&self, x: &YonedaElement, y: &YonedaElement) -> Result<YonedaElement> {
        let degree = x.degree + y.degree;
        if self.big_n > 2 && x.degree % 2 == 1 && y.degree % 2 == 1 {
            return Ok(YonedaElement {
                degree,
                coords: SparseVec::new(),
            });
        }
        let coords = self
            .dual
            .mul(nu(self.big_n, x.degree), &x.coords, nu(self.big_n, y.degree), &y.coords)?;
        Ok(YonedaElement { degree, coords })
    }

    /// `m_N(x_1, …, x_N)`: the product in `A^!` when every argument is odd, zero otherwise.
    /// For `N = 2` there are no higher products and this returns `None`.
    pub fn m_n(&self, xs: &[YonedaElement]) -> Result<Option<YonedaElement>> {
        if self.big_n == 2 {
            return Ok(None);
        }
        if xs.len() != self.big_n {
            return Err(Error::DimensionMismatch(format!("m_N takes {} arguments", self.big_n)));
        }
        let total: usize = xs.iter().map(|x| x.degree).sum();
        let degree = total + 2 - self.big_n;
        if xs.iter().any(|x| x.degree % 2 == 0) {
            return Ok(Some(YonedaElement {
                degree,
                coords: SparseVec::new(),
            }));
        }
        let mut acc = xs[0].coords.clone();
        let mut deg = nu(self.big_n, xs[0].degree);
        for x in &xs[1..] {
            let dx = nu(self.big_n, x.degree);
            acc = self.dual.mul(deg, &acc, dx, &x.coords)?;
            deg += dx;
        }
        Ok(Some(YonedaElement { degree, coords: acc }))
    }

    /// Frobenius test on `(E(A), m_2)`.
    pub fn frobenius(&self) -> Result<FrobeniusVerdict> {
        let top = self.max_degree();
        let dims: Vec<usize> = (0..=top).map(|i| self.dim(i).unwrap()).collect();
        let f = self.dual.field();
        graded_frobenius_test(&dims, |i, a, j, b| {
            let x = YonedaElement {
                degree: i,
                coords: SparseVec::unit(a, f),
            };
            let y = YonedaElement {
                degree: j,
                coords: SparseVec::unit(b, f),
            };
            Ok(self.m2(&x, &y)?.coords)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusVerdict {
    Frobenius { top: usize },
    NotFrobenius { reason: String },
}

/// Frobenius criterion for a finite-dimensional graded connected algebra: the top component is
/// one-dimensional and `(x, y) ↦ (xy)_top` is nondegenerate. `dims` lists the known components;
/// the algebra counts as finite only if a zero component is visible.
pub fn graded_frobenius_test(
    dims: &[usize],
    mul: impl Fn(usize, usize, usize, usize) -> Result<SparseVec>,
) -> Result<FrobeniusVerdict> {
    let Some(first_zero) = dims.iter().position(|&x| x == 0) else {
        return Ok(FrobeniusVerdict::NotFrobenius {
            reason: format!("no vanishing component up to degree {}", dims.len().saturating_sub(1)),
        });
    };
    if first_zero == 0 {
        return Ok(FrobeniusVerdict::NotFrobenius {
            reason: "zero algebra".into(),
        });
    }
    let top = first_zero - 1;
    if dims[top] != 1 {
        return Ok(FrobeniusVerdict::NotFrobenius {
            reason: format!("top component in degree {top} has dimension {}", dims[top]),
        });
    }
    for i in 0..=top {
        let j = top - i;
        if dims[i] != dims[j] {
            return Ok(FrobeniusVerdict::NotFrobenius {
                reason: format!("dimensions {} and {} in degrees {i} and {j} differ", dims[i], dims[j]),
            });
        }
        let mut rows = Vec::with_capacity(dims[i]);
        for a in 0..dims[i] {
            let mut row = Vec::new();
            for b in 0..dims[j] {
                if let Some(c) = mul(i, a, j, b)?.get(0) {
                    row.push((b, c.clone()));
                }
            }
            rows.push(SparseVec::from_pairs(row));
        }
        let field = match rows.iter().flat_map(|r| r.iter()).next() {
            Some((_, c)) => c.field(),
            None => {
                return Ok(FrobeniusVerdict::NotFrobenius {
                    reason: format!("pairing of degrees {i} and {j} vanishes"),
                })
            }
        };
        let rank = SparseMatrix::from_rows(field, dims[j], rows).rank();
        if rank != dims[i] {
            return Ok(FrobeniusVerdict::NotFrobenius {
                reason: format!("pairing of degrees {i} and {j} has rank {rank} < {}", dims[i]),
            });
        }
    }
    Ok(FrobeniusVerdict::Frobenius { top })
}
