//! Minimal free resolution of the trivial module, by syzygy extraction degree by degree.
//!
//! `P_n = A ⊗ E_n`. At each internal degree the cycles of `P_n` are compared with the part
//! generated from lower degrees (`E · Z_{t−1}`, enough since `A` is generated in degree 1); a
//! deglex-greedy complement gives the new generators of `E_{n+1}`.

use std::collections::BTreeMap;

use super::algebra::GradedAlgebra;
use super::complex::nu;
use crate::error::Result;
use crate::exactlin::{Echelon, SparseMatrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiData {
    pub cap: usize,
    /// `dims[n][t]`: generators of `E_n` in internal degree `t ≤ cap`.
    pub graded: Vec<Vec<usize>>,
    /// Total `dim E_n` over internal degrees `≤ cap`.
    pub dims: Vec<usize>,
    pub global_dimension_up_to_cap: Option<usize>,
}

struct FreeModule {
    /// Generator degrees, sorted.
    gens: Vec<usize>,
}

impl FreeModule {
    /// Block offsets of the degree-`t` component, one per generator (`None` when empty).
    fn layout(&self, alg: &GradedAlgebra, t: usize) -> (Vec<Option<usize>>, usize) {
        let mut off = 0;
        let mut out = Vec::with_capacity(self.gens.len());
        for &g in &self.gens {
            if g <= t {
                out.push(Some(off));
                off += alg.dim(t - g).unwrap_or(0);
            } else {
                out.push(None);
            }
        }
        (out, off)
    }

    /// `x_a · v` for `v` in the degree-`t` component.
    fn left_letter(&self, alg: &GradedAlgebra, a: usize, t: usize, v: &SparseVec) -> SparseVec {
        let (src, _) = self.layout(alg, t);
        let (dst, _) = self.layout(alg, t + 1);
        let mut out = Vec::new();
        for (e, &g) in self.gens.iter().enumerate() {
            let Some(so) = src[e] else { continue };
            let len = alg.dim(t - g).unwrap_or(0);
            let block: Vec<_> = v
                .iter()
                .filter(|(i, _)| *i >= so && *i < so + len)
                .map(|(i, c)| (i - so, c.clone()))
                .collect();
            if block.is_empty() {
                continue;
            }
            let prod = alg.left_mul_letter(a, t - g, &SparseVec::from_pairs(block));
            let d0 = dst[e].unwrap();
            out.extend(prod.iter().map(|(i, c)| (i + d0, c.clone())));
        }
        SparseVec::from_pairs(out)
    }
}

pub fn minimal_resolution(alg: &GradedAlgebra) -> Result<BettiData> {
    let cap = alg.cap();
    let d = alg.d();
    let field = alg.field();
    // differential of the current module: degree → matrix P_n,t → P_{n−1},t
    let mut module = FreeModule { gens: vec![0] };
    let mut boundary: BTreeMap<usize, SparseMatrix> = BTreeMap::new();
    let mut graded: Vec<Vec<usize>> = vec![{
        let mut v = vec![0; cap + 1];
        v[0] = 1;
        v
    }];
    for n in 0..=cap {
        let mut new_gens: Vec<usize> = Vec::new();
        let mut images: Vec<SparseVec> = Vec::new();
        let mut prev_cycles: Vec<SparseVec> = Vec::new();
        for t in 0..=cap {
            let (_, size) = module.layout(alg, t);
            let cycles: Vec<SparseVec> = if n == 0 {
                // kernel of the augmentation A → 𝕂
                if t == 0 { vec![] } else { (0..size).map(|i| SparseVec::unit(i, field)).collect() }
            } else {
                match boundary.get(&t) {
                    Some(m) => crate::exactlin::Rref::from_rows(field, size, m.kernel()).rows,
                    None => (0..size).map(|i| SparseVec::unit(i, field)).collect(),
                }
            };
            let mut ech = Echelon::new(field, size);
            if t > 0 {
                for z in &prev_cycles {
                    for a in 0..d {
                        ech.insert(module.left_letter(alg, a, t - 1, z));
                    }
                }
            }
            for z in &cycles {
                if ech.insert(z.clone()).is_some() {
                    new_gens.push(t);
                    images.push(z.clone());
                }
            }
            prev_cycles = cycles;
        }
        let mut counts = vec![0; cap + 1];
        for &g in &new_gens {
            counts[g] += 1;
        }
        if new_gens.is_empty() {
            graded.push(counts);
            break;
        }
        graded.push(counts);
        // boundary of P_{n+1}: β ⊗ e ↦ β · z_e
        let next = FreeModule { gens: new_gens };
        let mut next_boundary = BTreeMap::new();
        for t in 0..=cap {
            let (layout, size) = next.layout(alg, t);
            let (_, tgt) = module.layout(alg, t);
            if size == 0 {
                continue;
            }
            let mut cols = vec![SparseVec::new(); size];
            for (e, &g) in next.gens.iter().enumerate() {
                let Some(off) = layout[e] else { continue };
                for beta in 0..alg.dim(t - g).unwrap_or(0) {
                    let letters = alg.basis_letters(t - g, beta);
                    let mut v = images[e].clone();
                    let mut deg = g;
                    for &a in letters.iter().rev() {
                        v = module.left_letter(alg, a, deg, &v);
                        deg += 1;
                    }
                    cols[off + beta] = v;
                }
            }
            next_boundary.insert(t, SparseMatrix::from_columns(field, tgt, &cols));
        }
        module = next;
        boundary = next_boundary;
    }
    let dims: Vec<usize> = graded.iter().map(|g| g.iter().sum()).collect();
    let big_n = alg.presentation().n;
    let global_dimension_up_to_cap = dims
        .iter()
        .position(|&x| x == 0)
        .filter(|&z| nu(big_n, z) <= cap)
        .and_then(|z| z.checked_sub(1));
    Ok(BettiData {
        cap,
        graded,
        dims,
        global_dimension_up_to_cap,
    })
}

/// The generator degrees expected from the Koszul complex: `E_n` sits in degree `ν_N(n)`.
pub fn koszul_generator_degree(big_n: usize, n: usize) -> usize {
    nu(big_n, n)
}
