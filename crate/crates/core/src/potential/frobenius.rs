//! The automorphisms `σ_w`, `σ^w`, the Frobenius quotient `ℱ(w, N)` and the twisted
//! Hochschild cycle `1 ⊗ w`.

use std::collections::BTreeMap;

use super::algebra::potential_algebra;
use super::form::{apply_to_all, apply_to_slot, check_preregular, rotate_right, Potential, Twist};
use crate::error::{Error, Result};
use crate::exactlin::{word, FieldConfig, Rref, SparseMatrix, SparseVec, TensorSubspace};
use crate::homogeneous::GradedAlgebra;

fn twist_of(w: &Potential) -> Result<Twist> {
    let r = check_preregular(w)?;
    if !r.preregular() {
        return Err(Error::Precondition("the potential is not preregular".into()));
    }
    Ok(r.twist.expect("preregular forms have a twist"))
}

fn subspace_image(s: &TensorSubspace, mat: &SparseMatrix) -> Vec<SparseVec> {
    s.basis().iter().map(|v| apply_to_all(v, s.degree(), s.d(), mat)).collect()
}

/// Matrix of the automorphism of `alg` induced by `M` on generators, in degree `n`.
fn induced(alg: &GradedAlgebra, n: usize, mat: &SparseMatrix) -> SparseMatrix {
    let dim = alg.dim(n).expect("within cap");
    let cols: Vec<SparseVec> = alg
        .normal_words(n)
        .iter()
        .map(|&u| {
            let t = apply_to_all(&SparseVec::unit(u, alg.field()), n, alg.d(), mat);
            alg.nf_tensor(&t, n)
        })
        .collect();
    SparseMatrix::from_columns(alg.field(), dim, &cols)
}

#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub twist: Twist,
    /// `σ_w` on `A^!_n`, columns indexed by the normal basis.
    pub sigma_dual: Vec<SparseMatrix>,
    /// `σ^w` on `A_n`.
    pub sigma: Vec<SparseMatrix>,
}

/// `σ_w` on `A^!` (induced by `Q_w`) and `σ^w` on `A` (induced by `Q_w^t`) up to `cap`.
pub fn automorphisms(w: &Potential, big_n: usize, cap: usize) -> Result<Automorphisms> {
    let twist = twist_of(w)?;
    let pres = potential_algebra(w, big_n)?;
    let dual = pres.koszul_dual();
    let (q, qt) = (&twist.q, twist.transpose());
    if subspace_image(&pres.relations, &qt).iter().any(|v| !pres.relations.contains(v)) {
        return Err(Error::Inconsistency("Q^t does not preserve the relations".into()));
    }
    if subspace_image(&dual.relations, q).iter().any(|v| !dual.relations.contains(v)) {
        return Err(Error::Inconsistency("Q does not preserve the dual relations".into()));
    }
    let alg = GradedAlgebra::new(&pres, cap)?;
    let dual_alg = GradedAlgebra::new(&dual, cap)?;
    Ok(Automorphisms {
        sigma_dual: (0..=cap).map(|n| induced(&dual_alg, n, q)).collect(),
        sigma: (0..=cap).map(|n| induced(&alg, n, &qt)).collect(),
        twist,
    })
}

#[derive(Clone, Debug)]
pub struct FrobeniusQuotient {
    pub field: FieldConfig,
    /// `dim A^!_n` for `0 ≤ n ≤ m`.
    pub dual_dims: Vec<usize>,
    /// `dim ℱ_n(w, N)`.
    pub dims: Vec<usize>,
    /// `pairings[n][i][j] = ω_w(b_i b_j)` for `b_i ∈ A^!_{m−n}`, `b_j ∈ A^!_n`.
    pub pairings: Vec<SparseMatrix>,
    /// `ω_w` on the normal basis of `A^!_m`.
    pub omega: SparseVec,
    /// `ω_w(xy) = ω_w(σ_w(y) x)` on all basis pairs.
    pub modular_holds: bool,
    /// The left radical in degree `m − n` equals the right radical `ℐ_{m−n}` for all `n`.
    pub nondegenerate: bool,
}

impl FrobeniusQuotient {
    /// The graded Frobenius criterion on the quotient: one-dimensional top, nondegenerate pairing.
    pub fn is_graded_frobenius(&self) -> bool {
        self.dims.last() == Some(&1) && self.nondegenerate
    }
}

pub fn frobenius_quotient(w: &Potential, big_n: usize) -> Result<FrobeniusQuotient> {
    let m = w.m;
    let auto = automorphisms(w, big_n, m)?;
    let pres = potential_algebra(w, big_n)?;
    let dual = GradedAlgebra::new(&pres.koszul_dual(), m)?;
    let field = w.field();
    let omega = SparseVec::from_pairs(
        dual.normal_words(m)
            .iter()
            .enumerate()
            .filter_map(|(i, &u)| w.coeffs.get(u).map(|c| (i, c.clone())))
            .collect(),
    );
    let dims_a: Vec<usize> = (0..=m).map(|n| dual.dim(n).unwrap()).collect();
    let mut pairings = Vec::with_capacity(m + 1);
    let mut modular_holds = true;
    for n in 0..=m {
        let k = m - n;
        let mut rows = Vec::with_capacity(dims_a[k]);
        for i in 0..dims_a[k] {
            let x = SparseVec::unit(i, field);
            let mut row = Vec::new();
            for j in 0..dims_a[n] {
                let y = SparseVec::unit(j, field);
                let lhs = omega.dot(&dual.mul(k, &x, n, &y)?, field);
                let sy = auto.sigma_dual[n].apply(&y);
                let rhs = omega.dot(&dual.mul(n, &sy, k, &x)?, field);
                if lhs != rhs {
                    modular_holds = false;
                }
                row.push((j, lhs));
            }
            rows.push(SparseVec::from_pairs(row));
        }
        pairings.push(SparseMatrix::from_rows(field, dims_a[n], rows));
    }
    let dims: Vec<usize> = pairings.iter().map(|p| p.rank()).collect();
    let mut nondegenerate = true;
    for n in 0..=m {
        let k = m - n;
        let left = Rref::from_rows(field, dims_a[k], pairings[n].left_kernel());
        let right = Rref::from_rows(field, dims_a[k], pairings[k].kernel());
        if left.rows != right.rows {
            nondegenerate = false;
        }
    }
    Ok(FrobeniusQuotient {
        field,
        dual_dims: dims_a,
        dims,
        pairings,
        omega,
        modular_holds,
        nondegenerate,
    })
}

/// Whether the Hochschild boundary of `1 ⊗ w`, with coefficients in `^wA`, vanishes. Here `a ∈ A_n`
/// acts on the left of `^wA` by `(−1)^{(m−1)n} (σ^w)^{−1}(a)`.
pub fn hochschild_cycle_check(w: &Potential, big_n: usize) -> Result<bool> {
    if big_n != 2 {
        return Err(Error::Precondition("the Hochschild cycle is defined for N = 2".into()));
    }
    let twist = twist_of(w)?;
    let pres = potential_algebra(w, 2)?;
    let alg = GradedAlgebra::new(&pres, 2)?;
    let (d, m) = (w.d(), w.m);
    let field = w.field();
    let s_inv = twist
        .transpose()
        .inverse()
        .ok_or_else(|| Error::Inconsistency("singular twist".into()))?;
    // b(1 ⊗ a_1 ⊗ … ⊗ a_m): the outer terms land in A_1 ⊗ A_1^{⊗(m−1)}; with n = 1 the twist sign
    // (−1)^{m−1} and the face sign (−1)^m multiply to −1
    let last = apply_to_slot(&rotate_right(&w.coeffs, m, d), m, d, 0, &s_inv);
    if !w.coeffs.sub(&last, field).is_zero() {
        return Ok(false);
    }
    // inner faces a_i a_{i+1}, one component per position, coefficients in A_2
    for i in 0..m - 1 {
        let mut acc: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (idx, c) in w.coeffs.iter() {
            let (head, rest) = word::split(*idx, i, m, d);
            let (pair, tail) = word::split(rest, 2, m - i, d);
            acc.entry((head, tail)).or_default().axpy(c, &alg.nf_word(pair, 2));
        }
        if acc.values().any(|v| !v.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}
