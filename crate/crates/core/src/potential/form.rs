//! Multilinear forms `w ∈ E^{⊗m}`: 1-site nondegeneracy, twisted cyclicity and `π_Q`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::word;
use crate::exactlin::{FieldConfig, Scalar, SparseMatrix, SparseVec};

/// `w = Σ w_{λ_1…λ_m} x^{λ_1} ⊗ … ⊗ x^{λ_m}`, coefficients indexed by word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    pub generators: Vec<String>,
    pub m: usize,
    pub coeffs: SparseVec,
    field: FieldConfig,
}

impl Potential {
    pub fn new(generators: Vec<String>, m: usize, coeffs: SparseVec) -> Result<Self> {
        let d = generators.len();
        if d == 0 || m == 0 {
            return Err(Error::Precondition("a potential needs d ≥ 1 and m ≥ 1".into()));
        }
        let size = word::word_count(d, m)?;
        let Some((_, c)) = coeffs.leading() else {
            return Err(Error::Precondition("the zero potential is not allowed".into()));
        };
        let field = c.field();
        if coeffs.max_index().is_some_and(|i| i >= size) {
            return Err(Error::DimensionMismatch(format!("coefficient outside E^{m}")));
        }
        Ok(Potential {
            generators,
            m,
            coeffs,
            field,
        })
    }

    pub fn d(&self) -> usize {
        self.generators.len()
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn coeff(&self, letters: &[usize]) -> Scalar {
        self.coeffs
            .get(word::index(letters, self.d()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn render(&self) -> String {
        crate::homogeneous::presentation::render_poly(&self.coeffs, |i| word::render(i, self.m, &self.generators))
    }

    fn with_coeffs(&self, coeffs: SparseVec) -> Potential {
        Potential {
            generators: self.generators.clone(),
            m: self.m,
            coeffs,
            field: self.field,
        }
    }
}

/// Twisting element `Q ∈ GL(E*)` in the dual basis `θ_λ`: `Q θ_ν = Σ_μ Q[μ][ν] θ_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub q: SparseMatrix,
}

impl Twist {
    /// `Q^t ∈ GL(E)`: `x^μ ↦ Σ_ν Q[μ][ν] x^ν`.
    pub fn transpose(&self) -> SparseMatrix {
        self.q.transpose()
    }

    pub fn is_identity(&self) -> bool {
        self.q == SparseMatrix::identity(self.q.field, self.q.nrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreregularityReport {
    pub one_site: Vec<bool>,
    pub twist: Option<Twist>,
    pub q_invariant: bool,
}

impl PreregularityReport {
    pub fn preregular(&self) -> bool {
        self.one_site.iter().all(|&b| b) && self.twist.is_some()
    }
}

/// Applies `M` to the tensor factor at `slot`: `t ↦ (1 ⊗ … ⊗ M ⊗ … ⊗ 1) t`.
pub fn apply_to_slot(t: &SparseVec, m: usize, d: usize, slot: usize, mat: &SparseMatrix) -> SparseVec {
    let cols = mat.transpose().rows;
    let stride = word::pow(d, m - 1 - slot);
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (idx, c) in t.iter() {
        let mu = (idx / stride) % d;
        let base = idx - mu * stride;
        for (nu, a) in cols[mu].iter() {
            let k = base + nu * stride;
            let v = c * a;
            match acc.get_mut(&k) {
                Some(e) => *e = &*e + &v,
                None => {
                    acc.insert(k, v);
                }
            }
        }
    }
    SparseVec::from_pairs(acc.into_iter().collect())
}

/// `M^{⊗m} t`.
pub fn apply_to_all(t: &SparseVec, m: usize, d: usize, mat: &SparseMatrix) -> SparseVec {
    (0..m).fold(t.clone(), |acc, s| apply_to_slot(&acc, m, d, s, mat))
}

/// Moves the last tensor factor to the front.
pub fn rotate_right(t: &SparseVec, m: usize, d: usize) -> SparseVec {
    t.map_indices(|i| {
        let (rest, a) = (i / d, i % d);
        a * word::pow(d, m - 1) + rest
    })
    .sorted()
}

trait Sorted {
    fn sorted(self) -> SparseVec;
}

impl Sorted for SparseVec {
    fn sorted(self) -> SparseVec {
        SparseVec::from_pairs(self.entries().to_vec())
    }
}

/// Per slot `k`, whether `X ↦ w(…, X, …)` (with `X` in slot `k`) is injective.
pub fn check_one_site(w: &Potential) -> Vec<bool> {
    let (d, m) = (w.d(), w.m);
    (0..m)
        .map(|k| {
            let stride = word::pow(d, m - 1 - k);
            // row λ: the coefficients with λ in slot k, indexed by the remaining word
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
            for (idx, c) in w.coeffs.iter() {
                let lam = (idx / stride) % d;
                let rest = (idx / (stride * d)) * stride + idx % stride;
                rows[lam].push((rest, c.clone()));
            }
            let rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_pairs).collect();
            SparseMatrix::from_rows(w.field, word::pow(d, m - 1), rows).rank() == d
        })
        .collect()
}

/// Whether `w(X_0, …, X_{m−1}) = w(Q X_{m−1}, X_0, …, X_{m−2})` for all arguments.
pub fn is_twisted_cyclic(w: &Potential, q: &SparseMatrix) -> bool {
    let (d, m) = (w.d(), w.m);
    // coefficient form: w[λ, ν] = Σ_μ Q[μ][ν] w[μ, λ]
    let moved = apply_to_slot(&w.coeffs, m, d, 0, &q.transpose());
    let back = moved.map_indices(|i| word::rotate_left(i, m, d)).sorted();
    back == w.coeffs
}

/// Whether `w(X_0, …) = w(Q X_0, …, Q X_{m−1})`.
pub fn is_q_invariant(w: &Potential, q: &SparseMatrix) -> bool {
    apply_to_all(&w.coeffs, w.m, w.d(), &q.transpose()) == w.coeffs
}

/// Solves for the twisting element. `Ok(None)` when no invertible solution exists.
pub fn solve_twist(w: &Potential) -> Result<Option<Twist>> {
    let (d, m) = (w.d(), w.m);
    let field = w.field;
    let tail = word::pow(d, m - 1);
    // unknown Q[μ][ν] at column μ·d + ν; equation (L, ν): Σ_μ Q[μ][ν] w[μ L] = w[L ν]
    let mut rows = vec![Vec::new(); tail * d];
    for (idx, c) in w.coeffs.iter() {
        let (mu, l) = word::split(*idx, 1, m, d);
        for nu in 0..d {
            rows[l * d + nu].push((mu * d + nu, c.clone()));
        }
    }
    let a = SparseMatrix::from_rows(field, d * d, rows.into_iter().map(SparseVec::from_pairs).collect());
    let Some(x) = a.solve(&w.coeffs) else {
        return Ok(None);
    };
    let one_site = check_one_site(w).iter().all(|&b| b);
    if one_site && !a.kernel().is_empty() {
        return Err(Error::Inconsistency(
            "twist equations of a 1-site nondegenerate form have several solutions".into(),
        ));
    }
    let mut qrows = vec![Vec::new(); d];
    for (i, c) in x.iter() {
        qrows[i / d].push((i % d, c.clone()));
    }
    let q = SparseMatrix::from_rows(field, d, qrows.into_iter().map(SparseVec::from_pairs).collect());
    if q.determinant().is_zero() {
        return Ok(None);
    }
    Ok(Some(Twist { q }))
}

pub fn check_preregular(w: &Potential) -> Result<PreregularityReport> {
    let one_site = check_one_site(w);
    let twist = solve_twist(w)?;
    let q_invariant = match &twist {
        Some(t) => {
            let ok = is_q_invariant(w, &t.q);
            if !ok {
                return Err(Error::Inconsistency("a solved twist does not leave w invariant".into()));
            }
            ok
        }
        None => false,
    };
    Ok(PreregularityReport {
        one_site,
        twist,
        q_invariant,
    })
}

/// `π_Q(w)(X_1, …, X_m) = (1/m) Σ_k w(Q X_k, …, Q X_m, X_1, …, X_{k−1})`.
pub fn pi_q(w: &Potential, q: &SparseMatrix) -> Result<Potential> {
    let (d, m) = (w.d(), w.m);
    let inv_m = w
        .field
        .invertible_integer(m as i64)
        .map_err(|_| Error::Arithmetic(format!("m = {m} vanishes in the field {}", w.field.label())))?
        .inv()
        .expect("nonzero");
    if !is_q_invariant(w, q) {
        return Err(Error::Precondition("π_Q needs a Q-invariant form".into()));
    }
    let qt = q.transpose();
    let mut acc = SparseVec::new();
    for k in 1..=m {
        // Q on the first m − k + 1 slots, then the last k − 1 slots move to the front
        let mut t = w.coeffs.clone();
        for s in 0..=(m - k) {
            t = apply_to_slot(&t, m, d, s, &qt);
        }
        for _ in 0..(k - 1) {
            t = rotate_right(&t, m, d);
        }
        acc.axpy(&w.field.one(), &t);
    }
    acc.scale(&inv_m);
    if acc.is_zero() {
        return Err(Error::Precondition("π_Q(w) vanishes".into()));
    }
    Ok(w.with_coeffs(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn form(d: usize, m: usize, terms: &[(&[usize], i64)]) -> Potential {
        let f = FieldConfig::Rational;
        let pairs = terms.iter().map(|(w, c)| (word::index(w, d), f.from_i64(*c))).collect();
        let gens = (0..d).map(|i| format!("x{i}")).collect();
        Potential::new(gens, m, SparseVec::from_pairs(pairs)).unwrap()
    }

    #[test]
    fn antisymmetric_twist_is_minus_identity() {
        let w = form(2, 2, &[(&[0, 1], 1), (&[1, 0], -1)]);
        let t = solve_twist(&w).unwrap().unwrap();
        let f = FieldConfig::Rational;
        assert_eq!(t.q, SparseMatrix::identity(f, 2).scaled(&f.from_i64(-1)));
    }

    #[test]
    fn quantum_plane_twist() {
        // w = x y − 2 y x
        let w = form(2, 2, &[(&[0, 1], 1), (&[1, 0], -2)]);
        let t = solve_twist(&w).unwrap().unwrap();
        let f = FieldConfig::Rational;
        assert_eq!(t.q.get(0, 0), f.from_i64(-2));
        assert_eq!(t.q.get(1, 1), f.from_ratio(-1, 2).unwrap());
        assert!(is_twisted_cyclic(&w, &t.q));
    }

    #[test]
    fn degenerate_square() {
        let w = form(2, 2, &[(&[0, 0], 1)]);
        assert_eq!(check_one_site(&w), vec![false, false]);
    }

    #[test]
    fn cyclic_average() {
        let w = form(2, 4, &[(&[0, 1, 0, 1], 1)]);
        let f = FieldConfig::Rational;
        let p = pi_q(&w, &SparseMatrix::identity(f, 2)).unwrap();
        let half = f.from_ratio(1, 2).unwrap();
        assert_eq!(p.coeff(&[0, 1, 0, 1]), half);
        assert_eq!(p.coeff(&[1, 0, 1, 0]), half);
        assert_eq!(p.coeffs.nnz(), 2);
    }

    #[test]
    fn pi_q_needs_invertible_m() {
        let f = FieldConfig::prime(3).unwrap();
        let w = Potential::new(vec!["x".into()], 3, SparseVec::unit(0, f)).unwrap();
        assert!(matches!(pi_q(&w, &SparseMatrix::identity(f, 1)), Err(Error::Arithmetic(_))));
    }
}
