//! Complexes of free graded modules `A ⊗ V_i`, `V_i ⊗ A` or `A ⊗ V_i ⊗ A`.
//!
//! Each generator space `V_i` sits in a single internal degree. Differentials are stored as one
//! matrix per (source slot, internal degree), columns indexed by the source component basis.

use std::collections::BTreeMap;

use super::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldConfig, SparseMatrix, SparseVec, TensorSubspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Bimodule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Chain,
    Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub gen_degree: i64,
    /// `None` when the generator space was not computed.
    pub dim: Option<usize>,
}

/// The image of the `j`-th generator of the source slot: pairs (target generator, coefficient in
/// `A_delta`). For left modules `1 ⊗ v_j ↦ Σ a_{lj} ⊗ u_l`, for right ones `v_j ⊗ 1 ↦ Σ u_l ⊗ a_{lj}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefMap {
    pub delta: usize,
    pub target_dim: usize,
    pub images: Vec<Vec<(usize, SparseVec)>>,
}

#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub side: Side,
    pub direction: Direction,
    pub slots: Vec<Slot>,
    /// Slots past the listed ones vanish.
    pub tail_zero: bool,
    pub degrees: Vec<i64>,
    pub field: FieldConfig,
    components: BTreeMap<(usize, i64), usize>,
    differentials: BTreeMap<(usize, i64), SparseMatrix>,
    coefs: BTreeMap<usize, CoefMap>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyReport {
    /// `(homological degree, internal degree) → dim H`.
    pub table: BTreeMap<(usize, i64), usize>,
}

impl HomologyReport {
    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, i64), &usize)> {
        self.table.iter().filter(|(_, v)| **v > 0)
    }

    pub fn get(&self, i: usize, k: i64) -> Option<usize> {
        self.table.get(&(i, k)).copied()
    }

    /// Total dimension of `H_i` over the reported internal degrees.
    pub fn total(&self, i: usize) -> usize {
        self.table.iter().filter(|((j, _), _)| *j == i).map(|(_, v)| v).sum()
    }
}

/// `ν_N(2k) = Nk`, `ν_N(2k+1) = Nk + 1`.
pub fn nu(n: usize, i: usize) -> usize {
    n * (i / 2) + (i % 2)
}

impl FreeComplex {
    pub fn component(&self, i: usize, k: i64) -> Option<usize> {
        if i >= self.slots.len() {
            return if self.tail_zero { Some(0) } else { None };
        }
        self.components.get(&(i, k)).copied()
    }

    pub fn differential(&self, i: usize, k: i64) -> Option<&SparseMatrix> {
        self.differentials.get(&(i, k))
    }

    pub fn coef_map(&self, i: usize) -> Option<&CoefMap> {
        self.coefs.get(&i)
    }

    /// Slot receiving the differential out of slot `i`.
    pub fn target(&self, i: usize) -> Option<usize> {
        match self.direction {
            Direction::Chain => i.checked_sub(1),
            Direction::Cochain => Some(i + 1),
        }
    }

    fn source(&self, i: usize) -> Option<usize> {
        match self.direction {
            Direction::Chain => Some(i + 1),
            Direction::Cochain => i.checked_sub(1),
        }
    }

    /// Rank of the differential out of slot `i` at degree `k`, if determined.
    fn out_rank(&self, i: usize, k: i64, cache: &mut BTreeMap<(usize, i64), usize>) -> Option<usize> {
        let src = self.component(i, k)?;
        let Some(t) = self.target(i) else { return Some(0) };
        let tgt = self.component(t, k)?;
        if src == 0 || tgt == 0 {
            return Some(0);
        }
        if let Some(r) = cache.get(&(i, k)) {
            return Some(*r);
        }
        let r = self.differential(i, k)?.rank();
        cache.insert((i, k), r);
        Some(r)
    }

    pub fn homology(&self) -> HomologyReport {
        let mut cache = BTreeMap::new();
        let mut table = BTreeMap::new();
        for i in 0..self.slots.len() {
            for &k in &self.degrees {
                let Some(dim) = self.component(i, k) else { continue };
                let Some(out) = self.out_rank(i, k, &mut cache) else { continue };
                let inc = match self.source(i) {
                    None => Some(0),
                    Some(s) => self.out_rank(s, k, &mut cache),
                };
                let Some(inc) = inc else { continue };
                table.insert((i, k), dim - out - inc);
            }
        }
        HomologyReport { table }
    }

    /// Composite of `len` consecutive differentials starting at slot `i`, degree `k`.
    /// `None` when some component on the way is unknown; zero components give a zero matrix.
    pub fn composite(&self, i: usize, k: i64, len: usize) -> Option<SparseMatrix> {
        let src = self.component(i, k)?;
        let mut acc = SparseMatrix::identity(self.field, src);
        let mut cur = i;
        for _ in 0..len {
            let Some(t) = self.target(cur) else {
                return Some(SparseMatrix::zero(self.field, 0, src));
            };
            let tdim = self.component(t, k)?;
            let cdim = self.component(cur, k)?;
            let step = if cdim == 0 || tdim == 0 {
                SparseMatrix::zero(self.field, tdim, cdim)
            } else {
                self.differential(cur, k)?.clone()
            };
            acc = step.mul(&acc);
            cur = t;
        }
        Some(acc)
    }

    /// Checks that `len` consecutive differentials compose to zero wherever defined.
    /// Returns the (slot, degree) pairs where the composite is nonzero.
    pub fn power_violations(&self, len: usize) -> Vec<(usize, i64)> {
        let mut bad = Vec::new();
        for i in 0..self.slots.len() {
            for &k in &self.degrees {
                if let Some(m) = self.composite(i, k, len) {
                    if !m.is_zero() {
                        bad.push((i, k));
                    }
                }
            }
        }
        bad
    }

    /// Known component dimensions, keyed by (slot, internal degree).
    pub fn dimension_table(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.components
    }
}

fn a_degree(k: i64, g: i64) -> i64 {
    k - g
}

/// Blocks `(p, q)` of a component at internal degree `k` of a slot with generator degree `g`,
/// with the dimensions `dim A_p · dim V · dim A_q`. `None` when undetermined.
fn blocks(alg: &GradedAlgebra, side: Side, slot: &Slot, k: i64) -> Option<Vec<(usize, usize, usize)>> {
    let total = a_degree(k, slot.gen_degree);
    if total < 0 {
        return Some(vec![]);
    }
    let total = total as usize;
    let v = slot.dim?;
    let pairs: Vec<(usize, usize)> = match side {
        Side::Left => vec![(total, 0)],
        Side::Right => vec![(0, total)],
        Side::Bimodule => (0..=total).map(|p| (p, total - p)).collect(),
    };
    let mut out = Vec::new();
    for (p, q) in pairs {
        let size = alg.dim(p)? * v * alg.dim(q)?;
        out.push((p, q, size));
    }
    Some(out)
}

fn block_offset(blocks: &[(usize, usize, usize)], p: usize) -> Option<usize> {
    let mut off = 0;
    for &(bp, _, size) in blocks {
        if bp == p {
            return Some(off);
        }
        off += size;
    }
    None
}

pub(crate) struct Shape {
    pub side: Side,
    pub direction: Direction,
    pub slots: Vec<Slot>,
    pub tail_zero: bool,
    pub degrees: Vec<i64>,
}

fn components_of(alg: &GradedAlgebra, shape: &Shape) -> BTreeMap<(usize, i64), usize> {
    let mut out = BTreeMap::new();
    for (i, slot) in shape.slots.iter().enumerate() {
        for &k in &shape.degrees {
            if let Some(b) = blocks(alg, shape.side, slot, k) {
                out.insert((i, k), b.iter().map(|x| x.2).sum());
            }
        }
    }
    out
}

fn target_of(direction: Direction, i: usize) -> Option<usize> {
    match direction {
        Direction::Chain => i.checked_sub(1),
        Direction::Cochain => Some(i + 1),
    }
}

/// Builds a left or right complex from generator images.
pub(crate) fn from_coefs(alg: &GradedAlgebra, shape: Shape, coefs: BTreeMap<usize, CoefMap>) -> Result<FreeComplex> {
    assert!(shape.side != Side::Bimodule, "bimodule complexes are built from peel maps");
    let field = alg.field();
    let components = components_of(alg, &shape);
    let mut differentials = BTreeMap::new();
    for (&i, map) in &coefs {
        let Some(t) = target_of(shape.direction, i) else { continue };
        if t >= shape.slots.len() {
            continue;
        }
        for &k in &shape.degrees {
            let (Some(&src), Some(&tgt)) = (components.get(&(i, k)), components.get(&(t, k))) else {
                continue;
            };
            if src == 0 || tgt == 0 {
                continue;
            }
            let p = a_degree(k, shape.slots[i].gen_degree) as usize;
            let q = p + map.delta;
            let dim_v = shape.slots[i].dim.unwrap();
            let dim_u = shape.slots[t].dim.unwrap();
            let dim_p = alg.dim(p).unwrap();
            let dim_q = alg.dim(q).unwrap();
            let mut cols = vec![SparseVec::new(); src];
            for alpha in 0..dim_p {
                let e = SparseVec::unit(alpha, field);
                for (j, image) in map.images.iter().enumerate() {
                    let col = match shape.side {
                        Side::Left => alpha * dim_v + j,
                        _ => j * dim_p + alpha,
                    };
                    let mut v = Vec::new();
                    for (l, a) in image {
                        let prod = match shape.side {
                            Side::Left => alg.mul(p, &e, map.delta, a)?,
                            _ => alg.mul(map.delta, a, p, &e)?,
                        };
                        for (beta, c) in prod.iter() {
                            let row = match shape.side {
                                Side::Left => beta * dim_u + l,
                                _ => l * dim_q + beta,
                            };
                            v.push((row, c.clone()));
                        }
                    }
                    cols[col] = SparseVec::from_pairs(v);
                }
            }
            differentials.insert((i, k), SparseMatrix::from_columns(field, tgt, &cols));
        }
    }
    Ok(FreeComplex {
        side: shape.side,
        direction: shape.direction,
        slots: shape.slots,
        tail_zero: shape.tail_zero,
        degrees: shape.degrees,
        field,
        components,
        differentials,
        coefs,
    })
}

/// Per basis vector `b_j` of `V_n`: the letters `a` and coordinates (in the basis of `V_{n−1}`) of
/// the slices in `b_j = Σ x_a ⊗ b'_a` (`first = true`) or `b_j = Σ b''_a ⊗ x_a`.
pub fn peel(upper: &TensorSubspace, lower: &TensorSubspace, first: bool) -> Result<Vec<Vec<(usize, SparseVec)>>> {
    let d = upper.d();
    let n = upper.degree();
    if n == 0 || lower.degree() + 1 != n {
        return Err(Error::DimensionMismatch("peel needs consecutive tensor degrees".into()));
    }
    let stride = crate::exactlin::word::pow(d, n - 1);
    let mut out = Vec::with_capacity(upper.dim());
    for b in upper.basis() {
        let mut slices: Vec<Vec<(usize, crate::exactlin::Scalar)>> = vec![Vec::new(); d];
        for (w, c) in b.iter() {
            let (a, rest) = if first { (w / stride, w % stride) } else { (w % d, w / d) };
            slices[a].push((rest, c.clone()));
        }
        let mut row = Vec::new();
        for (a, s) in slices.into_iter().enumerate() {
            if s.is_empty() {
                continue;
            }
            let coords = lower.coords(&SparseVec::from_pairs(s)).map_err(|_| {
                Error::Inconsistency(format!("slice of a degree-{n} generator leaves the degree-{} space", n - 1))
            })?;
            row.push((a, SparseVec::from_dense(&coords)));
        }
        out.push(row);
    }
    Ok(out)
}

/// Coefficient map of `d` (peeling the first letter onto the left factor) or `d′` (last letter).
pub fn letter_coefs(upper: &TensorSubspace, lower: &TensorSubspace, first: bool) -> Result<CoefMap> {
    let peeled = peel(upper, lower, first)?;
    let images = peeled
        .into_iter()
        .map(|row| {
            let mut by_target: BTreeMap<usize, Vec<(usize, crate::exactlin::Scalar)>> = BTreeMap::new();
            for (a, coords) in row {
                for (l, c) in coords.iter() {
                    by_target.entry(*l).or_default().push((a, c.clone()));
                }
            }
            by_target
                .into_iter()
                .map(|(l, v)| (l, SparseVec::from_pairs(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    Ok(CoefMap {
        delta: 1,
        target_dim: lower.dim(),
        images,
    })
}

/// Composite `second ∘ first` of generator images.
pub fn compose_coefs(alg: &GradedAlgebra, side: Side, first: &CoefMap, second: &CoefMap) -> Result<CoefMap> {
    let delta = first.delta + second.delta;
    let mut images = Vec::with_capacity(first.images.len());
    for image in &first.images {
        let mut acc: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (l, a) in image {
            for (m, b) in &second.images[*l] {
                let prod = match side {
                    Side::Left => alg.mul(first.delta, a, second.delta, b)?,
                    _ => alg.mul(second.delta, b, first.delta, a)?,
                };
                acc.entry(*m).or_default().axpy(&alg.field().one(), &prod);
            }
        }
        images.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }
    Ok(CoefMap {
        delta,
        target_dim: second.target_dim,
        images,
    })
}

/// Generator spaces of an N-complex with their tail behaviour.
pub struct SlotSpaces<'a> {
    pub spaces: &'a [TensorSubspace],
    /// True when the spaces past the list are known to vanish.
    pub tail_zero: bool,
}

fn slots_for(spaces: &SlotSpaces, degrees: &[usize]) -> (Vec<Slot>, bool) {
    let mut slots = Vec::new();
    for &n in degrees {
        match spaces.spaces.get(n) {
            Some(v) => {
                slots.push(Slot {
                    gen_degree: n as i64,
                    dim: Some(v.dim()),
                });
                if v.dim() == 0 {
                    return (slots, true);
                }
            }
            None => {
                if spaces.tail_zero {
                    return (slots, true);
                }
                slots.push(Slot {
                    gen_degree: n as i64,
                    dim: None,
                });
                return (slots, false);
            }
        }
    }
    (slots, false)
}

/// The N-complex `A ⊗ V_n` (left, `first = true`) or `V_n ⊗ A` with the letter-peeling differential.
pub fn n_complex(alg: &GradedAlgebra, spaces: SlotSpaces, side: Side, cap: usize) -> Result<FreeComplex> {
    let degrees: Vec<usize> = (0..=cap + 1).collect();
    let (slots, tail_zero) = slots_for(&spaces, &degrees);
    let mut coefs = BTreeMap::new();
    for n in 1..slots.len() {
        if slots[n].dim.is_none() {
            break;
        }
        let first = side == Side::Left;
        coefs.insert(n, letter_coefs(&spaces.spaces[n], &spaces.spaces[n - 1], first)?);
    }
    let shape = Shape {
        side,
        direction: Direction::Chain,
        slots,
        tail_zero,
        degrees: (0..=cap as i64).collect(),
    };
    from_coefs(alg, shape, coefs)
}

/// The contraction with slots `V_{ν(i)}`: `d` out of odd slots and `d^{N−1}` out of even ones.
pub fn contraction(alg: &GradedAlgebra, spaces: SlotSpaces, side: Side, big_n: usize, cap: usize) -> Result<FreeComplex> {
    let mut degrees = Vec::new();
    let mut i = 0;
    loop {
        let g = nu(big_n, i);
        degrees.push(g);
        if g > cap {
            break;
        }
        i += 1;
    }
    let (slots, tail_zero) = slots_for(&spaces, &degrees);
    let first = side == Side::Left;
    let mut step: BTreeMap<usize, CoefMap> = BTreeMap::new();
    let mut coefs = BTreeMap::new();
    for i in 1..slots.len() {
        if slots[i].dim.is_none() {
            break;
        }
        let (hi, lo) = (nu(big_n, i), nu(big_n, i - 1));
        let mut acc: Option<CoefMap> = None;
        for n in (lo + 1..=hi).rev() {
            if let std::collections::btree_map::Entry::Vacant(e) = step.entry(n) {
                e.insert(letter_coefs(&spaces.spaces[n], &spaces.spaces[n - 1], first)?);
            }
            let s = &step[&n];
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => compose_coefs(alg, side, &a, s)?,
            });
        }
        coefs.insert(i, acc.expect("nonempty step"));
    }
    let shape = Shape {
        side,
        direction: Direction::Chain,
        slots,
        tail_zero,
        degrees: (0..=cap as i64).collect(),
    };
    from_coefs(alg, shape, coefs)
}

/// `Hom_A(−, A)` of a left (right) chain complex: a right (left) cochain complex on the dual
/// generator spaces, in generator degrees `−g`.
pub fn dualize(alg: &GradedAlgebra, c: &FreeComplex) -> Result<FreeComplex> {
    let side = match c.side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
        Side::Bimodule => return Err(Error::Precondition("dualize expects a one-sided complex".into())),
    };
    if c.direction != Direction::Chain {
        return Err(Error::Precondition("dualize expects a chain complex".into()));
    }
    let slots: Vec<Slot> = c
        .slots
        .iter()
        .map(|s| Slot {
            gen_degree: -s.gen_degree,
            dim: s.dim,
        })
        .collect();
    let mut coefs = BTreeMap::new();
    for (&i, map) in &c.coefs {
        // φ_l ⊗ a ↦ Σ_j φ_j ⊗ a_{lj} a on the dual of the target slot i − 1
        let mut images: Vec<Vec<(usize, SparseVec)>> = vec![Vec::new(); map.target_dim];
        for (j, image) in map.images.iter().enumerate() {
            for (l, a) in image {
                images[*l].push((j, a.clone()));
            }
        }
        coefs.insert(
            i - 1,
            CoefMap {
                delta: map.delta,
                target_dim: map.images.len(),
                images,
            },
        );
    }
    let lo = slots
        .iter()
        .filter(|s| s.dim.is_some())
        .map(|s| s.gen_degree)
        .min()
        .unwrap_or(0)
        .min(0);
    let hi = alg.cap() as i64 + slots.iter().map(|s| s.gen_degree).max().unwrap_or(0).max(0);
    let shape = Shape {
        side,
        direction: Direction::Cochain,
        slots,
        tail_zero: c.tail_zero,
        degrees: (lo..=hi).collect(),
    };
    from_coefs(alg, shape, coefs)
}

/// `A ⊗ V_n ⊗ A` with both `d` and `d′`; matrices cached per (slot, degree).
pub struct BimoduleNComplex<'a> {
    alg: &'a GradedAlgebra,
    spaces: &'a [TensorSubspace],
    slots: Vec<Slot>,
    first: Vec<Vec<Vec<(usize, SparseVec)>>>,
    last: Vec<Vec<Vec<(usize, SparseVec)>>>,
}

impl<'a> BimoduleNComplex<'a> {
    pub fn new(alg: &'a GradedAlgebra, spaces: &'a [TensorSubspace]) -> Result<Self> {
        let slots = spaces
            .iter()
            .enumerate()
            .map(|(n, v)| Slot {
                gen_degree: n as i64,
                dim: Some(v.dim()),
            })
            .collect();
        let mut first = vec![Vec::new()];
        let mut last = vec![Vec::new()];
        for n in 1..spaces.len() {
            first.push(peel(&spaces[n], &spaces[n - 1], true)?);
            last.push(peel(&spaces[n], &spaces[n - 1], false)?);
        }
        Ok(BimoduleNComplex {
            alg,
            spaces,
            slots,
            first,
            last,
        })
    }

    pub fn component(&self, n: usize, k: i64) -> Option<usize> {
        let s = self.slots.get(n)?;
        blocks(self.alg, Side::Bimodule, s, k).map(|b| b.iter().map(|x| x.2).sum())
    }

    /// `d` (`left = true`) or `d′` out of slot `n` at internal degree `k`.
    pub fn letter_map(&self, n: usize, k: i64, left: bool) -> Option<SparseMatrix> {
        let alg = self.alg;
        let field = alg.field();
        let src_blocks = blocks(alg, Side::Bimodule, &self.slots[n], k)?;
        let tgt_blocks = blocks(alg, Side::Bimodule, &self.slots[n - 1], k)?;
        let tgt_dim: usize = tgt_blocks.iter().map(|x| x.2).sum();
        let dim_v = self.spaces[n].dim();
        let dim_u = self.spaces[n - 1].dim();
        let peeled = if left { &self.first[n] } else { &self.last[n] };
        let mut cols = Vec::new();
        for &(p, q, _) in &src_blocks {
            let (dp, dq) = (alg.dim(p)?, alg.dim(q)?);
            let (tp, tq) = if left { (p + 1, q) } else { (p, q + 1) };
            let off = block_offset(&tgt_blocks, tp)?;
            let tdq = alg.dim(tq)?;
            for alpha in 0..dp {
                for j in 0..dim_v {
                    for beta in 0..dq {
                        let mut v = Vec::new();
                        for (a, coords) in &peeled[j] {
                            if left {
                                let prod = alg.right_mul_letter(p, &SparseVec::unit(alpha, field), *a);
                                for (ap, c1) in prod.iter() {
                                    for (l, c2) in coords.iter() {
                                        v.push((off + (ap * dim_u + l) * tdq + beta, c1 * c2));
                                    }
                                }
                            } else {
                                let prod = alg.left_mul_letter(*a, q, &SparseVec::unit(beta, field));
                                for (bp, c1) in prod.iter() {
                                    for (l, c2) in coords.iter() {
                                        v.push((off + (alpha * dim_u + l) * tdq + bp, c1 * c2));
                                    }
                                }
                            }
                        }
                        cols.push(SparseVec::from_pairs(v));
                    }
                }
            }
        }
        Some(SparseMatrix::from_columns(field, tgt_dim, &cols))
    }

    /// `d^r d′^s` out of slot `n` at degree `k`.
    pub fn power(&self, n: usize, k: i64, r: usize, s: usize) -> Option<SparseMatrix> {
        let mut acc = SparseMatrix::identity(self.alg.field(), self.component(n, k)?);
        let mut cur = n;
        for step in 0..(r + s) {
            let left = step >= s;
            let m = self.letter_map(cur, k, left)?;
            acc = m.mul(&acc);
            cur -= 1;
        }
        Some(acc)
    }
}

/// `𝒦(A, A)`: slots `A ⊗ V_{ν(i)} ⊗ A`, differential `d − d′` out of odd slots and
/// `Σ_r d^r d′^{N−1−r}` out of even ones. Slot `0` maps onto `A` by multiplication; that
/// augmentation is not part of the complex.
pub fn contraction_bimodule(alg: &GradedAlgebra, spaces: &[TensorSubspace], big_n: usize, cap: usize) -> Result<FreeComplex> {
    let field = alg.field();
    let full = BimoduleNComplex::new(alg, spaces)?;
    let mut slots = Vec::new();
    let mut tail_zero = false;
    let mut i = 0;
    loop {
        let g = nu(big_n, i);
        if g > cap {
            break;
        }
        let Some(v) = spaces.get(g) else { break };
        slots.push(Slot {
            gen_degree: g as i64,
            dim: Some(v.dim()),
        });
        if v.dim() == 0 {
            tail_zero = true;
            break;
        }
        i += 1;
    }
    if !tail_zero {
        slots.push(Slot {
            gen_degree: nu(big_n, slots.len()) as i64,
            dim: None,
        });
    }
    let degrees: Vec<i64> = (0..=cap as i64).collect();
    let shape = Shape {
        side: Side::Bimodule,
        direction: Direction::Chain,
        slots,
        tail_zero,
        degrees,
    };
    let components = components_of(alg, &shape);
    let mut differentials = BTreeMap::new();
    for i in 1..shape.slots.len() {
        if shape.slots[i].dim.is_none() {
            break;
        }
        let n = nu(big_n, i);
        for &k in &shape.degrees {
            let (Some(&src), Some(&tgt)) = (components.get(&(i, k)), components.get(&(i - 1, k))) else {
                continue;
            };
            if src == 0 || tgt == 0 {
                continue;
            }
            let m = if i % 2 == 1 {
                let d = full.power(n, k, 1, 0).ok_or_else(|| Error::Capacity("bimodule component".into()))?;
                let dp = full.power(n, k, 0, 1).ok_or_else(|| Error::Capacity("bimodule component".into()))?;
                d.lincomb(&-field.one(), &dp)
            } else {
                let mut acc = SparseMatrix::zero(field, tgt, src);
                for r in 0..big_n {
                    let t = full
                        .power(n, k, r, big_n - 1 - r)
                        .ok_or_else(|| Error::Capacity("bimodule component".into()))?;
                    acc = acc.add(&t);
                }
                acc
            };
            differentials.insert((i, k), m);
        }
    }
    Ok(FreeComplex {
        side: Side::Bimodule,
        direction: Direction::Chain,
        slots: shape.slots,
        tail_zero: shape.tail_zero,
        degrees: shape.degrees,
        field,
        components,
        differentials,
        coefs: BTreeMap::new(),
    })
}
