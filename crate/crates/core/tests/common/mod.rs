//! Dense fraction-free elimination used as an independent oracle for the sparse engine.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use koszul_core::exactlin::{FieldConfig, Scalar, SparseMatrix, SparseVec, TensorSubspace};

/// Bareiss elimination to a fraction-free echelon form, then normalization to the reduced form
/// over `Q`. Returns the nonzero rows and the pivot columns.
pub fn bareiss_rref(rows: &[Vec<i64>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..n {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss step must divide exactly");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let mut out: Vec<Vec<BigRational>> = a[..r]
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    for k in (0..r).rev() {
        let c = pivots[k];
        let lead = out[k][c].clone();
        for x in out[k].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..k {
            let f = out[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &f * &out[k][j];
                out[i][j] = &out[i][j] - t;
            }
        }
    }
    (out, pivots)
}

pub fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    bareiss_rref(rows).1.len()
}

pub fn random_matrix(rng: &mut impl Rng, m: usize, n: usize, density: f64) -> Vec<Vec<i64>> {
    (0..m)
        .map(|_| (0..n).map(|_| if rng.gen_bool(density) { rng.gen_range(-4..=4) } else { 0 }).collect())
        .collect()
}

pub fn to_engine(rows: &[Vec<i64>], ncols: usize) -> SparseMatrix {
    let f = FieldConfig::Rational;
    SparseMatrix::from_rows(f, ncols, rows.iter().map(|r| to_vec(r)).collect())
}

pub fn to_vec(r: &[i64]) -> SparseVec {
    let f = FieldConfig::Rational;
    SparseVec::from_dense(&r.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>())
}

pub fn rational(s: &Scalar) -> BigRational {
    s.as_rational().expect("rational field").clone()
}

pub fn dense_q(v: &SparseVec, n: usize) -> Vec<BigRational> {
    v.to_dense(n, FieldConfig::Rational).iter().map(rational).collect()
}

/// Integer rows proportional to the given rational rows (denominators cleared).
pub fn clear_denominators(rows: &[Vec<BigRational>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter()
                .map(|x| {
                    let v = x * BigRational::from_integer(l.clone());
                    i64::try_from(v.to_integer()).expect("small entries")
                })
                .collect()
        })
        .collect()
}

pub fn subspace(rows: &[Vec<i64>], d: usize, degree: usize) -> TensorSubspace {
    TensorSubspace::span(FieldConfig::Rational, d, degree, rows.iter().map(|r| to_vec(r))).unwrap()
}

pub fn basis_rows(u: &TensorSubspace) -> Vec<Vec<i64>> {
    let n = u.ambient_dim();
    clear_denominators(&u.basis().iter().map(|b| dense_q(b, n)).collect::<Vec<_>>())
}

fn dot(a: &[BigRational], b: &[i64]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, &y)| acc + x * BigRational::from_integer(y.into()))
}

/// Engine rref equals the oracle rref entry by entry.
pub fn check_rref(rows: &[Vec<i64>], n: usize) -> Result<(), String> {
    let (oracle, piv) = bareiss_rref(rows);
    let r = to_engine(rows, n).rref();
    if r.pivots != piv {
        return Err(format!("pivots {:?} vs oracle {:?}", r.pivots, piv));
    }
    let engine: Vec<Vec<BigRational>> = r.rows.iter().map(|v| dense_q(v, n)).collect();
    if engine != oracle {
        return Err("rref rows differ from oracle".into());
    }
    Ok(())
}

/// Kernel vectors are annihilated by the matrix (checked densely) and span a space of dimension
/// `n − rank`.
pub fn check_kernel(rows: &[Vec<i64>], n: usize) -> Result<(), String> {
    let k = to_engine(rows, n).kernel();
    let kd: Vec<Vec<BigRational>> = k.iter().map(|v| dense_q(v, n)).collect();
    for v in &kd {
        for r in rows {
            if !dot(v, r).is_zero() {
                return Err("kernel vector not annihilated".into());
            }
        }
    }
    let expected = n - oracle_rank(rows);
    let got = if kd.is_empty() { 0 } else { oracle_rank(&clear_denominators(&kd)) };
    if got != expected || kd.len() != expected {
        return Err(format!("kernel dim {got} ({} vectors) vs oracle {expected}", kd.len()));
    }
    Ok(())
}

/// `dim U∩V = dim U + dim V − dim(U+V)`, and the computed basis lies in both.
pub fn check_intersect(u_rows: &[Vec<i64>], v_rows: &[Vec<i64>], d: usize, degree: usize) -> Result<(), String> {
    let u = subspace(u_rows, d, degree);
    let v = subspace(v_rows, d, degree);
    let w = u.intersect(&v).map_err(|e| e.to_string())?;
    let du = oracle_rank(u_rows);
    let dv = oracle_rank(v_rows);
    let both: Vec<Vec<i64>> = u_rows.iter().chain(v_rows).cloned().collect();
    let expected = du + dv - oracle_rank(&both);
    if w.dim() != expected {
        return Err(format!("intersection dim {} vs oracle {expected}", w.dim()));
    }
    for b in basis_rows(&w) {
        for (rows, dim) in [(u_rows, du), (v_rows, dv)] {
            let mut ext = rows.to_vec();
            ext.push(b.clone());
            if oracle_rank(&ext) != dim {
                return Err("intersection vector outside an operand".into());
            }
        }
    }
    Ok(())
}

/// The annihilator has complementary dimension and pairs to zero with `U`.
pub fn check_annihilator(u_rows: &[Vec<i64>], d: usize, degree: usize) -> Result<(), String> {
    let u = subspace(u_rows, d, degree);
    let a = u.annihilator();
    let n = u.ambient_dim();
    let du = oracle_rank(u_rows);
    if a.dim() != n - du {
        return Err(format!("annihilator dim {} vs oracle {}", a.dim(), n - du));
    }
    for b in a.basis() {
        let bq = dense_q(b, n);
        if u_rows.iter().any(|r| !dot(&bq, r).is_zero()) {
            return Err("annihilator vector pairs nontrivially".into());
        }
    }
    if a.dim() > 0 && oracle_rank(&basis_rows(&a)) != a.dim() {
        return Err("annihilator basis dependent".into());
    }
    Ok(())
}
