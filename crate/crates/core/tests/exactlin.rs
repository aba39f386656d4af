mod common;

use num_rational::BigRational;
use proptest::prelude::*;

use common::*;
use koszul_core::exactlin::{kernel, rref, FieldConfig, SparseMatrix, SparseVec, TensorSubspace};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(m, n)| {
        (prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], n), m), Just(n))
    })
}

fn rows_of(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![2 => Just(0i64), 1 => -3i64..=3], n), 0..=max)
}

#[test]
fn oracle_on_a_known_matrix() {
    let (r, piv) = bareiss_rref(&[vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]]);
    assert_eq!(piv, vec![0, 2]);
    assert_eq!(r[0], vec![q(1, 1), q(2, 1), q(0, 1)]);
    assert_eq!(r[1], vec![q(0, 1), q(0, 1), q(1, 1)]);
}

#[test]
fn engine_rref_on_the_same_matrix() {
    let m = to_engine(&[vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]], 3);
    let (r, rank, pivots) = rref(&m);
    assert_eq!((rank, pivots), (2, vec![0, 2]));
    assert_eq!(kernel(&m).rank(), 1);
    assert_eq!(dense_q(&r.rows[0], 3), vec![q(1, 1), q(2, 1), q(0, 1)]);
}

#[test]
fn prime_field_kernel() {
    let f = FieldConfig::Prime(5);
    // [1 2; 3 1] is singular mod 5 (det = -5)
    let m = SparseMatrix::from_dense(f, &[vec![f.from_i64(1), f.from_i64(2)], vec![f.from_i64(3), f.from_i64(1)]]);
    assert_eq!(m.rank(), 1);
    let k = m.kernel();
    assert_eq!(k.len(), 1);
    assert!(m.apply(&k[0]).is_zero());
    assert!(m.determinant().is_zero());
}

#[test]
fn subspace_operations_reject_mismatched_ambients() {
    let f = FieldConfig::Rational;
    let a = TensorSubspace::full(f, 2, 2).unwrap();
    let b = TensorSubspace::full(f, 2, 3).unwrap();
    assert!(a.intersect(&b).is_err());
    assert!(a.sum(&b).is_err());
}

#[test]
fn box_subspace_dimension() {
    let f = FieldConfig::Rational;
    let r = TensorSubspace::span(f, 2, 2, [to_vec(&[0, 1, -1, 0])]).unwrap();
    let left = TensorSubspace::box_subspace(1, &r, 0).unwrap();
    let right = TensorSubspace::box_subspace(0, &r, 1).unwrap();
    assert_eq!((left.dim(), right.dim()), (2, 2));
    assert_eq!(left.intersect(&right).unwrap().dim(), 0);
    assert_eq!(left.sum(&right).unwrap().dim(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_agrees_with_oracle((rows, n) in matrix(6, 7)) {
        prop_assert_eq!(check_rref(&rows, n), Ok(()));
    }

    #[test]
    fn kernel_agrees_with_oracle((rows, n) in matrix(6, 7)) {
        prop_assert_eq!(check_kernel(&rows, n), Ok(()));
    }

    #[test]
    fn intersect_agrees_with_oracle(u in rows_of(8, 5), v in rows_of(8, 5)) {
        prop_assert_eq!(check_intersect(&u, &v, 2, 3), Ok(()));
    }

    #[test]
    fn annihilator_agrees_with_oracle(u in rows_of(9, 6)) {
        prop_assert_eq!(check_annihilator(&u, 3, 2), Ok(()));
    }

    #[test]
    fn annihilator_is_an_involution(u in rows_of(8, 6)) {
        let s = subspace(&u, 2, 3);
        prop_assert_eq!(s.annihilator().annihilator(), s);
    }

    #[test]
    fn rank_nullity((rows, n) in matrix(6, 7)) {
        let m = to_engine(&rows, n);
        prop_assert_eq!(m.rank() + m.kernel().len(), n);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_returns_a_solution((rows, n) in matrix(5, 5), x in prop::collection::vec(-3i64..=3, 5)) {
        let m = to_engine(&rows, n);
        let b = m.apply(&to_vec(&x[..n]));
        let y = m.solve(&b);
        prop_assert!(y.is_some());
        prop_assert_eq!(m.apply(&y.unwrap()), b);
    }

    #[test]
    fn inverse_matches_full_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 4)) {
        let m = to_engine(&rows, 4);
        let full = oracle_rank(&rows) == 4;
        prop_assert_eq!(m.inverse().is_some(), full);
        prop_assert_eq!(!m.determinant().is_zero(), full);
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), SparseMatrix::identity(FieldConfig::Rational, 4));
        }
    }

    #[test]
    fn prime_field_inverses(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65_537]), a in 1i64..1_000_000) {
        let f = FieldConfig::Prime(p);
        let x = f.from_i64(a);
        match x.inv() {
            Some(y) => prop_assert!((&x * &y).is_one()),
            None => prop_assert_eq!(a as u64 % p, 0),
        }
    }

    #[test]
    fn vector_arithmetic(a in prop::collection::vec(-5i64..=5, 6), b in prop::collection::vec(-5i64..=5, 6)) {
        let f = FieldConfig::Rational;
        let (u, v) = (to_vec(&a), to_vec(&b));
        prop_assert_eq!(u.add(&v, f).sub(&v, f), u.clone());
        prop_assert!(u.sub(&u, f).is_zero());
        let expected: i64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        prop_assert_eq!(u.dot(&v, f), f.from_i64(expected));
        prop_assert_eq!(SparseVec::from_dense(&u.to_dense(6, f)), u);
    }
}
