use koszul_core::dsl::parse_presentation;
use koszul_core::exactlin::{FieldConfig, SparseMatrix, SparseVec, TensorSubspace};
use koszul_core::homogeneous::Side;
use koszul_core::nonhomogeneous::*;
use koszul_core::Error;
use proptest::prelude::*;

const Q: FieldConfig = FieldConfig::Rational;

fn pres(text: &str) -> NonhomogeneousPresentation {
    parse_presentation(text).unwrap().to_nonhomogeneous(Q).unwrap()
}

fn so3() -> NonhomogeneousPresentation {
    pres("generators x y z\nrelation x*y - y*x = z\nrelation y*z - z*y = x\nrelation z*x - x*z = y")
}

fn broken() -> NonhomogeneousPresentation {
    pres("generators x y z\nrelation x*y - y*x = z\nrelation y*z - z*y = x\nrelation z*x - x*z = x")
}

fn sl2() -> NonhomogeneousPresentation {
    pres("generators h e f\nrelation h*e - e*h = 2*e\nrelation h*f - f*h = -2*f\nrelation e*f - f*e = h")
}

fn clifford2() -> NonhomogeneousPresentation {
    pres("generators g1 g2\nrelation g1*g1 = 1\nrelation g2*g2 = 1\nrelation g1*g2 + g2*g1 = 0")
}

fn ccr1() -> NonhomogeneousPresentation {
    pres("generators q p\nrelation q*p - p*q = 1")
}

const IRW: &str = "param mu = 2\ngenerators n0 n1 n2\n\
    relation mu^2*n2*n0 - n0*n2 = mu*n1\n\
    relation mu^4*n1*n0 - n0*n1 = mu^2*(1 + mu^2)*n0\n\
    relation mu^4*n2*n1 - n1*n2 = mu^2*(1 + mu^2)*n2\n";

/// 2×2 matrices on the complement `e12, e21, e11 − e22` of the unit.
const MAT2: &str = "generators a b h\n\
    relation a*a = 0\nrelation b*b = 0\nrelation h*h = 1\n\
    relation a*b = 1/2 + 1/2*h\nrelation b*a = 1/2 - 1/2*h\n\
    relation a*h = -a\nrelation h*a = a\nrelation b*h = b\nrelation h*b = -b\n";

fn matrices(rows: &[&[&[i64]]]) -> Vec<SparseMatrix> {
    rows.iter()
        .map(|m| SparseMatrix::from_dense(Q, &m.iter().map(|r| r.iter().map(|&x| Q.from_i64(x)).collect()).collect::<Vec<_>>()))
        .collect()
}

#[test]
fn overlap_space_dimensions() {
    assert_eq!(v_space(&so3()).unwrap().dim(), 1);
    // (xy − yx) ⊗ E and E ⊗ (xy − yx) share no nonzero vector: 𝒱_3 is dual to Λ³(K²) = 0
    assert_eq!(v_space(&pres("generators x y\nrelation x*y - y*x")).unwrap().dim(), 0);
    let free = NonhomogeneousPresentation::new("free", vec!["x".into()], 2, TensorSubspace::zero(Q, 1, 2).unwrap(), vec![vec![], vec![]]).unwrap();
    assert_eq!(v_space(&free).unwrap().dim(), 0);
    // exterior relations on three letters: 𝒱_3 is dual to S³(K³)
    let ext = pres("generators x y z\nrelation x*y + y*x\nrelation y*z + z*y\nrelation x*z + z*x\nrelation x*x\nrelation y*y\nrelation z*z");
    assert_eq!(v_space(&ext).unwrap().dim(), 10);
}

#[test]
fn jacobi_identity_is_condition_b() {
    let r = check_conditions_abc(&so3()).unwrap();
    assert!(r.holds());
    let r = check_conditions_abc(&broken()).unwrap();
    let f = r.first_failure.unwrap();
    assert_eq!(f.condition, Condition::B(1));
    assert!(r.a);
    assert_eq!(r.c, Some(true));
    // the Jacobiator is ±z, and the witness spans 𝒱_3
    assert_eq!(f.defect.nnz(), 1);
    assert_eq!(f.defect.leading().unwrap().0, 2);
    assert_eq!(f.witness, v_space(&broken()).unwrap().basis()[0]);
}

#[test]
fn homogeneous_presentations_satisfy_abc_vacuously() {
    let p = pres("generators x y z\nrelation x*y - y*x\nrelation y*z - z*y\nrelation z*x - x*z");
    assert!(p.is_homogeneous());
    assert!(check_conditions_abc(&p).unwrap().holds());
}

#[test]
fn filtration_of_enveloping_algebra() {
    let r = pbw_check(&so3(), 4).unwrap();
    assert_eq!(r.filtration_dims, vec![1, 4, 10, 20, 35]);
    assert_eq!(r.gr_dims, vec![1, 3, 6, 10, 15]);
    assert!(r.pbw_holds() && r.hypotheses_hold());
}

#[test]
fn broken_jacobi_fails_at_degree_three() {
    let r = pbw_check(&broken(), 4).unwrap();
    assert_eq!(&r.filtration_dims[..3], &[1, 4, 10]);
    assert!(r.filtration_dims[3] < 20);
    assert_eq!(r.first_failure(), Some(3));
    assert_eq!(r.abc.first_failure.as_ref().unwrap().condition, Condition::B(1));
}

#[test]
fn clifford_and_ccr_filtrations() {
    let r = pbw_check(&clifford2(), 5).unwrap();
    assert_eq!(r.filtration_dims, vec![1, 3, 4, 4, 4, 4]);
    assert!(r.pbw_holds());
    let r = pbw_check(&ccr1(), 5).unwrap();
    assert_eq!(r.filtration_dims, vec![1, 3, 6, 10, 15, 21]);
    assert!(r.pbw_holds());
}

#[test]
fn filtration_never_exceeds_homogeneous_bound() {
    for p in [so3(), broken(), clifford2(), ccr1(), pres(MAT2), pres(IRW)] {
        let r = pbw_check(&p, 4).unwrap();
        for n in 0..=4 {
            assert!(r.filtration_dims[n] <= r.homogeneous_cumulative[n]);
        }
    }
}

#[test]
fn matrix_algebra_is_curved_with_nonzero_differential() {
    let p = pres(MAT2);
    let r = pbw_check(&p, 4).unwrap();
    assert_eq!(r.filtration_dims, vec![1, 4, 4, 4, 4]);
    let c = to_curved_dga(&p).unwrap();
    assert!(c.checks.holds() && c.abc.holds());
    assert!(!c.dga.is_flat() && !c.dga.is_differential_zero());
    // breaking associativity breaks both condition sets
    let q = pres(&MAT2.replace("relation h*h = 1", "relation h*h = 2"));
    let c = to_curved_dga(&q).unwrap();
    assert!(!c.checks.holds() && !c.abc.holds());
}

#[test]
fn lie_algebra_dual_is_flat_exterior_differential() {
    let c = to_curved_dga(&so3()).unwrap();
    assert!(c.dga.is_flat());
    assert!(c.checks.holds());
    let (delta, f) = c.dga.render().unwrap();
    assert_eq!(f, "0");
    // δθ_z = −θ_xθ_y = θ_yθ_x: pairing with xy − yx gives −1
    assert_eq!(delta[2], "y'*x'");
}

#[test]
fn ccr_dual_has_zero_differential_and_central_curvature() {
    let c = to_curved_dga(&ccr1()).unwrap();
    assert!(c.dga.is_differential_zero());
    let (_, f) = c.dga.render().unwrap();
    // −θ_qθ_p, written on the normal word θ_pθ_q
    assert_eq!(f, "p'*q'");
    assert!(c.checks.holds());
}

#[test]
fn clifford_curvature() {
    let c = to_curved_dga(&clifford2()).unwrap();
    assert!(c.dga.is_differential_zero());
    let (_, f) = c.dga.render().unwrap();
    assert_eq!(f, "-g1'*g1' - g2'*g2'");
}

#[test]
fn deformed_enveloping_algebra_dual() {
    let c = to_curved_dga(&pres(IRW)).unwrap();
    assert!(c.dga.is_flat() && c.checks.holds());
    let (delta, _) = c.dga.render().unwrap();
    // 20·n0'n1', 2·n0'n2', 20·n1'n2' rewritten on the normal words n1'n0', n2'n0', n2'n1'
    assert_eq!(delta, vec!["-5/4*n1'*n0'", "-1/2*n2'*n0'", "-5/4*n2'*n1'"]);
}

#[test]
fn curved_round_trips() {
    for p in [so3(), clifford2(), ccr1(), pres(MAT2), pres(IRW), pres("generators g1 g2 g3\nrelation g1*g1 = 1\nrelation g2*g2 = 1\nrelation g3*g3 = 1\nrelation g1*g2 + g2*g1 = 0\nrelation g1*g3 + g3*g1 = 0\nrelation g2*g3 + g3*g2 = 0")] {
        let c = to_curved_dga(&p).unwrap();
        let back = from_curved_dga(&c.dga).unwrap();
        assert_eq!(back.relations, p.relations);
        assert_eq!(back.phi, p.phi);
        assert_eq!(to_curved_dga(&back).unwrap().dga, c.dga);
    }
    let flat = to_curved_dga(&pres("generators x y\nrelation x*y - y*x")).unwrap();
    assert!(from_curved_dga(&flat.dga).unwrap().is_homogeneous());
    let c = to_curved_dga(&broken()).unwrap();
    assert!(matches!(from_curved_dga(&c.dga), Err(Error::Precondition(_))));
}

#[test]
fn curved_data_from_documents() {
    let doc = "generators w0 w1 w2\nrelation w0*w0\nrelation w1*w1\nrelation w2*w2\n\
        relation w2*w0 + 4*w0*w2\nrelation w1*w0 + 16*w0*w1\nrelation w2*w1 + 16*w1*w2\n\
        differential w0 = -20*w0*w1\ndifferential w1 = -2*w0*w2\ndifferential w2 = -20*w1*w2\n";
    let c = parse_presentation(doc).unwrap().to_curved_dga(Q).unwrap();
    assert!(check_curved(&c).unwrap().holds());
    let irw = to_curved_dga(&pres(IRW)).unwrap().dga;
    assert_eq!(c.dual.relations, irw.dual.relations);
    // the printed differential is the negative of −φ_1^t on the same generators
    let negated: Vec<SparseVec> = irw.delta.iter().map(|v| v.neg()).collect();
    assert_eq!(c.delta, negated);
}

#[test]
fn curved_checks_need_quadratic_input() {
    let p = pres("generators x y\nrelation x*y*x = y*y");
    assert!(matches!(to_curved_dga(&p), Err(Error::Precondition(_))));
}

#[test]
fn so3_is_a_lie_prealgebra() {
    let l = lie_prealgebra_certify(&so3(), 5).unwrap();
    assert!(l.certified());
    assert_eq!(&l.dual_dims[..5], &[1, 3, 3, 1, 0]);
    assert!(l.dual_is_differential_frobenius());
}

#[test]
fn unitalization_is_not_a_lie_prealgebra() {
    // K × K with idempotents e1, e2
    let p = pres("generators e1 e2\nrelation e1*e1 = e1\nrelation e2*e2 = e2\nrelation e1*e2 = 0\nrelation e2*e1 = 0");
    let l = lie_prealgebra_certify(&p, 5).unwrap();
    assert!(l.pbw.pbw_holds());
    assert!(!l.certified());
    assert!(matches!(l.gorenstein, Some(koszul_core::homogeneous::GorensteinVerdict::Fails { .. })));
    assert!(matches!(lie_prealgebra_certify(&clifford2(), 4), Err(Error::Precondition(_))));
}

#[test]
fn deformed_enveloping_algebra_is_a_lie_prealgebra() {
    let l = lie_prealgebra_certify(&pres(IRW), 5).unwrap();
    assert!(l.certified());
    assert!(l.dual_is_differential_frobenius());
}

#[test]
fn sl2_trivial_cohomology() {
    let p = sl2();
    let ce = ce_complex(&p, &Representation::trivial(&p, Side::Left, 1).unwrap(), 6).unwrap();
    assert!(ce.square_zero);
    assert_eq!(ce.dims, vec![1, 3, 3, 1]);
    assert_eq!(ce.homology, vec![1, 0, 0, 1]);
    let ce = ce_complex(&p, &Representation::trivial(&p, Side::Right, 1).unwrap(), 6).unwrap();
    assert_eq!(ce.homology, vec![1, 0, 0, 1]);
}

#[test]
fn abelian_trivial_cohomology() {
    let p = pres("generators x y\nrelation x*y - y*x");
    let ce = ce_complex(&p, &Representation::trivial(&p, Side::Left, 1).unwrap(), 6).unwrap();
    assert_eq!(ce.homology, vec![1, 2, 1]);
    assert!(ce.differentials.iter().all(|m| m.is_zero()));
}

#[test]
fn adjoint_representation_of_so3() {
    let p = so3();
    // ad_x y = z, ad_x z = −y, etc., columns are images of x, y, z
    let ad = matrices(&[
        &[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]],
        &[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]],
        &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]],
    ]);
    let rep = Representation::new(&p, Side::Left, 3, ad.clone()).unwrap();
    let ce = ce_complex(&p, &rep, 6).unwrap();
    assert!(ce.square_zero);
    // semisimple with a nontrivial irreducible module: all cohomology vanishes
    assert_eq!(ce.homology, vec![0, 0, 0, 0]);
    // the transposed action is a right module with the same vanishing
    let right = Representation::new(&p, Side::Right, 3, ad.iter().map(|m| m.transpose()).collect()).unwrap();
    let ce = ce_complex(&p, &right, 6).unwrap();
    assert!(ce.square_zero);
    assert_eq!(ce.homology, vec![0, 0, 0, 0]);
}

#[test]
fn invalid_representation_names_the_relation() {
    let p = so3();
    let bad = matrices(&[&[&[1]], &[&[0]], &[&[0]]]);
    match Representation::new(&p, Side::Left, 1, bad) {
        Err(Error::Precondition(m)) => assert!(m.contains("relation")),
        other => panic!("{other:?}"),
    }
}

fn scalar() -> impl Strategy<Value = i64> {
    -2i64..=2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Random quadratic-linear data: both condition sets must agree (checked inside to_curved_dga).
    #[test]
    fn condition_sets_agree(
        rels in proptest::collection::vec(proptest::collection::vec(scalar(), 4), 1..4),
        lin in proptest::collection::vec(proptest::collection::vec(scalar(), 2), 3),
        con in proptest::collection::vec(scalar(), 3),
    ) {
        let field = Q;
        let tops: Vec<SparseVec> = rels.iter().map(|r| SparseVec::from_dense(&r.iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>())).collect();
        let r = TensorSubspace::span(field, 2, 2, tops).unwrap();
        prop_assume!(r.dim() > 0);
        let k = r.dim();
        let phi1 = (0..k).map(|j| SparseVec::from_dense(&lin[j].iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>())).collect();
        let phi0 = (0..k).map(|j| SparseVec::from_dense(&[field.from_i64(con[j])])).collect();
        let p = NonhomogeneousPresentation::new("random", vec!["x".into(), "y".into()], 2, r, vec![phi0, phi1]).unwrap();
        let c = to_curved_dga(&p).unwrap();
        prop_assert_eq!(c.checks.holds(), c.abc.holds());
        if c.checks.holds() {
            let back = from_curved_dga(&c.dga).unwrap();
            prop_assert_eq!(back.phi, p.phi);
        }
    }

    /// Random brackets on three letters: δ_V² = 0 for the trivial module whenever Jacobi holds.
    #[test]
    fn brackets_agree_and_square_to_zero(c in proptest::collection::vec(scalar(), 9)) {
        let text = format!(
            "generators x y z\nrelation x*y - y*x = {}*x + {}*y + {}*z\nrelation y*z - z*y = {}*x + {}*y + {}*z\nrelation z*x - x*z = {}*x + {}*y + {}*z",
            c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8]
        );
        let p = pres(&text);
        let curved = to_curved_dga(&p).unwrap();
        if curved.abc.holds() {
            let ce = ce_complex(&p, &Representation::trivial(&p, Side::Left, 1).unwrap(), 4).unwrap();
            prop_assert!(ce.square_zero);
            let r = pbw_check(&p, 3).unwrap();
            prop_assert!(r.pbw_holds());
        } else {
            let r = pbw_check(&p, 3).unwrap();
            prop_assert!(!r.pbw_holds());
        }
    }
}
