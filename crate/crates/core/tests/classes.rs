use deltak::algebra::rat;
use deltak::algebra::LaurentPoly;
use deltak::classes::*;
use deltak::delta::DeltaMatroid;
use deltak::semigroup::SemigroupConfig;
use deltak::typeb::{OgrFixedPoint, SignedPermutation};

fn seg() -> DeltaMatroid {
    DeltaMatroid::new(1, &[0, 1]).unwrap()
}

fn t(e: &[i32]) -> LaurentPoly {
    LaurentPoly::character(e)
}

#[test]
fn polytope_classes_on_a_segment() {
    let p = k_polytope(&seg(), false).unwrap();
    let id = SignedPermutation::identity(1);
    let bar = SignedPermutation::new(vec![-1]).unwrap();
    assert_eq!(p.at_w(&id).numerator, LaurentPoly::one(1));
    assert_eq!(p.at_w(&bar).numerator, t(&[-1]));
    let q = k_polytope(&seg(), true).unwrap();
    assert_eq!(q.at_w(&id).numerator, t(&[1]));
    assert_eq!(q.at_w(&bar).numerator, t(&[-1]));
    let empty = DeltaMatroid::new(3, &[0]).unwrap();
    let c = k_polytope(&empty, false).unwrap();
    assert!(c.entries().iter().all(|e| e.numerator == LaurentPoly::one(3)));
}

#[test]
fn wedge_classes() {
    let d = seg();
    let w1 = k_wedge_qdual(&d, 1).unwrap();
    let id = SignedPermutation::identity(1);
    let bar = SignedPermutation::new(vec![-1]).unwrap();
    assert_eq!(w1.at_w(&id).numerator, &LaurentPoly::one(1) + &t(&[-1]));
    assert_eq!(w1.at_w(&bar).numerator, &LaurentPoly::one(1) + &t(&[1]));
    let w0 = k_wedge_qdual(&d, 0).unwrap();
    assert!(w0.entries().iter().all(|e| e.numerator == LaurentPoly::one(1)));
    let w2 = k_wedge_qdual(&d, 2).unwrap();
    assert_eq!(w2.at_w(&id).numerator, t(&[-1]));
    assert!(k_wedge_qdual(&d, 3)
        .unwrap()
        .entries()
        .iter()
        .all(|e| e.numerator.is_zero()));
    let fam = wedge_family_at(&[1, -1], &rat(2));
    assert_eq!(fam.eval_at_one(), rat(27));
}

#[test]
fn gkm_examples() {
    let one = LocalizedClass::constant(Side::X, 2, rat(1));
    assert!(gkm_check(&one).unwrap().ok);
    assert!(gkm_check(&k_polytope(&seg(), false).unwrap()).unwrap().ok);
    let bad = LocalizedClass::new(
        Side::X,
        1,
        vec![
            LocalEntry::polynomial(LaurentPoly::one(1)),
            LocalEntry::polynomial(&t(&[2]) + &t(&[1])),
        ],
    )
    .unwrap();
    assert!(!gkm_check(&bad).unwrap().ok);
    let mismatched = LocalizedClass::new(
        Side::X,
        1,
        vec![
            LocalEntry::polynomial(LaurentPoly::one(1)),
            LocalEntry::polynomial(LaurentPoly::var(2, 1)),
        ],
    );
    assert!(mismatched.is_err());
}

#[test]
fn w_action_laws() {
    let d = DeltaMatroid::from_sets(2, &[vec![], vec![1, 2]]).unwrap();
    let c = k_polytope(&d, true).unwrap();
    assert_eq!(w_act(&c, &SignedPermutation::identity(2)).unwrap(), c);
    let tau = SignedPermutation::new(vec![1, -2]).unwrap();
    assert_eq!(w_act(&w_act(&c, &tau).unwrap(), &tau).unwrap(), c);
}

#[test]
fn y_class_singleton_and_segment() {
    let single = DeltaMatroid::new(2, &[0b10]).unwrap();
    let y = ogr_y_class(&single).unwrap();
    let p = OgrFixedPoint { n: 2, s: 0b10 };
    assert_eq!(y.at_b(0b10).numerator, euler_product(2, &p.chart_characters()));
    assert!(y.at_b(0).numerator.is_zero());
    let y = ogr_y_class(&seg()).unwrap();
    assert_eq!(y.at_b(0).numerator, LaurentPoly::one(1));
    assert_eq!(y.at_b(1).numerator, LaurentPoly::one(1));
    let o = ogr_orbit_class(&seg(), &SemigroupConfig::default()).unwrap();
    assert!(o.same_class(&y).unwrap());
}

#[test]
fn y_class_of_the_first_example_has_the_parallelepiped_point() {
    let d = DeltaMatroid::from_sets(3, &[vec![1, 2, 3], vec![1], vec![2], vec![3]]).unwrap();
    let y = ogr_y_class(&d).unwrap();
    assert!(gkm_check(&y).unwrap().ok);
    // (1 + T^(1,-1,-1)) (1 - T^e1)(1 - T^-e2)(1 - T^-e3)
    let mut hand = LaurentPoly::one(3);
    hand.add_term(vec![1, -1, -1], rat(1));
    for v in [[-1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        hand = &hand * &LaurentPoly::one_minus(&v.map(|x: i32| -x));
    }
    assert_eq!(y.at_b(0b001).numerator, hand);
    let o = ogr_orbit_class(&d, &SemigroupConfig::default()).unwrap();
    assert_eq!(o.at_b(0b001).numerator, LaurentPoly::one(3));
    assert!(!o.same_class(&y).unwrap());
    assert!(gkm_check(&o.materialize().unwrap()).unwrap().ok);
}
