use deltak::typeb::*;

#[test]
fn group_sizes() {
    assert_eq!(enumerate_w(1).count(), 2);
    assert_eq!(enumerate_w(2).count(), 8);
    assert_eq!(enumerate_w(3).count(), 48);
    let all: std::collections::BTreeSet<_> = enumerate_w(4).collect();
    assert_eq!(all.len(), 384);
}

#[test]
fn rank_roundtrip() {
    for (i, w) in enumerate_w(4).enumerate() {
        assert_eq!(w.rank(), i as u64);
    }
}

#[test]
fn group_laws() {
    let w = SignedPermutation::new(vec![-2, 3, 1]).unwrap();
    let id = SignedPermutation::identity(3);
    assert_eq!(w.compose(&w.inverse()), id);
    assert_eq!(w.inverse().compose(&w), id);
    assert_eq!(w.times_simple(3).times_simple(3), w);
    assert_eq!(w.apply(-1), 2);
}

#[test]
fn dual_basis_examples() {
    let d = cone_data(&SignedPermutation::identity(2)).unwrap();
    assert_eq!(d.dual, vec![vec![1, -1], vec![0, 1]]);
    let d = cone_data(&SignedPermutation::new(vec![-2, 1]).unwrap()).unwrap();
    assert_eq!(d.generators, vec![vec![0, -1], vec![1, -1]]);
    assert_eq!(d.dual, vec![vec![-1, -1], vec![1, 0]]);
    let d = cone_data(&SignedPermutation::new(vec![-1]).unwrap()).unwrap();
    assert_eq!(d.dual, vec![vec![-1]]);
}

#[test]
fn non_unimodular_is_detected() {
    assert!(unimodular_inverse(&[vec![2, 0], vec![0, 1]]).is_none());
    assert_eq!(
        unimodular_inverse(&[vec![2, 1], vec![1, 1]]).unwrap(),
        vec![vec![1, -1], vec![-1, 2]]
    );
}

#[test]
fn moment_labels_are_symmetric() {
    for w in enumerate_w(3) {
        for e in moment_edges(&w) {
            let back = moment_edges(&e.to)
                .into_iter()
                .find(|b| b.to == w)
                .expect("edge present at both ends");
            let neg: Vec<i64> = e.label.iter().map(|x| -x).collect();
            assert!(back.label == e.label || back.label == neg);
        }
    }
}

#[test]
fn ogr_chart_sizes() {
    for p in OgrFixedPoint::all(3) {
        assert_eq!(p.chart_characters().len(), 6);
        for (q, v) in p.edges() {
            let lhs = q.signed_vertex();
            let rhs: Vec<i64> = p.signed_vertex().iter().zip(&v).map(|(a, b)| a + 2 * b).collect();
            assert_eq!(lhs, rhs);
        }
    }
}
