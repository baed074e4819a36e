use deltak::delta::DeltaMatroid;
use deltak::engine::Engine;
use deltak::verify::*;

#[test]
fn small_corpus_sizes() {
    assert_eq!(all_delta_matroids(1).unwrap().len(), 3);
    assert!(corpus(2).unwrap().len() > 3);
}

#[test]
fn suites_pass_on_n_two() {
    let e = Engine::with_directions(3, 2);
    let c = all_delta_matroids(2).unwrap();
    for check in [
        check_interlace_identity,
        check_hrr,
        check_lattice_points,
        check_interlace_integral,
        check_pointwise,
        check_transfer,
    ] {
        let r = run_suite(&c, &e, check).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}

#[test]
fn failures_carry_the_instance() {
    let d = DeltaMatroid::new(1, &[0]).unwrap();
    let r = run_suite(&[d], &Engine::default(), |_, _| Ok(Some("boom".into()))).unwrap();
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].delta_matroid.feasible, vec![Vec::<usize>::new()]);
}
