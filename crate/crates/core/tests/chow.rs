use deltak::algebra::rat;
use deltak::algebra::{LaurentPoly, TruncSeries};
use deltak::chow::*;
use deltak::delta::DeltaMatroid;
use num_traits::Zero;
use std::sync::Arc;

#[test]
fn psi_of_a_character() {
    let t1 = LaurentPoly::var(1, 0);
    let s = psi_eval(&t1, &[1], 3);
    assert_eq!(s.coeffs(), &[rat(1), rat(2), rat(2), rat(2)]);
    let inv = psi_eval(&LaurentPoly::character(&[-1]), &[1], 3);
    assert!((&s * &inv).agrees_with(&TruncSeries::one(3)));
    // ψ(T - 1) lies in the augmentation ideal
    let aug = psi_eval(&(&t1 - &LaurentPoly::one(1)), &[3], 3);
    assert!(aug.coeff(0).is_zero());
    assert_eq!(psi_eval(&LaurentPoly::one(2), &[5, 7], 2), TruncSeries::one(2));
}

#[test]
fn chern_of_a_sum_of_characters() {
    // 1 + T_1 + T_2^{-1}: (1 + 2s)(1 - 3s)
    let mut f = LaurentPoly::one(2);
    f.add_term(vec![1, 0], rat(1));
    f.add_term(vec![0, -1], rat(1));
    let s = chern_of_characters(&f, &[2, 3], 2).unwrap();
    assert_eq!(s.coeffs(), &[rat(1), rat(-1), rat(-6)]);
    let neg = chern_of_characters(&f.scale(&rat(-1)), &[2, 3], 2).unwrap();
    assert!((&s * &neg).agrees_with(&TruncSeries::one(2)));
}

#[test]
fn chern_i_on_the_empty_family_member() {
    let d = Arc::new(DeltaMatroid::new(1, &[0]).unwrap());
    let e = ChowExpr::chern_i(d, rat(1), true);
    for w in deltak::typeb::enumerate_w(1) {
        // B_w = {1̄}, so 1 - t_{1̄} = 1 + t_1
        assert_eq!(e.eval(&w, &[5], 1).unwrap().coeffs(), &[rat(1), rat(5)]);
    }
}
