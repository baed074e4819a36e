mod laurent {
    use deltak::algebra::laurent::*;

    use deltak::algebra::rat;
    use deltak::error::Error;

    fn t(e: &[i32]) -> LaurentPoly {
        LaurentPoly::character(e)
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentPoly::one(1);
        let a = &one - &t(&[1]);
        let b = &one + &t(&[1]);
        assert_eq!(&a * &b, &one - &t(&[2]));
    }

    #[test]
    fn inverse_monomials_cancel() {
        assert_eq!(&t(&[1]) * &t(&[-1]), LaurentPoly::one(1));
    }

    #[test]
    fn constant_cancellation() {
        let p = &LaurentPoly::one(2) + &t(&[1, -1]);
        let q = &p + &LaurentPoly::constant(2, rat(-1));
        assert_eq!(q, t(&[1, -1]));
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn mismatched_variables_error() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::VariableMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn divisibility_examples() {
        let f = LaurentPoly::one_minus(&[-1]);
        assert!(f.divisible_by_one_minus(&[1]));
        let g = LaurentPoly::one_minus(&[1]);
        assert!(g.divisible_by_one_minus(&[-1]));
        let h = &LaurentPoly::one(1) + &t(&[1]);
        assert!(!h.divisible_by_one_minus(&[1]));
    }

    #[test]
    fn exact_division() {
        // (1 - T1 T2)(2 + T1) / (1 - T1 T2)
        let f = &LaurentPoly::one_minus(&[1, 1]) * &(&LaurentPoly::constant(2, rat(2)) + &t(&[1, 0]));
        let q = f.div_one_minus(&[1, 1]).unwrap();
        assert_eq!(q, &LaurentPoly::constant(2, rat(2)) + &t(&[1, 0]));
        assert!(t(&[1, 0]).div_one_minus(&[1, 1]).is_none());
        // non-primitive direction
        let g = LaurentPoly::one_minus(&[4]);
        let q = g.div_one_minus(&[2]).unwrap();
        assert_eq!(q, &LaurentPoly::one(1) + &t(&[2]));
    }

    #[test]
    fn exp_substitute_examples() {
        let s = t(&[1]).exp_substitute(&[1], 2);
        assert_eq!(s.coeffs(), &[rat(1), rat(1), deltak::algebra::frac(1, 2)]);
        let s = LaurentPoly::one_minus(&[-1]).exp_substitute(&[1], 2);
        assert_eq!(s.coeffs(), &[rat(0), rat(1), deltak::algebra::frac(-1, 2)]);
        let s = LaurentPoly::constant(1, rat(5)).exp_substitute(&[3], 2);
        assert_eq!(s.coeffs(), &[rat(5), rat(0), rat(0)]);
    }
}

mod series {
    use deltak::algebra::series::*;

    use deltak::algebra::Rational;
    use num_traits::One;

    use deltak::algebra::laurent::LaurentPoly;
    use deltak::algebra::{frac, rat};

    /// Invert `1 - e^{-s}` by plain series division (independent of the
    /// Todd cache).
    fn divide_oracle(order: usize) -> Vec<Rational> {
        // 1 - e^{-s} = s * g(s), g = sum (-1)^k s^k/(k+1)!
        let mut g = Vec::new();
        let mut fact = Rational::one();
        for k in 0..=order + 1 {
            fact *= rat(k as i64 + 1);
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            g.push(sign / &fact);
        }
        // h = 1/g by long division
        let mut h = vec![rat(0); order + 2];
        h[0] = rat(1) / &g[0];
        for k in 1..order + 2 {
            let mut acc = rat(0);
            for j in 1..=k {
                acc += &g[j] * &h[k - j];
            }
            h[k] = -acc / &g[0];
        }
        h
    }

    #[test]
    fn inverse_euler_factor_unit_weight() {
        let s = inv_one_minus_exp(&rat(1), 1).unwrap();
        assert_eq!(s.valuation(), -1);
        let oracle = divide_oracle(2);
        assert_eq!(s.coeff(-1), oracle[0]);
        assert_eq!(s.coeff(0), oracle[1]);
        assert_eq!(s.coeff(1), oracle[2]);
        assert_eq!(s.coeff(0), frac(1, 2));
        assert_eq!(s.coeff(1), frac(1, 12));
    }

    #[test]
    fn inverse_euler_factor_leading_terms() {
        assert_eq!(inv_one_minus_exp(&rat(2), 0).unwrap().coeff(-1), frac(1, 2));
        assert_eq!(inv_one_minus_exp(&rat(-1), 0).unwrap().coeff(-1), rat(-1));
        assert!(inv_one_minus_exp(&rat(0), 2).is_err());
    }

    #[test]
    fn todd_known_values() {
        let t = todd_coefficients(4);
        assert_eq!(t, vec![rat(1), frac(1, 2), frac(1, 12), rat(0), frac(-1, 720)]);
    }

    #[test]
    fn inverse_times_factor_is_one() {
        for a in [1i64, -3, 7] {
            let order = 6;
            let inv = inv_one_minus_exp(&rat(a), order).unwrap();
            let f = LaurentPoly::one_minus(&[-1]).exp_substitute(&[a], (order + 1) as usize);
            let prod = &inv * &f;
            for e in 0..=prod.cap() {
                let expected = if e == 0 { rat(1) } else { rat(0) };
                assert_eq!(prod.coeff(e), expected, "a={a} e={e}");
            }
        }
    }

    #[test]
    fn precision_tracking() {
        let a = TruncSeries::new(-1, 3, vec![rat(1), rat(2), rat(3), rat(4), rat(5)]);
        let b = TruncSeries::new(0, 3, vec![rat(1), rat(1)]);
        let p = &a * &b;
        assert_eq!(p.valuation(), -1);
        assert_eq!(p.cap(), 2);
        assert_eq!(p.coeff(-1), rat(1));
        assert_eq!(p.coeff(0), rat(3));
    }
}

mod unipoly {
    use deltak::algebra::unipoly::*;

    use deltak::algebra::rat;
    use deltak::algebra::Rational;
    use deltak::error::Error;

    fn nodes(pairs: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        pairs.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            interpolate(&nodes(&[(0, 4), (1, 8)]), 1).unwrap(),
            UniPoly::from_ints(&[4, 4])
        );
        assert_eq!(
            interpolate(&nodes(&[(0, 1), (1, 4), (2, 9)]), 2).unwrap(),
            UniPoly::from_ints(&[1, 2, 1])
        );
        assert_eq!(
            interpolate(&nodes(&[(0, 4), (1, 16), (2, 36), (-1, 0)]), 2).unwrap(),
            UniPoly::from_ints(&[4, 8, 4])
        );
    }

    #[test]
    fn guard_node_detects_high_degree() {
        let err = interpolate(&nodes(&[(0, 0), (1, 1), (2, 8)]), 1).unwrap_err();
        assert!(matches!(err, Error::DegreeBound { .. }));
    }

    #[test]
    fn coefficient_map_roundtrip() {
        let p = UniPoly::from_ints(&[9, 16, 6, -1, 1, 1]);
        let m = p.to_coefficient_map();
        assert_eq!(m["3"], "-1");
        assert_eq!(UniPoly::from_coefficient_map(&m).unwrap(), p);
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[4, 8, 4]).to_string(), "4 + 8v + 4v^2");
        assert_eq!(UniPoly::from_ints(&[0, -1, 0, 1]).to_string(), "-v + v^3");
    }
}
