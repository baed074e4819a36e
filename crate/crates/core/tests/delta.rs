mod family {
    use deltak::delta::*;

    use deltak::algebra::UniPoly;

    use deltak::typeb::SignedPermutation;

    pub fn example_one() -> DeltaMatroid {
        DeltaMatroid::from_sets(3, &[vec![1, 2, 3], vec![1], vec![2], vec![3]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let f: Vec<Subset> = [vec![1, 2, 3], vec![1], vec![2], vec![3]]
            .iter()
            .map(|s| subset_from_elements(s))
            .collect();
        assert!(validate(3, &f).unwrap().valid);
        assert!(validate(3, &[0]).unwrap().valid);
        let v = validate(3, &[0, 0b111]).unwrap();
        assert!(!v.valid);
        assert_eq!(v.violating_edge, Some((0, 0b111)));
        assert!(validate(3, &[]).is_err());
    }

    #[test]
    fn distances() {
        let d = example_one();
        assert_eq!(d.lattice_distance(0), 1);
        for &s in d.feasible() {
            assert_eq!(d.lattice_distance(s), 0);
        }
        let e = DeltaMatroid::new(3, &[0]).unwrap();
        assert_eq!(e.lattice_distance(0b111), 3);
    }

    #[test]
    fn interlace_examples() {
        assert_eq!(example_one().interlace(), UniPoly::from_ints(&[4, 4]));
        let e = DeltaMatroid::new(3, &[0]).unwrap();
        assert_eq!(e.interlace(), UniPoly::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn minimal_feasible_examples() {
        let d = DeltaMatroid::new(1, &[0, 1]).unwrap();
        let id = SignedPermutation::identity(1);
        assert_eq!(d.minimal_feasible(&id).unwrap(), 0);
        let bar = SignedPermutation::new(vec![-1]).unwrap();
        assert_eq!(d.minimal_feasible(&bar).unwrap(), 1);
        let w = SignedPermutation::new(vec![-1, -2, -3]).unwrap();
        assert_eq!(example_one().minimal_feasible(&w).unwrap(), 0b111);
    }

    #[test]
    fn tie_is_an_error() {
        let bad = DeltaMatroid::new_unchecked(3, &[0, 0b111]);
        let w = SignedPermutation::new(vec![3, -2, -1]).unwrap();
        // weights (-1, -2, 3) sum to zero, the value of ∅
        assert!(bad.minimal_feasible(&w).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = example_one();
        let j = serde_json::to_string(&d.to_json()).unwrap();
        let back: DeltaMatroidJson = serde_json::from_str(&j).unwrap();
        assert_eq!(DeltaMatroid::try_from(back).unwrap(), d);
        assert!(DeltaMatroid::from_sets(2, &[vec![3]]).is_err());
    }
}

mod enumerate {
    use deltak::delta::enumerate::*;

    use deltak::delta::DeltaMatroid;

    fn all(n: usize) -> Vec<DeltaMatroid> {
        enumerate_all(n, EnumerateOptions::default())
            .unwrap()
            .collect::<deltak::Result<Vec<_>>>()
            .unwrap()
    }

    #[test]
    fn n_one() {
        let d = all(1);
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn exchange_filter_matches_edge_test() {
        let opts = EnumerateOptions {
            cross_check: true,
            ..EnumerateOptions::default()
        };
        for (n, count) in [(1, 3), (2, 15), (3, 155)] {
            let checked: Vec<DeltaMatroid> = enumerate_all(n, opts)
                .unwrap()
                .collect::<deltak::Result<Vec<_>>>()
                .unwrap();
            assert_eq!(checked.len(), count);
            assert_eq!(checked, all(n));
        }
    }

    #[test]
    fn guard_on_large_n() {
        assert!(enumerate_all(5, EnumerateOptions::default()).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_random(3, 10, 7).unwrap();
        let b = sample_random(3, 10, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }
}

mod realize {
    use deltak::delta::realize::*;

    use deltak::delta::Subset;

    use deltak::delta::subset_from_elements;
    use deltak::error::Error;

    fn family(sets: &[&[usize]]) -> Vec<Subset> {
        let mut f: Vec<Subset> = sets.iter().map(|s| subset_from_elements(s)).collect();
        f.sort_unstable();
        f
    }

    #[test]
    fn single_unbarred_column() {
        let m = GroundMatrix::from_ints(Field::Rationals, 1, &[vec![0, 0, 1]]).unwrap();
        assert_eq!(from_matrix(&m).unwrap().feasible(), &family(&[&[1]])[..]);
    }

    #[test]
    fn rejects_non_isotropic_and_rank_deficient() {
        let m = GroundMatrix::from_ints(Field::Rationals, 1, &[vec![1, 0, 1]]).unwrap();
        assert!(matches!(from_matrix(&m), Err(Error::NotIsotropic { .. })));
        let m = GroundMatrix::from_ints(Field::Rationals, 1, &[vec![0, 0, 0]]).unwrap();
        assert!(matches!(from_matrix(&m), Err(Error::RankDeficient { .. })));
        // x0^2 = 1 over GF(2) as well
        let m = GroundMatrix::from_ints(Field::Gf2, 1, &[vec![0, 1, 0]]).unwrap();
        assert!(matches!(from_matrix(&m), Err(Error::NotIsotropic { .. })));
    }

    #[test]
    fn graph_examples() {
        let (d, _) = from_graph(2, &[(1, 2)]).unwrap();
        assert_eq!(d.feasible(), &family(&[&[], &[1, 2]])[..]);
        let (d, m) = from_graph(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(d.feasible(), &family(&[&[], &[1, 2], &[1, 3], &[2, 3]])[..]);
        assert_eq!(from_matrix(&m).unwrap(), d);
        assert!(from_graph(2, &[(1, 1)]).is_err());
        assert!(from_graph(2, &[(1, 2), (2, 1)]).is_err());
    }
}
