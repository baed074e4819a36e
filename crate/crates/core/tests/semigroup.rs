mod monoid {
    use deltak::semigroup::*;

    use deltak::algebra::{LaurentPoly, Rational};
    use num_traits::One;
    use std::collections::HashSet;

    use deltak::geometry::lattice::dot;

    use num_bigint::BigInt;

    fn brute_semigroup_counts(s: &AffineSemigroup, max_level: usize) -> Vec<BigInt> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier = vec![vec![0; s.dim()]];
        seen.insert(vec![0; s.dim()]);
        while let Some(p) = frontier.pop() {
            for g in s.generators() {
                let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
                if dot(s.grading(), &q) as usize <= max_level && seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let mut counts = vec![BigInt::from(0); max_level + 1];
        for p in seen {
            counts[dot(s.grading(), &p) as usize] += 1;
        }
        counts
    }

    #[test]
    fn two_three() {
        let s = AffineSemigroup::new(1, vec![vec![2], vec![3]]).unwrap();
        let cfg = SemigroupConfig::default();
        let k = s.k_polynomial(&cfg).unwrap();
        let mut expect = LaurentPoly::one(1);
        expect.add_term(vec![-6], -Rational::one());
        assert_eq!(k, expect);
        assert!(!s.member(&[1], &cfg).unwrap());
        assert!(s.member(&[5], &cfg).unwrap());
        let h = s.hilbert_series(&cfg).unwrap();
        assert_eq!(h.graded_counts(s.grading(), 12), brute_semigroup_counts(&s, 12));
    }

    #[test]
    fn square_relation() {
        let s = AffineSemigroup::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let k = s.k_polynomial(&SemigroupConfig::default()).unwrap();
        let mut expect = LaurentPoly::one(2);
        expect.add_term(vec![-1, -1], -Rational::one());
        assert_eq!(k, expect);
    }

    #[test]
    fn free_semigroup_and_gap() {
        let s = AffineSemigroup::new(3, vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, 1, 1]]).unwrap();
        let cfg = SemigroupConfig::default();
        assert_eq!(s.k_polynomial(&cfg).unwrap(), LaurentPoly::one(3));
        assert!(!s.member(&[-1, 1, 1], &cfg).unwrap());
        assert!(s.member(&[0, 1, 1], &cfg).unwrap());
    }

    #[test]
    fn minimal_generators_drop_sums() {
        let s = AffineSemigroup::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            s.minimal_generators(&SemigroupConfig::default()).unwrap(),
            vec![vec![0, 1], vec![1, 0]]
        );
    }
}

mod ample {
    use deltak::semigroup::ample::*;

    use deltak::semigroup::{LatticeChoice, SemigroupConfig};

    use deltak::delta::DeltaMatroid;

    fn first_example() -> DeltaMatroid {
        DeltaMatroid::from_sets(3, &[vec![1, 2, 3], vec![1], vec![2], vec![3]]).unwrap()
    }

    #[test]
    fn tangent_cone_generators() {
        let d = first_example();
        let mut g = tangent_generators(&d, 0b001).unwrap();
        g.sort();
        assert_eq!(g, vec![vec![-1, 0, 1], vec![-1, 1, 0], vec![0, 1, 1]]);
        let seg = DeltaMatroid::new(1, &[0, 1]).unwrap();
        assert_eq!(tangent_generators(&seg, 0).unwrap(), vec![vec![1]]);
        let single = DeltaMatroid::new(2, &[0b01]).unwrap();
        assert!(tangent_generators(&single, 0b01).unwrap().is_empty());
        assert!(tangent_generators(&single, 0).is_err());
    }

    #[test]
    fn very_ampleness() {
        let cfg = SemigroupConfig::default();
        let seg = DeltaMatroid::new(1, &[0, 1]).unwrap();
        assert!(
            is_very_ample(&seg, LatticeChoice::Standard, &cfg)
                .unwrap()
                .very_ample
        );
        let r = is_very_ample(&first_example(), LatticeChoice::Standard, &cfg).unwrap();
        assert!(!r.very_ample);
        assert!(r.gaps.contains(&GapWitness {
            vertex: 0b001,
            point: vec![-1, 1, 1]
        }));
    }

    #[test]
    fn normality_levels() {
        let seg = DeltaMatroid::new(1, &[0, 1]).unwrap();
        assert!(is_normal_bounded(&seg, 2));
        let single = DeltaMatroid::new(3, &[0b101]).unwrap();
        assert!(is_normal_bounded(&single, 3));
        assert!(!is_normal_bounded(&first_example(), 2));
    }
}

mod cone {
    use deltak::semigroup::cone::*;
    use num_bigint::BigInt;

    use num_traits::Zero;

    use deltak::algebra::{LaurentPoly, Rational};

    use deltak::geometry::lattice::dot;

    fn brute_counts(cone: &RationalCone, grading: &[i64], max_level: usize, bound: i64) -> Vec<BigInt> {
        let d = cone.dim();
        let mut counts = vec![BigInt::zero(); max_level + 1];
        let mut x = vec![-bound; d];
        loop {
            let level = dot(&x, grading);
            if level >= 0 && level as usize <= max_level && cone.contains(&x) {
                counts[level as usize] += 1;
            }
            let mut i = 0;
            loop {
                if i == d {
                    return counts;
                }
                x[i] += 1;
                if x[i] <= bound {
                    break;
                }
                x[i] = -bound;
                i += 1;
            }
        }
    }

    #[test]
    fn ray_in_dimension_one() {
        let c = RationalCone::new(1, vec![vec![1]]).unwrap();
        let h = c.hilbert_series();
        assert_eq!(h.pieces.len(), 1);
        assert_eq!(h.pieces[0].numerator, LaurentPoly::one(1));
        assert_eq!(h.pieces[0].denominators, vec![vec![1]]);
    }

    #[test]
    fn index_two_cone() {
        let c = RationalCone::new(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        let h = c.hilbert_series();
        assert_eq!(h.pieces.len(), 1);
        let mut expect = LaurentPoly::one(2);
        expect.add_term(vec![-1, -1], Rational::from_integer(1.into()));
        assert_eq!(h.pieces[0].numerator, expect);
        assert_eq!(
            c.hilbert_basis(LatticeChoice::Standard),
            vec![vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        let e = RationalCone::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            e.hilbert_basis(LatticeChoice::Standard),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn tangent_cone_of_the_first_example() {
        let c = RationalCone::new(3, vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, 1, 1]]).unwrap();
        let h = c.hilbert_series();
        assert!(h.pieces[0].numerator.contains_monomial(&[1, -1, -1]));
        assert!(c.hilbert_basis(LatticeChoice::Standard).contains(&vec![-1, 1, 1]));
        assert_eq!(c.hilbert_basis(LatticeChoice::GeneratorSpan).len(), 3);
    }

    #[test]
    fn non_simplicial_cone_matches_brute_force() {
        // square pyramid
        let c = RationalCone::new(
            3,
            vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]],
        )
        .unwrap();
        let h = c.hilbert_series();
        assert_eq!(h.pieces.len(), 2);
        let g = vec![0, 0, 1];
        assert_eq!(h.graded_counts(&g, 6), brute_counts(&c, &g, 6, 6));
    }

    #[test]
    fn origin_and_lower_dimensional_cones() {
        let c = RationalCone::new(3, vec![]).unwrap();
        let h = c.hilbert_series();
        assert_eq!(h.pieces[0].numerator, LaurentPoly::one(3));
        assert!(h.pieces[0].denominators.is_empty());
        let c = RationalCone::new(3, vec![vec![1, 1, 0], vec![1, -1, 0]]).unwrap();
        let g = vec![1, 0, 0];
        assert_eq!(
            c.hilbert_series().graded_counts(&g, 8),
            brute_counts(&c, &g, 8, 8)
        );
        assert!(RationalCone::new(1, vec![vec![1], vec![-1]]).is_err());
    }
}

mod toric {
    use deltak::semigroup::toric::*;

    use num_bigint::BigInt;

    #[test]
    fn monomial_ideal_k_polynomials() {
        // (x^2) in one variable: 1 - y^2
        let k = k_polynomial(&[vec![2]], 1);
        assert_eq!(k.len(), 2);
        assert_eq!(k[&vec![2]], BigInt::from(-1));
        // (xy, xz): 1 - xy - xz + xyz
        let k = k_polynomial(&[vec![1, 1, 0], vec![1, 0, 1]], 3);
        assert_eq!(k[&vec![1, 1, 0]], BigInt::from(-1));
        assert_eq!(k[&vec![1, 0, 1]], BigInt::from(-1));
        assert_eq!(k[&vec![1, 1, 1]], BigInt::from(1));
        assert_eq!(k.len(), 4);
    }

    #[test]
    fn numerical_semigroup_two_three() {
        let lead = toric_initial_ideal(&[vec![2], vec![3]], 1, &[1], 1000).unwrap();
        assert_eq!(lead.len(), 1);
        let total: u32 = lead[0].iter().sum();
        assert!(total == 2 || total == 3);
    }

    #[test]
    fn free_semigroup_has_no_relations() {
        let gens = vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, 1, 1]];
        assert!(toric_initial_ideal(&gens, 3, &[0, 1, 1], 1000)
            .unwrap()
            .is_empty());
    }
}

mod budgets {
    use deltak::error::Error;
    use deltak::semigroup::{AffineSemigroup, SemigroupConfig};

    #[test]
    fn too_many_generators_is_a_resource_error() {
        let gens: Vec<Vec<i64>> = (1..=5).map(|k| vec![1, k]).collect();
        let s = AffineSemigroup::new(2, gens).unwrap();
        let cfg = SemigroupConfig {
            max_generators: 4,
            ..SemigroupConfig::default()
        };
        assert!(matches!(s.k_polynomial(&cfg), Err(Error::Resource(_))));
        let small = s.minimized(&cfg).unwrap();
        assert_eq!(
            small.generators(),
            &[vec![1, 1], vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 5]][..]
        );
    }
}
