use std::collections::{BTreeMap, HashSet};

use deltak::algebra::{interpolate, rat, LaurentPoly, Rational, UniPoly};
use deltak::semigroup::{AffineSemigroup, RationalCone, SemigroupConfig};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, nvars), -3i64..=3), 0..5)
        .prop_map(move |terms| LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn direction(nvars: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, nvars)
}

fn nonzero_character(nvars: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-2i32..=2, nvars).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

/// Generators in the open half-space `x_0 > 0`, so the cone is pointed.
fn generators(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let g = (1i64..=2, prop::collection::vec(-2i64..=2, dim - 1)).prop_map(|(a, rest)| {
        let mut v = vec![a];
        v.extend(rest);
        v
    });
    prop::collection::vec(g, 1..=4)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Distinct elements of the monoid by level, by breadth-first search.
fn monoid_counts(gens: &[Vec<i64>], grading: &[i64], max_level: i64) -> Vec<BigInt> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![vec![0i64; gens[0].len()]];
    seen.insert(frontier[0].clone());
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
            if dot(&q, grading) <= max_level && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let mut counts = vec![BigInt::from(0); max_level as usize + 1];
    for p in seen {
        counts[dot(&p, grading) as usize] += 1;
    }
    counts
}

/// Lattice points of the cone by level, by scanning a box.
fn cone_counts(cone: &RationalCone, grading: &[i64], max_level: i64) -> Vec<BigInt> {
    let dim = cone.dim();
    let bound = max_level
        * cone
            .generators()
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or(1);
    let mut counts = vec![BigInt::from(0); max_level as usize + 1];
    let side = (2 * bound + 1) as usize;
    for idx in 0..side.pow(dim as u32) {
        let mut rest = idx;
        let p: Vec<i64> = (0..dim)
            .map(|_| {
                let v = (rest % side) as i64 - bound;
                rest /= side;
                v
            })
            .collect();
        let level = dot(&p, grading);
        if (0..=max_level).contains(&level) && cone.contains(&p) {
            counts[level as usize] += 1;
        }
    }
    counts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_substitute_is_a_ring_map(f in laurent(3), g in laurent(3), c in direction(3)) {
        let order = 4;
        let sum = (&f + &g).exp_substitute(&c, order);
        let sum_of = &f.exp_substitute(&c, order) + &g.exp_substitute(&c, order);
        prop_assert!(sum.agrees_with(&sum_of));
        let prod = (&f * &g).exp_substitute(&c, order);
        let prod_of = &f.exp_substitute(&c, order) * &g.exp_substitute(&c, order);
        prop_assert!(prod.agrees_with(&prod_of));
    }

    #[test]
    fn division_by_one_minus_character(f in laurent(3), v in nonzero_character(3)) {
        let multiple = &f * &LaurentPoly::one_minus(&v);
        prop_assert!(multiple.divisible_by_one_minus(&v));
        prop_assert_eq!(multiple.div_one_minus(&v), Some(f.clone()));
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        prop_assert_eq!(f.divisible_by_one_minus(&v), f.divisible_by_one_minus(&neg));
        prop_assert_eq!(f.divisible_by_one_minus(&v), f.div_one_minus(&v).is_some());
    }

    #[test]
    fn interpolation_recovers_polynomials(coeffs in prop::collection::vec(-9i64..=9, 1..7), guards in 1usize..3) {
        let p = UniPoly::from_ints(&coeffs);
        let bound = coeffs.len() - 1;
        let nodes: Vec<(Rational, Rational)> = (0..=bound + guards)
            .map(|k| {
                let x = rat(k as i64);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        prop_assert_eq!(interpolate(&nodes, bound).unwrap(), p.clone());

        let mut bad = nodes.clone();
        let last = bad.len() - 1;
        bad[last].1 += rat(1);
        prop_assert!(interpolate(&bad, bound).is_err());
    }

    #[test]
    fn semigroup_series_counts_elements(gens in generators(2), level in 3i64..=6) {
        let cfg = SemigroupConfig::default();
        let s = AffineSemigroup::new(2, gens.clone()).unwrap();
        let series = s.hilbert_series(&cfg).unwrap();
        let grading = s.grading().to_vec();
        prop_assert_eq!(
            series.graded_counts(&grading, level as usize),
            monoid_counts(&gens, &grading, level)
        );
    }

    #[test]
    fn semigroup_series_in_three_dimensions(gens in generators(3)) {
        let cfg = SemigroupConfig::default();
        let s = AffineSemigroup::new(3, gens.clone()).unwrap();
        let grading = s.grading().to_vec();
        prop_assert_eq!(
            s.hilbert_series(&cfg).unwrap().graded_counts(&grading, 4),
            monoid_counts(&gens, &grading, 4)
        );
    }

    #[test]
    fn cone_series_counts_lattice_points(gens in generators(2), level in 2i64..=5) {
        let cone = RationalCone::new(2, gens).unwrap();
        let grading = cone.grading();
        prop_assert_eq!(
            cone.hilbert_series().graded_counts(&grading, level as usize),
            cone_counts(&cone, &grading, level)
        );
    }

    #[test]
    fn membership_matches_enumeration(gens in generators(2), x in -4i64..=4, y in -6i64..=6) {
        let cfg = SemigroupConfig::default();
        let s = AffineSemigroup::new(2, gens.clone()).unwrap();
        let target = vec![x, y];
        let level = dot(&target, s.grading());
        let reachable = level >= 0 && {
            let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
            let mut frontier = vec![vec![0, 0]];
            seen.insert(vec![0, 0], ());
            while let Some(p) = frontier.pop() {
                for g in &gens {
                    let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
                    if dot(&q, s.grading()) <= level && seen.insert(q.clone(), ()).is_none() {
                        frontier.push(q);
                    }
                }
            }
            seen.contains_key(&target)
        };
        prop_assert_eq!(s.member(&target, &cfg).unwrap(), reachable);
    }
}
