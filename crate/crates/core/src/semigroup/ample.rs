//! Tangent cones of base polytopes and very-ampleness certificates.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{AffineSemigroup, LatticeChoice, RationalCone, SemigroupConfig};
use crate::algebra::Rational;
use crate::delta::{indicator, subset_elements, DeltaMatroid, Subset};
use crate::error::{Error, Result};
use crate::geometry::lp::solve_nonneg;

/// Generators `e_{S'} - e_S` of the tangent cone at the vertex `e_S`.
pub fn tangent_generators(d: &DeltaMatroid, s: Subset) -> Result<Vec<Vec<i64>>> {
    if !d.is_feasible(s) {
        return Err(Error::invalid(format!(
            "{:?} is not feasible",
            subset_elements(s, d.n())
        )));
    }
    let base = indicator(s, d.n());
    Ok(d.feasible()
        .iter()
        .filter(|&&t| t != s)
        .map(|&t| {
            indicator(t, d.n())
                .iter()
                .zip(&base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect())
}

/// The cone `R≥0 {P(D) - e_S}`.
pub fn tangent_cone(d: &DeltaMatroid, s: Subset) -> Result<RationalCone> {
    RationalCone::new(d.n(), tangent_generators(d, s)?)
}

/// The semigroup generated by the lattice points of `P(D) - e_S`. All
/// lattice points of a 0/1 polytope are vertices.
pub fn vertex_semigroup(d: &DeltaMatroid, s: Subset) -> Result<AffineSemigroup> {
    AffineSemigroup::new(d.n(), tangent_generators(d, s)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub vertex: Subset,
    /// A Hilbert-basis element of the tangent cone outside the semigroup.
    pub point: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmpleReport {
    pub very_ample: bool,
    pub gaps: Vec<GapWitness>,
}

/// Check very-ampleness vertex by vertex: every Hilbert-basis element of
/// each tangent cone must lie in the vertex semigroup.
pub fn is_very_ample(d: &DeltaMatroid, lattice: LatticeChoice, cfg: &SemigroupConfig) -> Result<AmpleReport> {
    let per_vertex: Vec<Result<Vec<GapWitness>>> = d
        .feasible()
        .par_iter()
        .map(|&s| {
            if d.feasible().len() == 1 {
                return Ok(Vec::new());
            }
            let cone = tangent_cone(d, s)?;
            let semigroup = vertex_semigroup(d, s)?;
            let mut gaps = Vec::new();
            for h in cone.hilbert_basis(lattice) {
                if !semigroup.member(&h, cfg)? {
                    gaps.push(GapWitness { vertex: s, point: h });
                }
            }
            Ok(gaps)
        })
        .collect();
    let mut gaps = Vec::new();
    for r in per_vertex {
        gaps.extend(r?);
    }
    Ok(AmpleReport {
        very_ample: gaps.is_empty(),
        gaps,
    })
}

fn in_dilate(vertices: &[Vec<i64>], level: i64, x: &[i64]) -> bool {
    let n = x.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            vertices
                .iter()
                .map(|v| Rational::from_integer(v[i].into()))
                .collect()
        })
        .collect();
    a.push(vec![Rational::from_integer(1.into()); vertices.len()]);
    let mut b: Vec<Rational> = x.iter().map(|&v| Rational::from_integer(v.into())).collect();
    b.push(Rational::from_integer(level.into()));
    solve_nonneg(&a, &b).is_some()
}

/// Whether `(lP) ∩ Z^n` equals the `l`-fold vertex sums for every
/// `l = 2..=max_level`. A `true` answer says nothing beyond `max_level`.
pub fn is_normal_bounded(d: &DeltaMatroid, max_level: usize) -> bool {
    let n = d.n();
    let vertices: Vec<Vec<i64>> = d.feasible().iter().map(|&s| indicator(s, n)).collect();
    let mut sums: BTreeSet<Vec<i64>> = vertices.iter().cloned().collect();
    for level in 2..=max_level as i64 {
        let next: BTreeSet<Vec<i64>> = sums
            .iter()
            .flat_map(|p| {
                vertices
                    .iter()
                    .map(move |v| p.iter().zip(v).map(|(a, b)| a + b).collect::<Vec<i64>>())
            })
            .collect();
        sums = next;
        // lattice points of the dilate lie in the box [0, level]^n
        let mut x = vec![0i64; n];
        loop {
            if !sums.contains(&x) && in_dilate(&vertices, level, &x) {
                return false;
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                x[i] += 1;
                if x[i] <= level {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    true
}
