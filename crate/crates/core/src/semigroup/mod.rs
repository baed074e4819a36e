//! Cones, affine semigroups, and polytope normality checks.

pub mod ample;
pub mod cone;
pub mod toric;

pub use ample::{is_normal_bounded, is_very_ample, tangent_cone, vertex_semigroup, AmpleReport, GapWitness};
pub use cone::{HilbertPiece, HilbertSeriesRep, LatticeChoice, RationalCone, Triangulation};

use std::collections::HashSet;

use num_traits::One;

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::geometry::lattice::dot;
use crate::geometry::lp::{in_cone, positive_grading};

/// Resource budgets for semigroup computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupConfig {
    pub max_generators: usize,
    pub max_pairs: usize,
    pub max_states: usize,
}

impl Default for SemigroupConfig {
    fn default() -> Self {
        SemigroupConfig {
            max_generators: 16,
            max_pairs: 2_000_000,
            max_states: 5_000_000,
        }
    }
}

/// The monoid `N A` for a finite `A ⊂ Z^dim` inside a pointed cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<Vec<i64>>,
    grading: Vec<i64>,
}

impl AffineSemigroup {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::invalid(format!(
                "generator {g:?} is not in dimension {dim}"
            )));
        }
        if generators.iter().any(|g| g.iter().all(|&x| x == 0)) {
            return Err(Error::invalid("zero is not allowed as a semigroup generator"));
        }
        let grading = positive_grading(&generators, dim)
            .ok_or_else(|| Error::invalid("generators admit no positive grading"))?;
        Ok(AffineSemigroup {
            dim,
            generators,
            grading,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Integral functional positive on every generator.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    /// Decide `x ∈ N A` by dynamic programming over grading levels.
    pub fn member(&self, x: &[i64], cfg: &SemigroupConfig) -> Result<bool> {
        if x.iter().all(|&v| v == 0) {
            return Ok(true);
        }
        if !in_cone(&self.generators, x) {
            return Ok(false);
        }
        self.member_excluding(x, None, cfg)
    }

    fn member_excluding(&self, x: &[i64], skip: Option<usize>, cfg: &SemigroupConfig) -> Result<bool> {
        let target_level = dot(&self.grading, x);
        let gens: Vec<&Vec<i64>> = self
            .generators
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .map(|(_, g)| g)
            .collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; self.dim]];
        seen.insert(vec![0; self.dim]);
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q: Vec<i64> = p.iter().zip(g.iter()).map(|(a, b)| a + b).collect();
                if q == x {
                    return Ok(true);
                }
                if dot(&self.grading, &q) >= target_level || seen.contains(&q) {
                    continue;
                }
                if seen.len() >= cfg.max_states {
                    return Err(Error::Resource(format!(
                        "membership search exceeded {} states",
                        cfg.max_states
                    )));
                }
                seen.insert(q.clone());
                frontier.push(q);
            }
        }
        Ok(false)
    }

    /// The irreducible elements of `A` (the minimal generating set of `N A`),
    /// deduplicated and sorted.
    pub fn minimal_generators(&self, cfg: &SemigroupConfig) -> Result<Vec<Vec<i64>>> {
        let mut uniq = self.generators.clone();
        uniq.sort();
        uniq.dedup();
        let reduced = AffineSemigroup {
            dim: self.dim,
            generators: uniq.clone(),
            grading: self.grading.clone(),
        };
        let mut out = Vec::new();
        for (i, g) in uniq.iter().enumerate() {
            if !reduced.member_excluding(g, Some(i), cfg)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    /// The same monoid presented by its minimal generators.
    pub fn minimized(&self, cfg: &SemigroupConfig) -> Result<Self> {
        Ok(AffineSemigroup {
            dim: self.dim,
            generators: self.minimal_generators(cfg)?,
            grading: self.grading.clone(),
        })
    }

    /// `sum_{m ∈ N A} T^{-m}` as `K(T) / prod_{a ∈ A} (1 - T^{-a})`, where
    /// `K` is the multigraded K-polynomial of the toric ideal.
    pub fn hilbert_series(&self, cfg: &SemigroupConfig) -> Result<HilbertSeriesRep> {
        let numerator = self.k_polynomial(cfg)?;
        Ok(HilbertSeriesRep {
            dim: self.dim,
            pieces: vec![HilbertPiece {
                numerator,
                denominators: self.generators.clone(),
            }],
        })
    }

    /// The K-polynomial with `y^u` read as `T^{-A u}`.
    pub fn k_polynomial(&self, cfg: &SemigroupConfig) -> Result<LaurentPoly> {
        let k = self.generators.len();
        if k > cfg.max_generators {
            return Err(Error::Resource(format!(
                "{k} semigroup generators exceed the bound {}",
                cfg.max_generators
            )));
        }
        let lead = toric::toric_initial_ideal(&self.generators, self.dim, &self.grading, cfg.max_pairs)?;
        let ypoly = toric::k_polynomial(&lead, k);
        let mut out = LaurentPoly::zero(self.dim);
        for (u, c) in ypoly {
            let e: Vec<i32> = (0..self.dim)
                .map(|i| {
                    -(u.iter()
                        .zip(&self.generators)
                        .map(|(&m, g)| m as i64 * g[i])
                        .sum::<i64>() as i32)
                })
                .collect();
            out.add_term(e, Rational::from_integer(c));
        }
        if out.is_zero() {
            return Err(Error::consistency("K-polynomial vanished"));
        }
        Ok(out)
    }
}

/// Convenience: `1` as the Hilbert series of the trivial monoid.
pub fn trivial_series(dim: usize) -> HilbertSeriesRep {
    HilbertSeriesRep {
        dim,
        pieces: vec![HilbertPiece {
            numerator: LaurentPoly::constant(dim, Rational::one()),
            denominators: Vec::new(),
        }],
    }
}
