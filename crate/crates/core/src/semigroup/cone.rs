//! Rational polyhedral cones: extreme rays, half-open placing
//! triangulations, Hilbert series and Hilbert bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::geometry::lattice::{diagonalize, dot, primitive, saturation_basis, span_basis, to_big};
use crate::geometry::linalg::{self, solve};
use crate::geometry::lp::{in_cone, positive_grading};

/// A pointed cone `R≥0{generators}` in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
}

/// Which lattice a Hilbert basis is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeChoice {
    /// `Z^dim` intersected with the span of the cone.
    Standard,
    /// The lattice generated by the cone's generators.
    GeneratorSpan,
}

impl RationalCone {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::invalid(format!(
                "generator {g:?} is not in dimension {dim}"
            )));
        }
        let generators: Vec<Vec<i64>> = generators
            .into_iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        if positive_grading(&generators, dim).is_none() {
            return Err(Error::invalid("cone is not pointed"));
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        in_cone(&self.generators, x)
    }

    /// Primitive extreme rays, sorted.
    pub fn extreme_rays(&self) -> Vec<Vec<i64>> {
        let dirs: BTreeSet<Vec<i64>> = self.generators.iter().map(|g| primitive(g)).collect();
        let dirs: Vec<Vec<i64>> = dirs.into_iter().collect();
        dirs.iter()
            .enumerate()
            .filter(|(i, d)| {
                let others: Vec<Vec<i64>> = dirs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| j != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                !in_cone(&others, d)
            })
            .map(|(_, d)| d.clone())
            .collect()
    }

    /// A positive grading: `<l, g> >= 1` on every generator.
    pub fn grading(&self) -> Vec<i64> {
        positive_grading(&self.generators, self.dim).expect("pointed")
    }

    /// Half-open placing triangulation of the extreme rays, in coordinates
    /// of the chosen lattice.
    pub fn triangulation(&self, lattice: LatticeChoice) -> Triangulation {
        let rays = self.extreme_rays();
        let basis = match lattice {
            LatticeChoice::Standard => saturation_basis(&rays, self.dim),
            LatticeChoice::GeneratorSpan => span_basis(&self.generators, self.dim),
        };
        Triangulation::new(self.dim, basis, rays)
    }

    /// Hilbert series `sum_{m in C ∩ Z^dim} T^{-m}` as a disjoint sum of
    /// simplicial pieces.
    pub fn hilbert_series(&self) -> HilbertSeriesRep {
        let tri = self.triangulation(LatticeChoice::Standard);
        let pieces = tri
            .simplices
            .iter()
            .map(|s| {
                let mut num = LaurentPoly::zero(self.dim);
                for p in tri.parallelepiped(s) {
                    let e: Vec<i32> = tri.to_ambient(&p).iter().map(|&x| -(x as i32)).collect();
                    num.add_term(e, Rational::from_integer(1.into()));
                }
                HilbertPiece {
                    numerator: num,
                    denominators: s.rays.iter().map(|&r| tri.rays[r].clone()).collect(),
                }
            })
            .collect();
        HilbertSeriesRep {
            dim: self.dim,
            pieces,
        }
    }

    /// The minimal generating set of the monoid `C ∩ L`.
    pub fn hilbert_basis(&self, lattice: LatticeChoice) -> Vec<Vec<i64>> {
        let tri = self.triangulation(lattice);
        let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
        for s in &tri.simplices {
            let closed = Simplex {
                rays: s.rays.clone(),
                open: vec![false; s.rays.len()],
            };
            for p in tri.parallelepiped(&closed) {
                if p.iter().any(|&x| x != 0) {
                    candidates.insert(p);
                }
            }
            for &r in &s.rays {
                candidates.insert(tri.coords[r].clone());
            }
        }
        let cands: Vec<Vec<i64>> = candidates.into_iter().collect();
        let cone_coords: Vec<Vec<i64>> = tri.coords.clone();
        let irreducible: Vec<Vec<i64>> = cands
            .iter()
            .filter(|x| {
                !cands.iter().any(|y| {
                    if y == *x {
                        return false;
                    }
                    let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    in_cone(&cone_coords, &diff)
                })
            })
            .cloned()
            .collect();
        let mut out: Vec<Vec<i64>> = irreducible.iter().map(|p| tri.to_ambient(p)).collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    /// Indices into the triangulation's rays.
    pub rays: Vec<usize>,
    /// `open[j]`: the facet opposite `rays[j]` is excluded.
    pub open: Vec<bool>,
}

/// Placing triangulation of a cone in lattice coordinates.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub ambient_dim: usize,
    /// Lattice basis in ambient coordinates.
    pub basis: Vec<Vec<i64>>,
    /// Rays in ambient coordinates.
    pub rays: Vec<Vec<i64>>,
    /// Rays in lattice coordinates.
    pub coords: Vec<Vec<i64>>,
    pub simplices: Vec<Simplex>,
}

fn inner_normal(coords: &[Vec<i64>], simplex: &[usize], drop: usize, d: usize) -> Vec<i64> {
    let facet: Vec<Vec<i64>> = simplex
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != drop)
        .map(|(_, &r)| coords[r].clone())
        .collect();
    let h = linalg::normal(&facet, d);
    if dot(&h, &coords[simplex[drop]]) < 0 {
        h.iter().map(|x| -x).collect()
    } else {
        h
    }
}

/// Sign of `<h, q + ε e_1 + ε² e_2 + ...>` for infinitesimal `ε`.
fn perturbed_sign(h: &[i64], q: &[i64]) -> i64 {
    let s = dot(h, q).signum();
    if s != 0 {
        return s;
    }
    h.iter().find(|&&x| x != 0).map_or(0, |x| x.signum())
}

impl Triangulation {
    fn new(ambient_dim: usize, basis: Vec<Vec<i64>>, rays: Vec<Vec<i64>>) -> Self {
        let d = basis.len();
        // primitive ray generators with respect to the lattice
        let coords: Vec<Vec<i64>> = rays
            .iter()
            .map(|r| {
                let x = solve(&basis, r).expect("ray lies in the lattice span");
                let den = x.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
                let ints: Vec<i64> = x
                    .iter()
                    .map(|q| (q.numer() * (&den / q.denom())).to_i64().unwrap())
                    .collect();
                primitive(&ints)
            })
            .collect();
        let rays: Vec<Vec<i64>> = coords
            .iter()
            .map(|c| {
                (0..ambient_dim)
                    .map(|i| c.iter().zip(&basis).map(|(a, b)| a * b[i]).sum())
                    .collect()
            })
            .collect();
        let mut tri = Triangulation {
            ambient_dim,
            basis,
            rays,
            coords,
            simplices: Vec::new(),
        };
        if d == 0 {
            tri.simplices.push(Simplex {
                rays: Vec::new(),
                open: Vec::new(),
            });
            return tri;
        }
        // initial simplex: first d independent rays
        let mut initial: Vec<usize> = Vec::new();
        for i in 0..tri.coords.len() {
            let mut trial: Vec<Vec<i64>> = initial.iter().map(|&j| tri.coords[j].clone()).collect();
            trial.push(tri.coords[i].clone());
            if linalg::rank(&trial) == trial.len() {
                initial.push(i);
            }
            if initial.len() == d {
                break;
            }
        }
        let mut simplices: Vec<Vec<usize>> = vec![initial.clone()];
        for r in 0..tri.coords.len() {
            if initial.contains(&r) {
                continue;
            }
            // boundary facets: those belonging to exactly one simplex
            let mut owners: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
            for (si, s) in simplices.iter().enumerate() {
                for drop in 0..d {
                    let mut f: Vec<usize> = s.clone();
                    f.remove(drop);
                    f.sort_unstable();
                    owners.entry(f).or_default().push((si, drop));
                }
            }
            let mut added = Vec::new();
            for (facet, own) in &owners {
                if own.len() != 1 {
                    continue;
                }
                let (si, drop) = own[0];
                let h = inner_normal(&tri.coords, &simplices[si], drop, d);
                if dot(&h, &tri.coords[r]) < 0 {
                    let mut s = facet.clone();
                    s.push(r);
                    s.sort_unstable();
                    added.push(s);
                }
            }
            simplices.extend(added);
        }
        let q: Vec<i64> = (0..d).map(|i| tri.coords.iter().map(|c| c[i]).sum()).collect();
        tri.simplices = simplices
            .into_iter()
            .map(|s| {
                let open = (0..d)
                    .map(|j| perturbed_sign(&inner_normal(&tri.coords, &s, j, d), &q) < 0)
                    .collect();
                Simplex { rays: s, open }
            })
            .collect();
        tri
    }

    pub fn lattice_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_ambient(&self, p: &[i64]) -> Vec<i64> {
        (0..self.ambient_dim)
            .map(|i| p.iter().zip(&self.basis).map(|(c, b)| c * b[i]).sum())
            .collect()
    }

    /// `|det|` of the simplex in lattice coordinates.
    pub fn index(&self, s: &Simplex) -> u64 {
        let rows: Vec<Vec<i64>> = (0..self.lattice_dim())
            .map(|i| s.rays.iter().map(|&r| self.coords[r][i]).collect())
            .collect();
        linalg::det(&rows).unsigned_abs() as u64
    }

    /// Lattice points `sum λ_j r_j` with `λ_j ∈ [0, 1)`, or `(0, 1]` on open
    /// facets, in lattice coordinates.
    pub fn parallelepiped(&self, s: &Simplex) -> Vec<Vec<i64>> {
        let d = self.lattice_dim();
        if d == 0 {
            return vec![Vec::new()];
        }
        let cols: Vec<Vec<i64>> = s.rays.iter().map(|&r| self.coords[r].clone()).collect();
        let mat: Vec<Vec<i64>> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let diag = diagonalize(&to_big(&mat), d, d);
        let moduli: Vec<i64> = diag.diag.iter().map(|x| x.to_i64().unwrap()).collect();
        let mut out = Vec::new();
        let mut k = vec![0i64; d];
        loop {
            // representative x = U^{-1} k
            let x: Vec<i64> = (0..d)
                .map(|i| {
                    let v: BigInt = (0..d).map(|j| &diag.u_inv[i][j] * BigInt::from(k[j])).sum();
                    v.to_i64().unwrap()
                })
                .collect();
            let lambda = solve(&cols, &x).expect("simplex is full-dimensional");
            let fracs: Vec<Rational> = lambda
                .iter()
                .enumerate()
                .map(|(j, l)| {
                    let f = l - l.floor();
                    if f.is_zero() && s.open[j] {
                        Rational::from_integer(1.into())
                    } else {
                        f
                    }
                })
                .collect();
            let p: Vec<i64> = (0..d)
                .map(|i| {
                    let v: Rational = fracs
                        .iter()
                        .zip(&cols)
                        .map(|(f, c)| f * Rational::from_integer(c[i].into()))
                        .sum();
                    assert!(v.is_integer());
                    v.to_integer().to_i64().unwrap()
                })
                .collect();
            out.push(p);
            // next k
            let mut i = 0;
            loop {
                if i == d {
                    out.sort();
                    return out;
                }
                k[i] += 1;
                if k[i] < moduli[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
        }
    }
}

/// One simplicial piece `numerator / prod_a (1 - T^{-a})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPiece {
    pub numerator: LaurentPoly,
    pub denominators: Vec<Vec<i64>>,
}

/// A Hilbert series `sum_m T^{-m}` as a sum of rational pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesRep {
    pub dim: usize,
    pub pieces: Vec<HilbertPiece>,
}

impl HilbertSeriesRep {
    /// Coefficients of `sum_m u^{<l, m>}` for levels `0..=max_level`, with
    /// `T^{-m}` read as `u^{<l,m>}`. Every denominator must have positive
    /// degree under `l`.
    pub fn graded_counts(&self, grading: &[i64], max_level: usize) -> Vec<BigInt> {
        let mut total = vec![BigInt::zero(); max_level + 1];
        for piece in &self.pieces {
            let mut series = vec![BigInt::zero(); max_level + 1];
            for (e, c) in piece.numerator.terms() {
                let level: i64 = -e.iter().zip(grading).map(|(&a, &b)| a as i64 * b).sum::<i64>();
                assert!(level >= 0, "numerator term below level zero");
                if (level as usize) <= max_level {
                    series[level as usize] += c.to_integer();
                }
            }
            for a in &piece.denominators {
                let step = dot(a, grading);
                assert!(step > 0, "denominator {a:?} has nonpositive degree");
                let step = step as usize;
                for k in step..=max_level {
                    let prev = series[k - step].clone();
                    series[k] += prev;
                }
            }
            for (t, s) in total.iter_mut().zip(series) {
                *t += s;
            }
        }
        total
    }
}
