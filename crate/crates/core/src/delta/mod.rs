//! Delta-matroids and their purely combinatorial invariants.
//!
//! A maximal admissible subset `B` of `[n, n̄]` is stored by its unbarred
//! part `S = B ∩ [n]` as a bitmask (bit `i-1` for element `i`); the barred
//! part is the complement. The 0/1 vertex of the base polytope is `e_S`, and
//! the signed vertex of the doubled polytope is `e_B = 2 e_S - (1, ..., 1)`.

pub mod enumerate;
pub mod realize;

pub use enumerate::{enumerate_all, sample_random, EnumerateOptions};
pub use realize::{from_graph, from_matrix, Field, GraphJson, GroundMatrix, GroundMatrixJson};

use serde::{Deserialize, Serialize};

use crate::algebra::UniPoly;
use crate::error::{Error, Result};
use crate::geometry::lp::in_cone;
use crate::typeb::SignedPermutation;

/// Bitmask of a subset of `[n]`.
pub type Subset = u32;

/// Largest ground size the bitmask representation supports comfortably.
pub const MAX_N: usize = 16;

pub fn subset_from_elements(elems: &[usize]) -> Subset {
    elems.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

pub fn subset_elements(s: Subset, n: usize) -> Vec<usize> {
    (1..=n).filter(|&i| s & (1 << (i - 1)) != 0).collect()
}

/// The 0/1 vector `e_S`.
pub fn indicator(s: Subset, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(s & (1 << i) != 0)).collect()
}

/// The signed vector `e_B` of the maximal admissible set with unbarred part `s`.
pub fn signed_indicator(s: Subset, n: usize) -> Vec<i64> {
    (0..n).map(|i| if s & (1 << i) != 0 { 1 } else { -1 }).collect()
}

/// A delta-matroid on `[n, n̄]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMatroid {
    n: usize,
    feasible: Vec<Subset>,
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub valid: bool,
    /// An edge of the base polytope whose direction is not `e_i` or `e_i ± e_j`.
    pub violating_edge: Option<(Subset, Subset)>,
}

fn normalize(n: usize, family: &[Subset]) -> Result<Vec<Subset>> {
    if n == 0 || n > MAX_N {
        return Err(Error::invalid(format!(
            "ground size {n} out of range 1..={MAX_N}"
        )));
    }
    if family.is_empty() {
        return Err(Error::invalid("feasible family is empty"));
    }
    let full: Subset = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut f: Vec<Subset> = family.to_vec();
    if let Some(bad) = f.iter().find(|&&s| s & !full != 0) {
        return Err(Error::invalid(format!(
            "subset {bad:#b} is not contained in [{n}]"
        )));
    }
    f.sort_unstable();
    f.dedup();
    Ok(f)
}

/// Whether `[p, q]` is an edge of `conv{e_S : S in family}`. All 0/1 points
/// are vertices, so this holds iff `e_q - e_p` is an extreme ray of the
/// tangent cone at `e_p`.
fn is_edge(n: usize, family: &[Subset], p: Subset, q: Subset) -> bool {
    let ep = indicator(p, n);
    let diff = |s: Subset| -> Vec<i64> { indicator(s, n).iter().zip(&ep).map(|(a, b)| a - b).collect() };
    let others: Vec<Vec<i64>> = family
        .iter()
        .filter(|&&s| s != p && s != q)
        .map(|&s| diff(s))
        .collect();
    !in_cone(&others, &diff(q))
}

/// Check the polytope edge condition exactly.
///
/// Pairs at Hamming distance one or two always differ by an allowed
/// direction, so only pairs at distance three or more need the edge test.
pub fn validate(n: usize, family: &[Subset]) -> Result<Validation> {
    let f = normalize(n, family)?;
    for (i, &p) in f.iter().enumerate() {
        for &q in &f[i + 1..] {
            if (p ^ q).count_ones() >= 3 && is_edge(n, &f, p, q) {
                return Ok(Validation {
                    valid: false,
                    violating_edge: Some((p, q)),
                });
            }
        }
    }
    Ok(Validation {
        valid: true,
        violating_edge: None,
    })
}

/// Symmetric exchange: for feasible `S, S'` and `i ∈ S △ S'` there is
/// `j ∈ S △ S'` with `S △ {i, j}` feasible (`j = i` allowed).
pub fn satisfies_exchange(family: &[Subset]) -> bool {
    let mut sorted = family.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let contains = |s: Subset| sorted.binary_search(&s).is_ok();
    for &s in &sorted {
        for &t in &sorted {
            let d = s ^ t;
            let mut bits = d;
            while bits != 0 {
                let i = bits & bits.wrapping_neg();
                bits &= bits - 1;
                // j = i contributes the single flip S △ {i}
                let mut js = d;
                let mut ok = false;
                while js != 0 {
                    let j = js & js.wrapping_neg();
                    js &= js - 1;
                    let target = if i == j { s ^ i } else { s ^ i ^ j };
                    if contains(target) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

impl DeltaMatroid {
    /// Build and validate.
    pub fn new(n: usize, family: &[Subset]) -> Result<Self> {
        let v = validate(n, family)?;
        if !v.valid {
            let (p, q) = v.violating_edge.unwrap();
            return Err(Error::invalid(format!(
                "not a delta-matroid: edge between {:?} and {:?}",
                subset_elements(p, n),
                subset_elements(q, n)
            )));
        }
        Ok(Self::new_unchecked(n, family))
    }

    /// Build without the polytope check (the family is still normalized).
    pub fn new_unchecked(n: usize, family: &[Subset]) -> Self {
        let feasible = normalize(n, family).expect("well-formed family");
        DeltaMatroid { n, feasible }
    }

    pub fn from_sets(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        for s in sets {
            if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > n) {
                return Err(Error::invalid(format!("element {bad} outside [1, {n}]")));
            }
        }
        let fam: Vec<Subset> = sets.iter().map(|s| subset_from_elements(s)).collect();
        Self::new(n, &fam)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn feasible(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn is_feasible(&self, s: Subset) -> bool {
        self.feasible.binary_search(&s).is_ok()
    }

    pub fn feasible_sets(&self) -> Vec<Vec<usize>> {
        self.feasible
            .iter()
            .map(|&s| subset_elements(s, self.n))
            .collect()
    }

    /// Lattice distance from `e_S` to the base polytope.
    pub fn lattice_distance(&self, s: Subset) -> u32 {
        self.feasible
            .iter()
            .map(|&f| (s ^ f).count_ones())
            .min()
            .expect("nonempty family")
    }

    /// `Int(v) = sum_S v^{d(S)}`.
    pub fn interlace(&self) -> UniPoly {
        let mut counts = vec![0i64; self.n + 1];
        for s in 0..(1u32 << self.n) {
            counts[self.lattice_distance(s) as usize] += 1;
        }
        UniPoly::from_ints(&counts)
    }

    /// The feasible set whose vertex minimizes `<e_S, v>` over the interior of
    /// the cone `σ_w`, probed with `v = sum_k (n+1-k) ε_k e_{|w(k)|}`.
    pub fn minimal_feasible(&self, w: &SignedPermutation) -> Result<Subset> {
        let n = self.n as i64;
        let weights: Vec<i64> = {
            let mut v = vec![0i64; self.n];
            for (k, &img) in w.images().iter().enumerate() {
                let sign = if img > 0 { 1 } else { -1 };
                v[(img.unsigned_abs() - 1) as usize] = sign * (n - k as i64);
            }
            v
        };
        self.argmin(&weights)
    }

    /// Same as [`Self::minimal_feasible`], probing with `2^{n-k}` weights.
    pub fn minimal_feasible_alt(&self, w: &SignedPermutation) -> Result<Subset> {
        let mut v = vec![0i64; self.n];
        for (k, &img) in w.images().iter().enumerate() {
            let sign = if img > 0 { 1 } else { -1 };
            v[(img.unsigned_abs() - 1) as usize] = sign * (1i64 << (self.n - 1 - k));
        }
        self.argmin(&v)
    }

    fn argmin(&self, weights: &[i64]) -> Result<Subset> {
        let value = |s: Subset| -> i64 {
            (0..self.n)
                .filter(|&i| s & (1 << i) != 0)
                .map(|i| weights[i])
                .sum()
        };
        let mut best = self.feasible[0];
        let mut best_val = value(best);
        let mut tie = false;
        for &s in &self.feasible[1..] {
            let v = value(s);
            if v < best_val {
                best = s;
                best_val = v;
                tie = false;
            } else if v == best_val {
                tie = true;
            }
        }
        if tie {
            return Err(Error::consistency(format!(
                "minimizing vertex not unique for weights {weights:?}; family is not a delta-matroid"
            )));
        }
        Ok(best)
    }

    /// Whether `|S|` has constant parity over the feasible sets.
    pub fn is_even(&self) -> bool {
        let p = self.feasible[0].count_ones() % 2;
        self.feasible.iter().all(|s| s.count_ones() % 2 == p)
    }

    pub fn to_json(&self) -> DeltaMatroidJson {
        DeltaMatroidJson {
            n: self.n,
            feasible: self.feasible_sets(),
        }
    }
}

/// Wire format `{"n": 3, "feasible": [[1,2,3],[1],[2],[3]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DeltaMatroidJson {
    pub n: usize,
    pub feasible: Vec<Vec<usize>>,
}

impl TryFrom<DeltaMatroidJson> for DeltaMatroid {
    type Error = Error;
    fn try_from(j: DeltaMatroidJson) -> Result<Self> {
        DeltaMatroid::from_sets(j.n, &j.feasible)
    }
}
