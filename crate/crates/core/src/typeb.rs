//! The type B permutohedral fan: signed permutations, cone data at each
//! fixed point, the moment graph, and the torus-fixed points of the maximal
//! orthogonal Grassmannian.
//!
//! Signed elements of `[n, n̄]` are written as nonzero `i32`, with `-i`
//! standing for `ī`. Under `e_ī = -e_i`, the character of a signed element
//! is the signed unit vector.

use std::fmt;

use crate::delta::Subset;
use crate::error::{Error, Result};

/// Signed unit vector `e_a` for a signed element `a`.
pub fn signed_unit(a: i32, n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[(a.unsigned_abs() - 1) as usize] = a.signum() as i64;
    v
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::invalid("empty signed permutation"));
        }
        let mut seen = vec![false; n];
        for &a in &images {
            let k = a.unsigned_abs() as usize;
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::invalid(format!("{images:?} is not a signed permutation")));
            }
            seen[k - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `(w(1), ..., w(n))`.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(a)` for a signed element, using `w(ā) = w(a)̄`.
    pub fn apply(&self, a: i32) -> i32 {
        let img = self.images[(a.unsigned_abs() - 1) as usize];
        if a > 0 {
            img
        } else {
            -img
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        SignedPermutation {
            images: other.images.iter().map(|&a| self.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0i32; self.n()];
        for (k, &a) in self.images.iter().enumerate() {
            let i = k as i32 + 1;
            images[(a.unsigned_abs() - 1) as usize] = if a > 0 { i } else { -i };
        }
        SignedPermutation { images }
    }

    /// `w τ_k`: for `k < n` swap positions `k` and `k+1`; for `k = n` bar
    /// the last image.
    pub fn times_simple(&self, k: usize) -> Self {
        let n = self.n();
        assert!((1..=n).contains(&k));
        let mut images = self.images.clone();
        if k < n {
            images.swap(k - 1, k);
        } else {
            images[n - 1] = -images[n - 1];
        }
        SignedPermutation { images }
    }

    /// `|W| = 2^n n!`.
    pub fn order(n: usize) -> u64 {
        (1..=n as u64).product::<u64>() << n
    }

    /// Index in `0..order(n)`: permutation rank in lexicographic order times
    /// `2^n`, plus the mask of barred positions.
    pub fn rank(&self) -> u64 {
        let n = self.n();
        let mut perm_rank = 0u64;
        let abs: Vec<u32> = self.images.iter().map(|a| a.unsigned_abs()).collect();
        for i in 0..n {
            let smaller = abs[i + 1..].iter().filter(|&&b| b < abs[i]).count() as u64;
            perm_rank = perm_rank * (n - i) as u64 + smaller;
        }
        let mask = self
            .images
            .iter()
            .enumerate()
            .fold(0u64, |m, (k, &a)| if a < 0 { m | (1 << k) } else { m });
        (perm_rank << n) | mask
    }

    pub fn unrank(n: usize, index: u64) -> Self {
        let mask = index & ((1u64 << n) - 1);
        let mut perm_rank = index >> n;
        let mut digits = vec![0u64; n];
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = perm_rank % base;
            perm_rank /= base;
        }
        let mut pool: Vec<i32> = (1..=n as i32).collect();
        let images = digits
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let a = pool.remove(d as usize);
                if mask & (1 << k) != 0 {
                    -a
                } else {
                    a
                }
            })
            .collect();
        SignedPermutation { images }
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if *a < 0 {
                write!(f, "{}̄", -a)?;
            } else {
                write!(f, "{a}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All of `W` in rank order.
pub fn enumerate_w(n: usize) -> impl Iterator<Item = SignedPermutation> + Clone {
    (0..SignedPermutation::order(n)).map(move |i| SignedPermutation::unrank(n, i))
}

/// Cone data of `σ_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub w: SignedPermutation,
    /// `u_k = e_{w(1)} + ... + e_{w(k)}`.
    pub generators: Vec<Vec<i64>>,
    /// `m_j` with `<m_j, u_k> = δ_jk`; these are the tangent weights.
    pub dual: Vec<Vec<i64>>,
}

/// Inverse of a square integer matrix with determinant ±1 (fraction-free
/// Gauss-Jordan). `None` if the matrix is not unimodular.
pub fn unimodular_inverse(a: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let p = (k..n).find(|&i| m[i][k] != 0)?;
        m.swap(k, p);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // every diagonal entry now equals det
    let det = prev;
    if det.abs() != 1 {
        return None;
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| (m[i][n + j] / det) as i64).collect())
            .collect(),
    )
}

impl FixedPointData {
    pub fn new(w: &SignedPermutation) -> Result<Self> {
        let n = w.n();
        let mut generators = Vec::with_capacity(n);
        let mut acc = vec![0i64; n];
        for &a in w.images() {
            for (x, y) in acc.iter_mut().zip(signed_unit(a, n)) {
                *x += y;
            }
            generators.push(acc.clone());
        }
        // rows of G^{-1}, where G has the u_k as columns
        let g: Vec<Vec<i64>> = (0..n)
            .map(|i| generators.iter().map(|u| u[i]).collect())
            .collect();
        let inv = unimodular_inverse(&g)
            .ok_or_else(|| Error::consistency(format!("cone of {w} is not unimodular")))?;
        let data = FixedPointData {
            w: w.clone(),
            generators,
            dual: inv,
        };
        for (j, m) in data.dual.iter().enumerate() {
            for (k, u) in data.generators.iter().enumerate() {
                let p: i64 = m.iter().zip(u).map(|(a, b)| a * b).sum();
                if p != i64::from(j == k) {
                    return Err(Error::consistency(format!("dual basis check failed at {w}")));
                }
            }
        }
        Ok(data)
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }
}

/// `FixedPointData` for `w`.
pub fn cone_data(w: &SignedPermutation) -> Result<FixedPointData> {
    FixedPointData::new(w)
}

/// The tangent weights in closed form: `m_k = e_{w(k)} - e_{w(k+1)}` and
/// `m_n = e_{w(n)}`.
pub fn closed_form_dual(w: &SignedPermutation) -> Vec<Vec<i64>> {
    let n = w.n();
    let im = w.images();
    (0..n)
        .map(|k| {
            let mut v = signed_unit(im[k], n);
            if k + 1 < n {
                for (x, y) in v.iter_mut().zip(signed_unit(im[k + 1], n)) {
                    *x -= y;
                }
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentEdge {
    pub from: SignedPermutation,
    pub to: SignedPermutation,
    /// Which simple reflection `τ_k` joins the endpoints (`1..=n`).
    pub reflection: usize,
    pub label: Vec<i64>,
}

/// The `n` moment-graph edges at `w`.
pub fn moment_edges(w: &SignedPermutation) -> Vec<MomentEdge> {
    let dual = closed_form_dual(w);
    (1..=w.n())
        .map(|k| MomentEdge {
            from: w.clone(),
            to: w.times_simple(k),
            reflection: k,
            label: dual[k - 1].clone(),
        })
        .collect()
}

/// A torus-fixed point of the maximal orthogonal Grassmannian, indexed by
/// the maximal admissible set with unbarred part `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OgrFixedPoint {
    pub n: usize,
    pub s: Subset,
}

impl OgrFixedPoint {
    pub fn all(n: usize) -> impl Iterator<Item = OgrFixedPoint> {
        (0..(1 as Subset) << n).map(move |s| OgrFixedPoint { n, s })
    }

    /// `e_B` in the signed convention.
    pub fn signed_vertex(&self) -> Vec<i64> {
        crate::delta::signed_indicator(self.s, self.n)
    }

    /// `-e_a` for each `a ∈ B`, indexed by coordinate.
    fn singles(&self) -> Vec<Vec<i64>> {
        let eb = self.signed_vertex();
        (0..self.n)
            .map(|i| {
                let mut v = vec![0i64; self.n];
                v[i] = -eb[i];
                v
            })
            .collect()
    }

    /// `𝒯_B = {-e_a : a ∈ B} ∪ {-e_a - e_b : a ≠ b ∈ B}`, singles first, then
    /// pairs in lexicographic order.
    pub fn chart_characters(&self) -> Vec<Vec<i64>> {
        let singles = self.singles();
        let mut out = singles.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(singles[i].iter().zip(&singles[j]).map(|(a, b)| a + b).collect());
            }
        }
        out
    }

    /// Neighbours `B'` with `e_{B'} = e_B + 2v`, `v ∈ 𝒯_B`, and the label `v`.
    pub fn edges(&self) -> Vec<(OgrFixedPoint, Vec<i64>)> {
        let mut out = Vec::new();
        let singles = self.singles();
        for i in 0..self.n {
            out.push((
                OgrFixedPoint {
                    n: self.n,
                    s: self.s ^ (1 << i),
                },
                singles[i].clone(),
            ));
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push((
                    OgrFixedPoint {
                        n: self.n,
                        s: self.s ^ (1 << i) ^ (1 << j),
                    },
                    singles[i].iter().zip(&singles[j]).map(|(a, b)| a + b).collect(),
                ));
            }
        }
        out
    }
}
