//! Localized K-theory classes on the permutohedral variety (fixed points
//! indexed by signed permutations) and on the orthogonal Grassmannian
//! (fixed points indexed by maximal admissible sets).

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{LaurentPoly, Rational};
use crate::delta::{signed_indicator, DeltaMatroid, Subset};
use crate::error::{Error, Result};
use crate::semigroup::{tangent_cone, vertex_semigroup, SemigroupConfig};
use crate::typeb::{enumerate_w, moment_edges, OgrFixedPoint, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// The type B permutohedral variety.
    X,
    /// The maximal orthogonal Grassmannian.
    Ogr,
}

/// Localization at one fixed point: `numerator / prod_a (1 - T^{-a})`,
/// times `prod_{v in 𝒯_B} (1 - T^{-v})` when `chart_factor_omitted` is set.
///
/// Omitting the chart factor lets the engine cancel it against the Euler
/// factor of the Grassmannian symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalEntry {
    pub numerator: LaurentPoly,
    pub denominators: Vec<Vec<i64>>,
    pub chart_factor_omitted: bool,
}

impl LocalEntry {
    pub fn polynomial(numerator: LaurentPoly) -> Self {
        LocalEntry {
            numerator,
            denominators: Vec::new(),
            chart_factor_omitted: false,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominators.is_empty() && !self.chart_factor_omitted
    }
}

/// A tuple of localizations. X-side entries are indexed by
/// [`SignedPermutation::rank`]; Grassmannian entries by the bitmask of
/// `B ∩ [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedClass {
    side: Side,
    n: usize,
    entries: Vec<LocalEntry>,
}

pub fn to_exponent(v: &[i64]) -> Vec<i32> {
    v.iter()
        .map(|&x| i32::try_from(x).expect("exponent fits i32"))
        .collect()
}

fn neg_exponent(v: &[i64]) -> Vec<i32> {
    v.iter().map(|&x| -(x as i32)).collect()
}

/// `prod_v (1 - T^{-v})`.
pub fn euler_product(n: usize, chars: &[Vec<i64>]) -> LaurentPoly {
    chars.iter().fold(LaurentPoly::one(n), |acc, v| {
        &acc * &LaurentPoly::one_minus(&neg_exponent(v))
    })
}

impl LocalizedClass {
    pub fn new(side: Side, n: usize, entries: Vec<LocalEntry>) -> Result<Self> {
        let expected = match side {
            Side::X => SignedPermutation::order(n) as usize,
            Side::Ogr => 1usize << n,
        };
        if entries.len() != expected {
            return Err(Error::invalid(format!(
                "expected {expected} fixed points, got {}",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.numerator.nvars() != n) {
            return Err(Error::VariableMismatch {
                left: e.numerator.nvars(),
                right: n,
            });
        }
        Ok(LocalizedClass { side, n, entries })
    }

    pub fn from_fn_x<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(&SignedPermutation) -> Result<LaurentPoly> + Sync,
    {
        let order = SignedPermutation::order(n);
        let entries = (0..order)
            .into_par_iter()
            .map(|i| f(&SignedPermutation::unrank(n, i)).map(LocalEntry::polynomial))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Side::X, n, entries)
    }

    pub fn from_fn_ogr<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(OgrFixedPoint) -> Result<LocalEntry>,
    {
        let entries = OgrFixedPoint::all(n).map(f).collect::<Result<Vec<_>>>()?;
        Self::new(Side::Ogr, n, entries)
    }

    pub fn constant(side: Side, n: usize, c: Rational) -> Self {
        let count = match side {
            Side::X => SignedPermutation::order(n) as usize,
            Side::Ogr => 1usize << n,
        };
        LocalizedClass {
            side,
            n,
            entries: vec![LocalEntry::polynomial(LaurentPoly::constant(n, c)); count],
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[LocalEntry] {
        &self.entries
    }

    pub fn at_w(&self, w: &SignedPermutation) -> &LocalEntry {
        assert_eq!(self.side, Side::X);
        &self.entries[w.rank() as usize]
    }

    pub fn at_b(&self, s: Subset) -> &LocalEntry {
        assert_eq!(self.side, Side::Ogr);
        &self.entries[s as usize]
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.side != other.side || self.n != other.n {
            return Err(Error::invalid("classes live on different spaces"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                if a.chart_factor_omitted && b.chart_factor_omitted {
                    return Err(Error::invalid("both factors omit the chart factor"));
                }
                let mut denominators = a.denominators.clone();
                denominators.extend(b.denominators.iter().cloned());
                Ok(LocalEntry {
                    numerator: a.numerator.checked_mul(&b.numerator)?,
                    denominators,
                    chart_factor_omitted: a.chart_factor_omitted || b.chart_factor_omitted,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalizedClass {
            side: self.side,
            n: self.n,
            entries,
        })
    }

    /// Pointwise sum of polynomial classes.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.side != other.side || self.n != other.n {
            return Err(Error::invalid("classes live on different spaces"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                if !a.is_polynomial() || !b.is_polynomial() {
                    return Err(Error::invalid("sum needs polynomial entries"));
                }
                Ok(LocalEntry::polynomial(a.numerator.checked_add(&b.numerator)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalizedClass {
            side: self.side,
            n: self.n,
            entries,
        })
    }

    /// Every entry as a Laurent polynomial, clearing the chart factor and
    /// dividing out denominators exactly.
    pub fn materialize(&self) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, e)| {
                if e.is_polynomial() {
                    return Ok(e.clone());
                }
                let mut num = e.numerator.clone();
                if e.chart_factor_omitted {
                    let p = OgrFixedPoint {
                        n: self.n,
                        s: idx as Subset,
                    };
                    num = &num * &euler_product(self.n, &p.chart_characters());
                }
                for a in &e.denominators {
                    num = num.div_one_minus(&neg_exponent(a)).ok_or_else(|| {
                        Error::consistency(format!("entry {idx} is not a Laurent polynomial"))
                    })?;
                }
                Ok(LocalEntry::polynomial(num))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalizedClass {
            side: self.side,
            n: self.n,
            entries,
        })
    }

    /// Tuple-wise equality as rational functions, by cross-multiplying.
    pub fn same_class(&self, other: &Self) -> Result<bool> {
        if self.side != other.side || self.n != other.n {
            return Ok(false);
        }
        for (idx, (a, b)) in self.entries.iter().zip(&other.entries).enumerate() {
            let chart = || {
                let p = OgrFixedPoint {
                    n: self.n,
                    s: idx as Subset,
                };
                euler_product(self.n, &p.chart_characters())
            };
            let mut lhs = &a.numerator * &euler_product(self.n, &b.denominators);
            let mut rhs = &b.numerator * &euler_product(self.n, &a.denominators);
            if a.chart_factor_omitted {
                lhs = &lhs * &chart();
            }
            if b.chart_factor_omitted {
                rhs = &rhs * &chart();
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `e_{B_w(D)}` in the signed convention.
pub fn signed_minimal(d: &DeltaMatroid, w: &SignedPermutation) -> Result<Vec<i64>> {
    Ok(signed_indicator(d.minimal_feasible(w)?, d.n()))
}

/// `[P(D)]_w = T^{-e_{B_w ∩ [n]}}`, or `[P̂(D)]_w = T^{-e_{B_w}}` when doubled.
pub fn polytope_at(d: &DeltaMatroid, w: &SignedPermutation, doubled: bool) -> Result<LaurentPoly> {
    let s = d.minimal_feasible(w)?;
    let n = d.n();
    let v: Vec<i64> = if doubled {
        signed_indicator(s, n)
    } else {
        crate::delta::indicator(s, n)
    };
    Ok(LaurentPoly::character(&neg_exponent(&v)))
}

pub fn k_polytope(d: &DeltaMatroid, doubled: bool) -> Result<LocalizedClass> {
    LocalizedClass::from_fn_x(d.n(), |w| polytope_at(d, w, doubled))
}

/// `(1 + v) prod_{a ∈ B} (1 + T_a v)` as coefficients of `v^0..v^{n+1}`,
/// where `B` is given by its signed vertex.
pub fn wedge_coefficients(signed_vertex: &[i64]) -> Vec<LaurentPoly> {
    let n = signed_vertex.len();
    let mut coeffs = vec![LaurentPoly::one(n), LaurentPoly::one(n)];
    for (i, &sign) in signed_vertex.iter().enumerate() {
        let mut e = vec![0i32; n];
        e[i] = sign as i32;
        let t = LaurentPoly::character(&e);
        let mut next = vec![LaurentPoly::zero(n); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] = &next[k] + c;
            next[k + 1] = &next[k + 1] + &(c * &t);
        }
        coeffs = next;
    }
    coeffs
}

/// `[∧^p 𝒬^∨]` at a fixed point with signed vertex `e_B`. Zero for `p > n+1`.
pub fn wedge_at(signed_vertex: &[i64], p: usize) -> LaurentPoly {
    wedge_coefficients(signed_vertex)
        .into_iter()
        .nth(p)
        .unwrap_or_else(|| LaurentPoly::zero(signed_vertex.len()))
}

/// `sum_p [∧^p 𝒬^∨] v0^p` at a fixed point.
pub fn wedge_family_at(signed_vertex: &[i64], v0: &Rational) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(signed_vertex.len());
    let mut power = Rational::one();
    for c in wedge_coefficients(signed_vertex) {
        acc = &acc + &c.scale(&power);
        power *= v0;
    }
    acc
}

/// `[∧^p 𝒬_D^∨]`; the zero class when `p > n + 1`.
pub fn k_wedge_qdual(d: &DeltaMatroid, p: usize) -> Result<LocalizedClass> {
    LocalizedClass::from_fn_x(d.n(), |w| Ok(wedge_at(&signed_minimal(d, w)?, p)))
}

/// `[ℐ_D]_w = sum_{a ∈ B_w} T_a`.
pub fn k_isotropic(d: &DeltaMatroid) -> Result<LocalizedClass> {
    LocalizedClass::from_fn_x(d.n(), |w| {
        let eb = signed_minimal(d, w)?;
        Ok(&wedge_at(&eb, 1) - &LaurentPoly::one(d.n()))
    })
}

/// `(w · f)_{w'}(T) = f_{w^{-1} w'}(T_{w(1)}, ..., T_{w(n)})`.
pub fn w_act(class: &LocalizedClass, w: &SignedPermutation) -> Result<LocalizedClass> {
    if class.side != Side::X {
        return Err(Error::invalid(
            "the W-action is defined on the permutohedral side",
        ));
    }
    let n = class.n;
    if w.n() != n {
        return Err(Error::invalid("signed permutation has the wrong size"));
    }
    let inv = w.inverse();
    let map = |e: &[i32]| -> Vec<i32> {
        let mut out = vec![0i32; n];
        for (i, &x) in e.iter().enumerate() {
            let img = w.images()[i];
            out[(img.unsigned_abs() - 1) as usize] += img.signum() * x;
        }
        out
    };
    let entries = enumerate_w(n)
        .map(|wp| {
            let src = class.at_w(&inv.compose(&wp));
            if !src.is_polynomial() {
                return Err(Error::invalid("W-action needs polynomial entries"));
            }
            Ok(LocalEntry::polynomial(src.numerator.substitute_monomial(n, map)))
        })
        .collect::<Result<Vec<_>>>()?;
    LocalizedClass::new(Side::X, n, entries)
}

/// First failing moment-graph congruence, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmReport {
    pub ok: bool,
    /// `(from, to, label)` with fixed points printed.
    pub violation: Option<(String, String, Vec<i64>)>,
}

/// Check the GKM congruences `f_p ≡ f_q mod (1 - T^label)` on every edge.
pub fn gkm_check(class: &LocalizedClass) -> Result<GkmReport> {
    let n = class.n;
    if class.entries.iter().any(|e| !e.is_polynomial()) {
        return Err(Error::invalid(
            "GKM check needs polynomial entries; materialize first",
        ));
    }
    match class.side {
        Side::X => {
            for w in enumerate_w(n) {
                for edge in moment_edges(&w) {
                    if edge.to.rank() < w.rank() {
                        continue;
                    }
                    let diff = &class.at_w(&w).numerator - &class.at_w(&edge.to).numerator;
                    if !diff.divisible_by_one_minus(&to_exponent(&edge.label)) {
                        return Ok(GkmReport {
                            ok: false,
                            violation: Some((w.to_string(), edge.to.to_string(), edge.label)),
                        });
                    }
                }
            }
        }
        Side::Ogr => {
            for p in OgrFixedPoint::all(n) {
                for (q, label) in p.edges() {
                    if q.s < p.s {
                        continue;
                    }
                    let diff = &class.at_b(p.s).numerator - &class.at_b(q.s).numerator;
                    if !diff.divisible_by_one_minus(&to_exponent(&label)) {
                        return Ok(GkmReport {
                            ok: false,
                            violation: Some((format!("{:b}", p.s), format!("{:b}", q.s), label)),
                        });
                    }
                }
            }
        }
    }
    Ok(GkmReport {
        ok: true,
        violation: None,
    })
}

/// `[𝒪(2)]_B = T^{-e_B}` on the Grassmannian.
pub fn ogr_o2(n: usize) -> LocalizedClass {
    LocalizedClass::from_fn_ogr(n, |p| {
        Ok(LocalEntry::polynomial(LaurentPoly::character(&neg_exponent(
            &p.signed_vertex(),
        ))))
    })
    .expect("well-formed")
}

/// `[∧^p 𝒬^∨]` on the Grassmannian.
pub fn ogr_wedge_qdual(n: usize, p: usize) -> LocalizedClass {
    LocalizedClass::from_fn_ogr(n, |q| Ok(LocalEntry::polynomial(wedge_at(&q.signed_vertex(), p))))
        .expect("well-formed")
}

/// `y(D)`: at feasible `B`, the tangent-cone Hilbert series times the chart
/// factor, which clears every pole; zero elsewhere.
pub fn ogr_y_class(d: &DeltaMatroid) -> Result<LocalizedClass> {
    let n = d.n();
    LocalizedClass::from_fn_ogr(n, |p| {
        if !d.is_feasible(p.s) {
            return Ok(LocalEntry::polynomial(LaurentPoly::zero(n)));
        }
        let chart = p.chart_characters();
        let series = tangent_cone(d, p.s)?.hilbert_series();
        let mut total = LaurentPoly::zero(n);
        for piece in &series.pieces {
            let mut rest = chart.clone();
            for a in &piece.denominators {
                let pos = rest.iter().position(|v| v == a).ok_or_else(|| {
                    Error::consistency(format!("ray {a:?} at vertex {:b} is not a chart character", p.s))
                })?;
                rest.remove(pos);
            }
            total = &total + &(&piece.numerator * &euler_product(n, &rest));
        }
        Ok(LocalEntry::polynomial(total))
    })
}

/// `[𝒪_{T·D}]`: at feasible `B`, the K-polynomial of the vertex semigroup
/// over its minimal generators, with the chart factor left symbolic.
pub fn ogr_orbit_class(d: &DeltaMatroid, cfg: &SemigroupConfig) -> Result<LocalizedClass> {
    let n = d.n();
    LocalizedClass::from_fn_ogr(n, |p| {
        if !d.is_feasible(p.s) {
            return Ok(LocalEntry::polynomial(LaurentPoly::zero(n)));
        }
        if d.feasible().len() == 1 {
            return Ok(LocalEntry::polynomial(euler_product(n, &p.chart_characters())));
        }
        let semigroup = vertex_semigroup(d, p.s)?.minimized(cfg)?;
        let gens = semigroup.generators().to_vec();
        let k = semigroup.k_polynomial(cfg).map_err(|e| match e {
            Error::Resource(msg) => Error::Resource(format!("vertex {:b}: {msg}", p.s)),
            other => other,
        })?;
        Ok(LocalEntry {
            numerator: k,
            denominators: gens,
            chart_factor_omitted: true,
        })
    })
}
