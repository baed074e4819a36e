//! Exact localization sums along generic one-parameter directions.
//!
//! A fixed point contributes `f / prod_a (1 - T^{-a})`. Substituting
//! `T^m = exp(<c, m> s)` turns each Euler factor into a series with a
//! simple pole; the Euler characteristic is the `s^0` coefficient of the
//! total, and every negative order must cancel across fixed points.
//! Chow integrals work the same way with linear Euler classes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use num_traits::{One, Zero};

use crate::algebra::{interpolate, inv_one_minus_exp, rat, LaurentPoly, Rational, TruncSeries, UniPoly};
use crate::chow::ChowExpr;
use crate::classes::{
    k_polytope, ogr_o2, ogr_orbit_class, ogr_y_class, polytope_at, signed_minimal, to_exponent, wedge_at,
    wedge_family_at, LocalEntry, LocalizedClass, Side,
};
use crate::delta::{indicator, DeltaMatroid};
use crate::error::{Error, Result};
use crate::semigroup::SemigroupConfig;
use crate::typeb::{closed_form_dual, OgrFixedPoint, SignedPermutation};

/// Retries allowed when a drawn direction pairs to zero with some character.
pub const MAX_DIRECTION_ATTEMPTS: usize = 16;

/// One fixed point's contribution: several numerators sharing the Euler
/// denominators `prod_a (1 - T^{-a})`.
#[derive(Clone, Debug)]
pub struct LocalizationTerm {
    pub numerators: Vec<LaurentPoly>,
    pub denominators: Vec<Vec<i64>>,
}

fn pairing(a: &[i64], c: &[i64]) -> i64 {
    a.iter().zip(c).map(|(x, y)| x * y).sum()
}

/// Coefficients of `s^{-P}, ..., s^0` of each numerator's contribution,
/// where `P = pole`.
fn term_orders(term: &LocalizationTerm, c: &[i64], pole: usize) -> Result<Vec<Vec<Rational>>> {
    let p = term.denominators.len();
    let mut euler = TruncSeries::one(p as i32);
    for a in &term.denominators {
        let pa = pairing(a, c);
        if pa == 0 {
            return Err(Error::DegenerateDirection { character: a.clone() });
        }
        let factor = inv_one_minus_exp(&rat(pa), p as i32 - 1)?;
        euler = &euler * &factor;
    }
    term.numerators
        .iter()
        .map(|f| {
            let series = &f.exp_substitute(c, p) * &euler;
            Ok((0..=pole).map(|k| series.coeff(k as i32 - pole as i32)).collect())
        })
        .collect()
}

fn add_orders(mut a: Vec<Vec<Rational>>, b: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    if a.is_empty() {
        return b;
    }
    for (x, y) in a.iter_mut().zip(b) {
        for (u, v) in x.iter_mut().zip(y) {
            *u += v;
        }
    }
    a
}

fn finish(orders: Vec<Vec<Rational>>, count: usize) -> Result<Vec<Rational>> {
    if orders.is_empty() {
        return Ok(vec![Rational::zero(); count]);
    }
    orders
        .into_iter()
        .map(|o| {
            let (last, negative) = o.split_last().expect("s^0 slot");
            if let Some(r) = negative.iter().find(|x| !x.is_zero()) {
                return Err(Error::consistency(format!(
                    "negative-order residue {r} did not cancel"
                )));
            }
            Ok(last.clone())
        })
        .collect()
}

/// `sum_terms [s^0]` with cancellation of all poles asserted. `count` is the
/// number of numerators per term.
pub fn localization_sum<I>(terms: I, c: &[i64], count: usize) -> Result<Vec<Rational>>
where
    I: ParallelIterator<Item = Result<LocalizationTerm>>,
{
    let orders = terms
        .map(|t| {
            let t = t?;
            if t.numerators.len() != count {
                return Err(Error::invalid("term has the wrong number of numerators"));
            }
            term_orders(&t, c, t.denominators.len()).map(|o| (t.denominators.len(), o))
        })
        .try_fold(
            || (0usize, Vec::new()),
            |(pa, acc), r| {
                let (pb, o) = r?;
                Ok::<_, Error>(merge((pa, acc), (pb, o)))
            },
        )
        .try_reduce(|| (0usize, Vec::new()), |a, b| Ok(merge(a, b)))?;
    finish(orders.1, count)
}

/// Align two order tables with different pole bounds before adding.
fn merge(a: (usize, Vec<Vec<Rational>>), b: (usize, Vec<Vec<Rational>>)) -> (usize, Vec<Vec<Rational>>) {
    let pole = a.0.max(b.0);
    let pad = |(p, o): (usize, Vec<Vec<Rational>>)| -> Vec<Vec<Rational>> {
        o.into_iter()
            .map(|mut v| {
                let mut out = vec![Rational::zero(); pole - p];
                out.append(&mut v);
                out
            })
            .collect()
    };
    (pole, add_orders(pad(a), pad(b)))
}

fn integral(x: Rational, what: &str) -> Result<Rational> {
    if !x.is_integer() {
        return Err(Error::consistency(format!("{what} = {x} is not an integer")));
    }
    Ok(x)
}

/// `chi(X, f)` for every numerator family produced by `f`, streamed over `W`.
pub fn euler_char_x_fn<F>(n: usize, c: &[i64], count: usize, f: F) -> Result<Vec<Rational>>
where
    F: Fn(&SignedPermutation) -> Result<Vec<LaurentPoly>> + Sync,
{
    let terms = (0..SignedPermutation::order(n)).into_par_iter().map(|i| {
        let w = SignedPermutation::unrank(n, i);
        Ok(LocalizationTerm {
            numerators: f(&w)?,
            denominators: closed_form_dual(&w),
        })
    });
    localization_sum(terms, c, count)?
        .into_iter()
        .map(|x| integral(x, "Euler characteristic"))
        .collect()
}

/// `chi(X, class)` for a class with polynomial entries.
pub fn euler_char_x(class: &LocalizedClass, c: &[i64]) -> Result<Rational> {
    if class.side() != Side::X || class.entries().iter().any(|e| !e.is_polynomial()) {
        return Err(Error::invalid(
            "expected a polynomial class on the permutohedral side",
        ));
    }
    let v = euler_char_x_fn(class.n(), c, 1, |w| Ok(vec![class.at_w(w).numerator.clone()]))?;
    Ok(v.into_iter().next().expect("one value"))
}

/// Grassmannian terms for `class * g_k` (one numerator per factor `g_k`),
/// cancelling omitted chart factors against the Euler factor.
fn ogr_terms(class: &LocalizedClass, factors: &[LocalizedClass]) -> Result<Vec<LocalizationTerm>> {
    let n = class.n();
    OgrFixedPoint::all(n)
        .filter(|p| !class.at_b(p.s).numerator.is_zero())
        .map(|p| {
            let entry: &LocalEntry = class.at_b(p.s);
            let mut denominators = entry.denominators.clone();
            if !entry.chart_factor_omitted {
                denominators.extend(p.chart_characters());
            }
            let numerators = factors
                .iter()
                .map(|g| {
                    let ge = g.at_b(p.s);
                    if !ge.is_polynomial() {
                        return Err(Error::invalid("factor classes must be polynomial"));
                    }
                    entry.numerator.checked_mul(&ge.numerator)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LocalizationTerm {
                numerators,
                denominators,
            })
        })
        .collect()
}

/// `chi(OGr, class * g)` for each `g` in `factors`.
pub fn euler_char_ogr_family(
    class: &LocalizedClass,
    factors: &[LocalizedClass],
    c: &[i64],
) -> Result<Vec<Rational>> {
    if class.side() != Side::Ogr || factors.iter().any(|g| g.side() != Side::Ogr) {
        return Err(Error::invalid("expected Grassmannian classes"));
    }
    let terms = ogr_terms(class, factors)?;
    localization_sum(terms.into_par_iter().map(Ok), c, factors.len())?
        .into_iter()
        .map(|x| integral(x, "Euler characteristic"))
        .collect()
}

pub fn euler_char_ogr(class: &LocalizedClass, c: &[i64]) -> Result<Rational> {
    let one = LocalizedClass::constant(Side::Ogr, class.n(), Rational::one());
    Ok(euler_char_ogr_family(class, &[one], c)?.remove(0))
}

/// `int_X expr`: the `s^n` coefficient of `sum_w expr_w / prod_k <m_k, c s>`.
/// Lower-degree parts must cancel.
pub fn integrate_chow(expr: &ChowExpr, n: usize, c: &[i64]) -> Result<Rational> {
    let cap = n as i32;
    let total = (0..SignedPermutation::order(n))
        .into_par_iter()
        .map(|i| {
            let w = SignedPermutation::unrank(n, i);
            let series = expr.eval(&w, c, cap)?;
            let mut euler = Rational::one();
            for m in closed_form_dual(&w) {
                let p = pairing(&m, c);
                if p == 0 {
                    return Err(Error::DegenerateDirection { character: m });
                }
                euler *= rat(p);
            }
            let inv = euler.recip();
            Ok((0..=n).map(|k| series.coeff(k as i32) * &inv).collect::<Vec<_>>())
        })
        .try_reduce(
            || vec![Rational::zero(); n + 1],
            |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x + y).collect()),
        )?;
    let (top, lower) = total.split_last().expect("degree n slot");
    if let Some(r) = lower.iter().find(|x| !x.is_zero()) {
        return Err(Error::consistency(format!(
            "lower-degree residue {r} did not cancel"
        )));
    }
    Ok(top.clone())
}

/// `(1/2^n) int_X ψ(class) (1 + γ + ... + γ^n)`.
pub fn euler_char_hrr(class: &LocalizedClass, c: &[i64]) -> Result<Rational> {
    let n = class.n();
    let expr = ChowExpr::psi(std::sync::Arc::new(class.clone()))?.times(ChowExpr::gamma_series(n));
    let value = integrate_chow(&expr, n, c)? / rat(1i64 << n);
    integral(value, "Hirzebruch-Riemann-Roch value")
}

/// Seeded source of generic directions.
#[derive(Clone, Debug)]
pub struct Engine {
    pub seed: u64,
    /// Independent directions each result is computed along.
    pub directions: usize,
    pub semigroup: SemigroupConfig,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            seed: 0x5eed,
            directions: 1,
            semigroup: SemigroupConfig::default(),
        }
    }
}

/// A value computed along several directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreed<T> {
    pub value: T,
    pub agreed: bool,
    pub directions: Vec<Vec<i64>>,
}

/// `n` distinct odd integers in `[1, 2^20]`.
pub fn draw_direction<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(n);
    while out.len() < n {
        let x = 2 * rng.gen_range(0..(1i64 << 19)) + 1;
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

impl Engine {
    pub fn with_directions(seed: u64, directions: usize) -> Self {
        Engine {
            seed,
            directions,
            ..Engine::default()
        }
    }

    /// Evaluate `f` along `self.directions` generic directions, redrawing a
    /// direction whenever it is degenerate for `f`.
    pub fn evaluate<T, F>(&self, n: usize, f: F) -> Result<Agreed<T>>
    where
        T: PartialEq,
        F: Fn(&[i64]) -> Result<T>,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut values: Vec<T> = Vec::new();
        let mut used = Vec::new();
        for _ in 0..self.directions.max(1) {
            let mut attempts = 0;
            loop {
                attempts += 1;
                let c = draw_direction(&mut rng, n);
                match f(&c) {
                    Ok(v) => {
                        values.push(v);
                        used.push(c);
                        break;
                    }
                    Err(Error::DegenerateDirection { .. }) if attempts < MAX_DIRECTION_ATTEMPTS => {}
                    Err(Error::DegenerateDirection { .. }) => {
                        return Err(Error::NoGenericDirection { attempts })
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        let agreed = values.windows(2).all(|p| p[0] == p[1]);
        Ok(Agreed {
            value: values.swap_remove(0),
            agreed,
            directions: used,
        })
    }
}

fn nodes(count: usize) -> Vec<Rational> {
    (0..count as i64).map(rat).collect()
}

fn fit(values: Vec<Rational>, degree_bound: usize) -> Result<UniPoly> {
    let pts: Vec<(Rational, Rational)> = nodes(values.len()).into_iter().zip(values).collect();
    interpolate(&pts, degree_bound)
}

/// `R(v) = sum_p chi(X, [P(D)] [∧^p 𝒬_D^∨]) v^p`, interpolated from the
/// values at `v = 0, ..., n + 2`.
pub fn r_poly_y_along(d: &DeltaMatroid, c: &[i64]) -> Result<UniPoly> {
    let n = d.n();
    let vs = nodes(n + 3);
    let values = euler_char_x_fn(n, c, vs.len(), |w| {
        let eb = signed_minimal(d, w)?;
        let p = polytope_at(d, w, false)?;
        Ok(vs.iter().map(|v0| &p * &wedge_family_at(&eb, v0)).collect())
    })?;
    fit(values, n + 1)
}

pub fn r_poly_y(d: &DeltaMatroid, engine: &Engine) -> Result<Agreed<UniPoly>> {
    engine.evaluate(d.n(), |c| r_poly_y_along(d, c))
}

/// How the orbit-side computation handles the half-integral `𝒪(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineBundleLift {
    /// `z^{-e_B}` with `z_i^2 = T_i`.
    SquareRoot,
    /// `T^{-e_{B ∩ [n]}}`, which differs by the global character `z^{(1,...,1)}`.
    Integral,
}

/// `R(v) = sum_p chi(OGr, [𝒪_{T·D}] [𝒪(1)] [∧^p 𝒬^∨]) v^p`.
pub fn r_poly_orbit_along(
    d: &DeltaMatroid,
    orbit: &LocalizedClass,
    c: &[i64],
    lift: LineBundleLift,
) -> Result<UniPoly> {
    let n = d.n();
    let vs = nodes(n + 3);
    let to_z = |f: &LaurentPoly| f.substitute_monomial(n, |e| e.iter().map(|x| 2 * x).collect());
    let terms: Vec<LocalizationTerm> = d
        .feasible()
        .iter()
        .map(|&s| {
            let p = OgrFixedPoint { n, s };
            let entry = orbit.at_b(s);
            let eb = p.signed_vertex();
            let mut denominators = entry.denominators.clone();
            if !entry.chart_factor_omitted {
                denominators.extend(p.chart_characters());
            }
            let (line, numerator, denominators) = match lift {
                LineBundleLift::SquareRoot => (
                    LaurentPoly::character(&to_exponent(&eb.iter().map(|x| -x).collect::<Vec<_>>())),
                    to_z(&entry.numerator),
                    denominators
                        .iter()
                        .map(|a| a.iter().map(|x| 2 * x).collect())
                        .collect(),
                ),
                LineBundleLift::Integral => (
                    LaurentPoly::character(&to_exponent(
                        &indicator(s, n).iter().map(|x| -x).collect::<Vec<_>>(),
                    )),
                    entry.numerator.clone(),
                    denominators,
                ),
            };
            let base = &numerator * &line;
            let numerators = vs
                .iter()
                .map(|v0| {
                    let wedge = wedge_family_at(&eb, v0);
                    let wedge = match lift {
                        LineBundleLift::SquareRoot => to_z(&wedge),
                        LineBundleLift::Integral => wedge,
                    };
                    &base * &wedge
                })
                .collect();
            LocalizationTerm {
                numerators,
                denominators,
            }
        })
        .collect();
    let values = localization_sum(terms.into_par_iter().map(Ok), c, vs.len())?
        .into_iter()
        .map(|x| integral(x, "Euler characteristic"))
        .collect::<Result<Vec<_>>>()?;
    fit(values, n + 1)
}

pub fn r_poly_orbit(d: &DeltaMatroid, engine: &Engine) -> Result<Agreed<UniPoly>> {
    let orbit = ogr_orbit_class(d, &engine.semigroup)?;
    engine.evaluate(d.n(), |c| {
        r_poly_orbit_along(d, &orbit, c, LineBundleLift::SquareRoot)
    })
}

/// `int_X c(ℐ_D^∨, v) / (1 - γ)` as a polynomial in `v`, interpolated from
/// `v = 0, ..., n + 1`.
pub fn interlace_via_integral_along(d: &DeltaMatroid, c: &[i64]) -> Result<UniPoly> {
    let n = d.n();
    let shared = std::sync::Arc::new(d.clone());
    let values = nodes(n + 2)
        .into_iter()
        .map(|v0| {
            let expr = ChowExpr::chern_i(shared.clone(), v0, true).times(ChowExpr::gamma_series(n));
            integrate_chow(&expr, n, c)
        })
        .collect::<Result<Vec<_>>>()?;
    fit(values, n)
}

pub fn interlace_via_integral(d: &DeltaMatroid, engine: &Engine) -> Result<Agreed<UniPoly>> {
    engine.evaluate(d.n(), |c| interlace_via_integral_along(d, c))
}

/// `(1 + v)^n Int_D((1 - v)/(1 + v))`, expanded.
pub fn interlace_integral_target(d: &DeltaMatroid) -> UniPoly {
    let n = d.n();
    let int = d.interlace();
    let one_plus = UniPoly::from_ints(&[1, 1]);
    let one_minus = UniPoly::from_ints(&[1, -1]);
    let mut acc = UniPoly::zero();
    for (k, a) in int.coeffs().iter().enumerate() {
        let term = &one_minus.pow(k as u32) * &one_plus.pow((n - k) as u32);
        acc = &acc + &term.scale(a);
    }
    acc
}

/// Both sides of the transfer identity for `p = 0..=n+1`:
/// `chi(OGr, y(D) 𝒪(2) ∧^p 𝒬^∨)` and `chi(X, [P̂(D)] ∧^p 𝒬_D^∨)`.
pub fn transfer_sides(d: &DeltaMatroid, c: &[i64]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let n = d.n();
    let y = ogr_y_class(d)?.product(&ogr_o2(n))?;
    let wedges: Vec<LocalizedClass> = (0..=n + 1)
        .map(|p| crate::classes::ogr_wedge_qdual(n, p))
        .collect();
    let ogr = euler_char_ogr_family(&y, &wedges, c)?;
    let x = euler_char_x_fn(n, c, n + 2, |w| {
        let eb = signed_minimal(d, w)?;
        let ph = polytope_at(d, w, true)?;
        Ok((0..=n + 1).map(|p| &ph * &wedge_at(&eb, p)).collect())
    })?;
    Ok((ogr, x))
}

pub fn chi_transfer_check(d: &DeltaMatroid, engine: &Engine) -> Result<bool> {
    let r = engine.evaluate(d.n(), |c| {
        let (a, b) = transfer_sides(d, c)?;
        Ok(a == b)
    })?;
    Ok(r.agreed && r.value)
}

/// `chi(X, [P(D)])`.
pub fn polytope_euler_char(d: &DeltaMatroid, doubled: bool, engine: &Engine) -> Result<Agreed<Rational>> {
    let class = k_polytope(d, doubled)?;
    engine.evaluate(d.n(), |c| euler_char_x(&class, c))
}
