//! Identity-checking suites over corpora of delta-matroids, and the search
//! for delta-matroids whose orbit class breaks the interlace identity.

use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::algebra::{rat, LaurentPoly, Rational, TruncSeries, UniPoly};
use crate::chow::{chern_of_characters, psi_eval, ChowExpr};
use crate::classes::{
    k_polytope, k_wedge_qdual, ogr_orbit_class, ogr_y_class, polytope_at, signed_minimal, wedge_at,
    wedge_family_at,
};
use crate::delta::{enumerate_all, DeltaMatroid, DeltaMatroidJson, EnumerateOptions};
use crate::engine::{
    euler_char_hrr, euler_char_x, interlace_integral_target, interlace_via_integral_along,
    r_poly_orbit_along, r_poly_y_along, transfer_sides, Engine, LineBundleLift,
};
use crate::error::{Error, Result};
use crate::semigroup::{is_very_ample, LatticeChoice, SemigroupConfig};
use crate::typeb::enumerate_w;

/// Every delta-matroid on `[n]`.
pub fn all_delta_matroids(n: usize) -> Result<Vec<DeltaMatroid>> {
    enumerate_all(n, EnumerateOptions::default())?.collect()
}

/// Every delta-matroid with ground size `1..=max_n`.
pub fn corpus(max_n: usize) -> Result<Vec<DeltaMatroid>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_delta_matroids(n)?);
    }
    Ok(out)
}

/// A failing instance with enough data to reproduce it.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub delta_matroid: DeltaMatroidJson,
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, d: &DeltaMatroid, seed: u64, outcome: Result<Option<String>>) -> Result<()> {
        self.checked += 1;
        let detail = match outcome {
            Ok(None) => return Ok(()),
            Ok(Some(detail)) => detail,
            Err(e @ Error::Resource(_)) => return Err(e),
            Err(e) => e.to_string(),
        };
        self.failures.push(Failure {
            delta_matroid: d.to_json(),
            seed,
            detail,
        });
        Ok(())
    }
}

/// Run `check` on every instance. Resource exhaustion aborts the suite;
/// any other error counts as a failure of that instance.
pub fn run_suite<F>(corpus: &[DeltaMatroid], engine: &Engine, check: F) -> Result<SuiteReport>
where
    F: Fn(&DeltaMatroid, &Engine) -> Result<Option<String>>,
{
    let mut report = SuiteReport::default();
    for d in corpus {
        report.record(d, engine.seed, check(d, engine))?;
    }
    Ok(report)
}

fn mismatch<T: std::fmt::Display>(what: &str, got: T, want: T) -> Option<String> {
    Some(format!("{what}: got {got}, expected {want}"))
}

/// `R_y(v) = (v + 1) Int_D(v)`.
pub fn check_interlace_identity(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let r = engine.evaluate(d.n(), |c| r_poly_y_along(d, c))?;
    let want = &UniPoly::from_ints(&[1, 1]) * &d.interlace();
    if !r.agreed {
        return Ok(Some("directions disagree".into()));
    }
    Ok((r.value != want)
        .then(|| mismatch("R_y", r.value, want))
        .flatten())
}

/// Hirzebruch-Riemann-Roch against localization on `[P]`, `[P̂]` and
/// `[P] [∧^p 𝒬^∨]` for every `p`.
pub fn check_hrr(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let n = d.n();
    let p = k_polytope(d, false)?;
    let mut classes = vec![
        ("P".to_string(), p.clone()),
        ("P doubled".to_string(), k_polytope(d, true)?),
    ];
    for k in 0..=n + 1 {
        classes.push((format!("P wedge^{k}"), p.product(&k_wedge_qdual(d, k)?)?));
    }
    let found = engine.evaluate(n, |c| {
        for (name, class) in &classes {
            let chi = euler_char_x(class, c)?;
            let hrr = euler_char_hrr(class, c)?;
            if chi != hrr {
                return Ok(mismatch(name, hrr, chi));
            }
        }
        Ok(None)
    })?;
    Ok(found.value)
}

/// `chi(X, [P(D)]) = |feasible|`.
pub fn check_lattice_points(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let p = k_polytope(d, false)?;
    let r = engine.evaluate(d.n(), |c| euler_char_x(&p, c))?;
    let want = rat(d.feasible().len() as i64);
    Ok((r.value != want)
        .then(|| mismatch("chi(P)", r.value, want))
        .flatten())
}

/// `int c(ℐ^∨, v) / (1 - γ) = (1 + v)^n Int_D((1 - v)/(1 + v))`.
pub fn check_interlace_integral(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let r = engine.evaluate(d.n(), |c| interlace_via_integral_along(d, c))?;
    let want = interlace_integral_target(d);
    Ok((r.value != want)
        .then(|| mismatch("integral", r.value, want))
        .flatten())
}

fn conjugate(f: &LaurentPoly) -> LaurentPoly {
    f.substitute_monomial(f.nvars(), |e| e.iter().map(|x| -x).collect())
}

/// The equivariant Chern and ψ identities at every fixed point along `c`.
pub fn pointwise_identities(d: &DeltaMatroid, c: &[i64]) -> Result<Option<String>> {
    let n = d.n();
    let cap = n as i32;
    let shared = Arc::new(d.clone());
    let chern_i = ChowExpr::chern_i(shared.clone(), Rational::one(), false);
    let chern_i_dual = ChowExpr::chern_i(shared.clone(), Rational::one(), true);
    let mut trivial = TruncSeries::one(cap);
    for &ci in c {
        let ci = rat(ci);
        trivial = &trivial * &TruncSeries::new(0, cap, vec![rat(1), rat(0), -(&ci * &ci)]);
    }
    for w in enumerate_w(n) {
        let eb = signed_minimal(d, &w)?;
        let q_dual = wedge_at(&eb, 1);
        let c_q = chern_of_characters(&conjugate(&q_dual), c, cap)?;
        let c_q_dual = chern_of_characters(&q_dual, c, cap)?;
        let c_i = chern_i.eval(&w, c, cap)?;
        if !(&c_i * &c_q).agrees_with(&trivial) {
            return Ok(Some(format!("c(I) c(Q) at {w}")));
        }
        if !c_i.agrees_with(&c_q_dual) {
            return Ok(Some(format!("c(I) = c(Q^dual) at {w}")));
        }
        let psi_p = psi_eval(&polytope_at(d, &w, true)?, c, cap);
        if !(&psi_p * &c_i).agrees_with(&c_q) {
            return Ok(Some(format!("psi(P doubled) c(I) = c(Q) at {w}")));
        }
        let inv_dual = chern_i_dual.eval(&w, c, cap)?.inverse()?;
        for v0 in 0..=3i64 {
            let v0 = rat(v0);
            let lhs = psi_eval(&wedge_family_at(&eb, &v0), c, cap);
            let x = (&v0 - rat(1)) / (&v0 + rat(1));
            let scaled = ChowExpr::chern_i(shared.clone(), x, false).eval(&w, c, cap)?;
            let mut power = Rational::one();
            for _ in 0..=n {
                power *= &v0 + rat(1);
            }
            let rhs = &scaled.scale(&power) * &inv_dual;
            if !lhs.agrees_with(&rhs) {
                return Ok(Some(format!("wedge identity at {w}, v = {v0}")));
            }
        }
    }
    Ok(None)
}

pub fn check_pointwise(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let r = engine.evaluate(d.n(), |c| pointwise_identities(d, c))?;
    Ok(r.value)
}

/// Orbit class equals `y(D)` exactly when `P(D)` is very ample.
pub fn check_very_ample_equivalence(d: &DeltaMatroid, cfg: &SemigroupConfig) -> Result<Option<String>> {
    let ample = is_very_ample(d, LatticeChoice::Standard, cfg)?.very_ample;
    let same = ogr_y_class(d)?.same_class(&ogr_orbit_class(d, cfg)?)?;
    Ok((ample != same).then(|| format!("very ample = {ample}, classes equal = {same}")))
}

/// Transfer between the Grassmannian and the permutohedral variety.
pub fn check_transfer(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let r = engine.evaluate(d.n(), |c| transfer_sides(d, c))?;
    let (ogr, x) = r.value;
    if !r.agreed {
        return Ok(Some("directions disagree".into()));
    }
    Ok((ogr != x).then(|| format!("OGr side {ogr:?} vs X side {x:?}")))
}

/// Every Euler characteristic and integral computed along each of the
/// engine's directions must coincide.
pub fn check_direction_independence(d: &DeltaMatroid, engine: &Engine) -> Result<Option<String>> {
    let orbit = ogr_orbit_class(d, &engine.semigroup)?;
    let p = k_polytope(d, false)?;
    let ph = k_polytope(d, true)?;
    let r = engine.evaluate(d.n(), |c| {
        Ok((
            euler_char_x(&p, c)?,
            euler_char_x(&ph, c)?,
            euler_char_hrr(&p, c)?,
            r_poly_y_along(d, c)?,
            r_poly_orbit_along(d, &orbit, c, LineBundleLift::SquareRoot)?,
            interlace_via_integral_along(d, c)?,
            transfer_sides(d, c)?,
        ))
    })?;
    Ok((!r.agreed).then(|| format!("directions {:?} disagree", r.directions)))
}

/// Outcome of the search for delta-matroids violating
/// `R_orbit(v) = (v + 1) Int_D(v)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct StarSearch {
    pub checked: usize,
    pub failures: Vec<DeltaMatroidJson>,
    /// Instances the semigroup pipeline could not finish.
    pub errors: Vec<(DeltaMatroidJson, String)>,
}

pub fn search_star_failures(n: usize, engine: &Engine) -> Result<StarSearch> {
    search_star_in(&all_delta_matroids(n)?, engine)
}

pub fn search_star_in(corpus: &[DeltaMatroid], engine: &Engine) -> Result<StarSearch> {
    let mut out = StarSearch::default();
    for d in corpus {
        out.checked += 1;
        let want = &UniPoly::from_ints(&[1, 1]) * &d.interlace();
        match crate::engine::r_poly_orbit(d, engine) {
            Ok(r) if r.value == want => {}
            Ok(_) => out.failures.push(d.to_json()),
            Err(e) => out.errors.push((d.to_json(), e.to_string())),
        }
    }
    Ok(out)
}
