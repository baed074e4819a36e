//! Equivariant Chow classes on the permutohedral variety, evaluated lazily
//! along a one-parameter direction `t = c s`.
//!
//! A [`ChowExpr`] is never expanded into multivariate polynomials: at a
//! fixed point `w` it evaluates to a truncated series in `s`, and the
//! coefficient of `s^j` is the degree-`j` part of the class restricted to
//! the direction `c`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{LaurentPoly, Rational, TruncSeries};
use crate::classes::{signed_minimal, LocalizedClass, Side};
use crate::delta::DeltaMatroid;
use crate::error::{Error, Result};
use crate::typeb::SignedPermutation;

#[derive(Clone, Debug)]
pub enum ChowExpr {
    Const(Rational),
    /// `t_{w(1)}` at `w`, the anticanonical class.
    Gamma,
    /// `prod_{a ∈ B_w(D)} (1 + v0 t_a)`, or `(1 - v0 t_a)` when `dual`.
    ChernI {
        d: Arc<DeltaMatroid>,
        v0: Rational,
        dual: bool,
    },
    /// Equivariant total Chern class of a K-class whose entries are integer
    /// combinations of characters: `prod_m (1 + <m, t>)^{a_m}`.
    ChernOf(Arc<LocalizedClass>),
    /// `ψ(f)`: `T_i -> (1 + t_i) / (1 - t_i)`.
    Psi(Arc<LocalizedClass>),
    Sum(Vec<ChowExpr>),
    Product(Vec<ChowExpr>),
    Pow(Box<ChowExpr>, u32),
    Inverse(Box<ChowExpr>),
}

impl ChowExpr {
    pub fn constant(c: i64) -> Self {
        ChowExpr::Const(Rational::from_integer(c.into()))
    }

    pub fn chern_i(d: Arc<DeltaMatroid>, v0: Rational, dual: bool) -> Self {
        ChowExpr::ChernI { d, v0, dual }
    }

    /// `1 + γ + ... + γ^n`, the truncation of `1 / (1 - γ)`.
    pub fn gamma_series(n: usize) -> Self {
        ChowExpr::Sum(
            (0..=n as u32)
                .map(|k| ChowExpr::Pow(Box::new(ChowExpr::Gamma), k))
                .collect(),
        )
    }

    pub fn psi(class: Arc<LocalizedClass>) -> Result<Self> {
        check_polynomial_x(&class)?;
        Ok(ChowExpr::Psi(class))
    }

    pub fn chern_of(class: Arc<LocalizedClass>) -> Result<Self> {
        check_polynomial_x(&class)?;
        Ok(ChowExpr::ChernOf(class))
    }

    pub fn times(self, other: ChowExpr) -> Self {
        ChowExpr::Product(vec![self, other])
    }

    /// Series at `w` along `t = c s`, known up to `s^cap`.
    pub fn eval(&self, w: &SignedPermutation, c: &[i64], cap: i32) -> Result<TruncSeries> {
        Ok(match self {
            ChowExpr::Const(x) => TruncSeries::constant(x.clone(), cap),
            ChowExpr::Gamma => {
                let a = w.images()[0];
                TruncSeries::linear(Rational::zero(), signed_pairing(a, c), cap)
            }
            ChowExpr::ChernI { d, v0, dual } => {
                let eb = signed_minimal(d, w)?;
                let sign = if *dual { -v0.clone() } else { v0.clone() };
                eb.iter().zip(c).fold(TruncSeries::one(cap), |acc, (&e, &ci)| {
                    let slope = &sign * Rational::from_integer((e * ci).into());
                    &acc * &TruncSeries::linear(Rational::one(), slope, cap)
                })
            }
            ChowExpr::ChernOf(class) => chern_of_characters(&class.at_w(w).numerator, c, cap)?,
            ChowExpr::Psi(class) => psi_eval(&class.at_w(w).numerator, c, cap),
            ChowExpr::Sum(parts) => {
                let mut acc = TruncSeries::zero(cap);
                for p in parts {
                    acc = &acc + &p.eval(w, c, cap)?;
                }
                acc
            }
            ChowExpr::Product(parts) => {
                let mut acc = TruncSeries::one(cap);
                for p in parts {
                    acc = &acc * &p.eval(w, c, cap)?;
                }
                acc
            }
            ChowExpr::Pow(base, k) => base.eval(w, c, cap)?.pow(*k),
            ChowExpr::Inverse(inner) => inner.eval(w, c, cap)?.inverse()?,
        })
    }
}

fn check_polynomial_x(class: &LocalizedClass) -> Result<()> {
    if class.side() != Side::X || class.entries().iter().any(|e| !e.is_polynomial()) {
        return Err(Error::invalid(
            "Chow expressions take polynomial classes on the permutohedral side",
        ));
    }
    Ok(())
}

/// `<e_a, c>` for a signed element `a`.
fn signed_pairing(a: i32, c: &[i64]) -> Rational {
    let v = c[(a.unsigned_abs() - 1) as usize] * i64::from(a.signum());
    Rational::from_integer(v.into())
}

/// `ψ(f)` along `t = c s`: each `T_i` becomes `(1 + c_i s) / (1 - c_i s)`.
pub fn psi_eval(f: &LaurentPoly, c: &[i64], cap: i32) -> TruncSeries {
    let len = (cap + 1).max(0) as usize;
    // (1 + x)/(1 - x) = 1 + 2x + 2x^2 + ..., and its inverse is the same at -x
    let ratio = |ci: i64| -> TruncSeries {
        let mut coeffs = vec![Rational::one()];
        let mut p = Rational::from_integer(2.into());
        for _ in 1..len {
            p *= Rational::from_integer(ci.into());
            coeffs.push(p.clone());
        }
        TruncSeries::new(0, cap, coeffs)
    };
    let mut cache: HashMap<(usize, i32), TruncSeries> = HashMap::new();
    let mut power = |i: usize, e: i32| -> TruncSeries {
        cache
            .entry((i, e))
            .or_insert_with(|| {
                let base = if e > 0 { ratio(c[i]) } else { ratio(-c[i]) };
                base.pow(e.unsigned_abs())
            })
            .clone()
    };
    let mut acc = TruncSeries::zero(cap);
    for (e, coeff) in f.terms() {
        let mut term = TruncSeries::constant(coeff.clone(), cap);
        for (i, &x) in e.iter().enumerate() {
            if x != 0 {
                term = &term * &power(i, x);
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// `prod_m (1 + <m, c> s)^{a_m}` for `f = sum_m a_m T^m` with integer
/// multiplicities.
pub fn chern_of_characters(f: &LaurentPoly, c: &[i64], cap: i32) -> Result<TruncSeries> {
    let mut acc = TruncSeries::one(cap);
    for (e, coeff) in f.terms() {
        if !coeff.is_integer() {
            return Err(Error::invalid("Chern class of a non-integral K-class"));
        }
        let slope: i64 = e.iter().zip(c).map(|(&x, &y)| i64::from(x) * y).sum();
        let factor = TruncSeries::linear(Rational::one(), Rational::from_integer(slope.into()), cap);
        let mult = coeff.to_integer();
        let k: u32 = u32::try_from(mult.magnitude().clone())
            .map_err(|_| Error::invalid("character multiplicity too large"))?;
        let powered = factor.pow(k);
        acc = if mult.sign() == num_bigint::Sign::Minus {
            &acc * &powered.inverse()?
        } else {
            &acc * &powered
        };
    }
    Ok(acc)
}
