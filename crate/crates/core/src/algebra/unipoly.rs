//! Dense univariate polynomials over the rationals, and interpolation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Coefficient list `c_0 + c_1 v + ...` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `v`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = UniPoly::constant(Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as decimal strings keyed by exponent.
    pub fn to_coefficient_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.to_string(), c.to_string()))
            .collect()
    }

    pub fn from_coefficient_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (k, v) in map {
            let k: usize = k
                .parse()
                .map_err(|_| Error::invalid(format!("bad exponent key {k:?}")))?;
            let c: Rational = v
                .parse()
                .map_err(|_| Error::invalid(format!("bad coefficient {v:?}")))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c;
        }
        Ok(Self::new(coeffs))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Interpolate a polynomial of degree at most `degree_bound` through
/// `nodes`. The first `degree_bound + 1` nodes determine the polynomial;
/// every further node is a guard and must be matched exactly.
pub fn interpolate(nodes: &[(Rational, Rational)], degree_bound: usize) -> Result<UniPoly> {
    let needed = degree_bound + 1;
    if nodes.len() < needed {
        return Err(Error::invalid(format!(
            "need {needed} nodes for degree {degree_bound}, got {}",
            nodes.len()
        )));
    }
    for i in 0..nodes.len() {
        for j in 0..i {
            if nodes[i].0 == nodes[j].0 {
                return Err(Error::invalid(format!("repeated node {}", nodes[i].0)));
            }
        }
    }
    let base = &nodes[..needed];
    // Newton divided differences.
    let mut table: Vec<Rational> = base.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&base[i].0 - &base[i - level].0);
        }
    }
    let mut poly = UniPoly::zero();
    let mut basis = UniPoly::constant(Rational::one());
    for (i, c) in table.iter().enumerate() {
        poly = &poly + &basis.scale(c);
        let factor = UniPoly::new(vec![-base[i].0.clone(), Rational::one()]);
        basis = &basis * &factor;
    }
    for (x, y) in &nodes[needed..] {
        let residual = poly.eval(x) - y;
        if !residual.is_zero() {
            return Err(Error::DegreeBound {
                residual: residual.to_string(),
            });
        }
    }
    Ok(poly)
}
