//! Truncated univariate Laurent series in a formal parameter `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// `sum_k coeffs[k] * s^(valuation + k)`, known exactly for exponents up to
/// and including `cap`.
///
/// Multiplication tracks precision: if `a` is known to `cap_a` and `b` to
/// `cap_b`, their product is known to `min(cap_a + val_b, cap_b + val_a)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    valuation: i32,
    cap: i32,
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn new(valuation: i32, cap: i32, mut coeffs: Vec<Rational>) -> Self {
        let len = (cap - valuation + 1).max(0) as usize;
        coeffs.resize(len, Rational::zero());
        TruncSeries {
            valuation,
            cap,
            coeffs,
        }
    }

    pub fn zero(cap: i32) -> Self {
        Self::new(0, cap, Vec::new())
    }

    pub fn constant(c: Rational, cap: i32) -> Self {
        Self::new(0, cap, vec![c])
    }

    pub fn one(cap: i32) -> Self {
        Self::constant(Rational::one(), cap)
    }

    /// `a + b s`.
    pub fn linear(a: Rational, b: Rational, cap: i32) -> Self {
        Self::new(0, cap, vec![a, b])
    }

    pub fn valuation(&self) -> i32 {
        self.valuation
    }

    pub fn cap(&self) -> i32 {
        self.cap
    }

    /// Pole order (zero if the series has no negative powers).
    pub fn pole_order(&self) -> i32 {
        (-self.valuation).max(0)
    }

    /// Coefficients from `s^valuation` up to `s^cap`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `s^e`. Panics if `e` lies beyond the known precision.
    pub fn coeff(&self, e: i32) -> Rational {
        assert!(
            e <= self.cap,
            "coefficient s^{e} beyond precision cap {}",
            self.cap
        );
        if e < self.valuation {
            return Rational::zero();
        }
        self.coeffs[(e - self.valuation) as usize].clone()
    }

    pub fn truncate(&self, cap: i32) -> Self {
        assert!(cap <= self.cap);
        let len = (cap - self.valuation + 1).max(0) as usize;
        TruncSeries {
            valuation: self.valuation,
            cap,
            coeffs: self.coeffs[..len.min(self.coeffs.len())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            valuation: self.valuation,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        TruncSeries {
            valuation: self.valuation + k,
            cap: self.cap + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse of a series with nonzero constant term and no
    /// pole.
    pub fn inverse(&self) -> Result<Self> {
        if self.valuation != 0 || self.coeffs.is_empty() || self.coeffs[0].is_zero() {
            return Err(Error::consistency("series inverse needs a unit constant term"));
        }
        let n = self.coeffs.len();
        let inv0 = Rational::one() / &self.coeffs[0];
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncSeries::new(0, self.cap, out))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TruncSeries::one(self.cap);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Equality of coefficients up to the smaller of the two caps.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let cap = self.cap.min(other.cap);
        let lo = self.valuation.min(other.valuation);
        (lo..=cap).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let val = self.valuation.min(rhs.valuation);
        let cap = self.cap.min(rhs.cap);
        let coeffs = (val..=cap).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        TruncSeries::new(val, cap, coeffs)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            valuation: self.valuation,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let val = self.valuation + rhs.valuation;
        let cap = (self.cap + rhs.valuation).min(rhs.cap + self.valuation);
        let len = (cap - val + 1).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries::new(val, cap, coeffs)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c}) s^{}", self.valuation + k as i32));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(s^{})", parts.join(" + "), self.cap + 1)
    }
}

static TODD: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Coefficients of `x / (1 - e^{-x})` up to `x^order`.
pub fn todd_coefficients(order: usize) -> Vec<Rational> {
    {
        let cached = TODD.read().unwrap();
        if cached.len() > order {
            return cached[..=order].to_vec();
        }
    }
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let n = order + 8;
    let mut fact = Rational::one();
    let mut base = Vec::with_capacity(n + 1);
    for k in 0..=n {
        fact *= Rational::from_integer((k as i64 + 1).into());
        let sign = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        base.push(sign / &fact);
    }
    let inv = TruncSeries::new(0, n as i32, base)
        .inverse()
        .expect("unit constant term");
    let coeffs = inv.coeffs().to_vec();
    let mut cached = TODD.write().unwrap();
    if cached.len() < coeffs.len() {
        *cached = coeffs.clone();
    }
    coeffs[..=order].to_vec()
}

/// Series of `1 / (1 - e^{-a s})` with simple pole, known up to `s^order`.
pub fn inv_one_minus_exp(a: &Rational, order: i32) -> Result<TruncSeries> {
    if a.is_zero() {
        return Err(Error::DegenerateDirection {
            character: Vec::new(),
        });
    }
    let todd = todd_coefficients((order + 1).max(0) as usize);
    // (1/(a s)) * sum_k todd_k a^k s^k = sum_k todd_k a^(k-1) s^(k-1)
    let mut coeffs = Vec::with_capacity(todd.len());
    let mut power = Rational::one() / a;
    for t in &todd {
        coeffs.push(t * &power);
        power *= a;
    }
    Ok(TruncSeries::new(-1, order, coeffs))
}
