//! Sparse multivariate Laurent polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::series::TruncSeries;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i32>;

/// A Laurent polynomial in `nvars` variables.
///
/// Terms are kept in a `BTreeMap` so iteration order is canonical, and zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exponent: Exponent, c: Rational) -> Self {
        assert_eq!(exponent.len(), nvars, "exponent length must match nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The monomial `T^m` with coefficient one.
    pub fn character(m: &[i32]) -> Self {
        Self::monomial(m.len(), m.to_vec(), Rational::one())
    }

    /// `T_i` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    /// `1 - T^m`.
    pub fn one_minus(m: &[i32]) -> Self {
        let k = m.len();
        let mut p = Self::one(k);
        p.add_term(m.to_vec(), -Rational::one());
        p
    }

    /// Build from `(exponent, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains_monomial(&self, e: &[i32]) -> bool {
        self.terms.contains_key(e)
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        assert_eq!(e.len(), self.nvars, "exponent length must match nvars");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiply by `T^m`.
    pub fn shift(&self, m: &[i32]) -> Self {
        assert_eq!(m.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a monomial substitution `T^m -> T'^{map(m)}`, where `map` must be
    /// additive in `m` (a lattice homomorphism) for the result to be a ring map.
    pub fn substitute_monomial<F>(&self, new_nvars: usize, map: F) -> Self
    where
        F: Fn(&[i32]) -> Exponent,
    {
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            out.add_term(map(e), c.clone());
        }
        out
    }

    /// Value at `T = (1, ..., 1)`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Group terms by cosets of `Z·v`. Returns, per coset, the list of
    /// `(position along v, coefficient)`.
    fn cosets(&self, v: &[i32]) -> BTreeMap<Exponent, Vec<(i32, Rational)>> {
        let j = v.iter().position(|&x| x != 0).expect("direction must be nonzero");
        let mut out: BTreeMap<Exponent, Vec<(i32, Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let q = e[j].div_euclid(v[j]);
            let rep: Exponent = e.iter().zip(v).map(|(a, b)| a - q * b).collect();
            out.entry(rep).or_default().push((q, c.clone()));
        }
        out
    }

    /// Whether `1 - T^v` divides this polynomial.
    ///
    /// Restricting to the subtorus `T^v = 1` collapses every coset of `Z·v`
    /// to a single monomial, so divisibility is the vanishing of each coset's
    /// coefficient sum.
    pub fn divisible_by_one_minus(&self, v: &[i32]) -> bool {
        assert_eq!(v.len(), self.nvars);
        if v.iter().all(|&x| x == 0) {
            return self.is_zero();
        }
        self.cosets(v).values().all(|terms| {
            terms
                .iter()
                .map(|(_, c)| c)
                .fold(Rational::zero(), |a, c| a + c)
                .is_zero()
        })
    }

    /// Exact quotient by `1 - T^v`, or `None` if it does not divide.
    pub fn div_one_minus(&self, v: &[i32]) -> Option<Self> {
        assert_eq!(v.len(), self.nvars);
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        let mut out = Self::zero(self.nvars);
        for (rep, mut terms) in self.cosets(v) {
            terms.sort_by_key(|(q, _)| *q);
            // f = (1 - x) g  =>  g_q = sum_{j <= q} f_j
            let mut running = Rational::zero();
            let mut idx = 0;
            let lo = terms[0].0;
            let hi = terms[terms.len() - 1].0;
            for q in lo..=hi {
                while idx < terms.len() && terms[idx].0 == q {
                    running += &terms[idx].1;
                    idx += 1;
                }
                if !running.is_zero() {
                    let e: Exponent = rep.iter().zip(v).map(|(a, b)| a + q * b).collect();
                    out.add_term(e, running.clone());
                }
            }
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Substitute `T^m -> exp(<c, m> s)` and expand to order `order`.
    pub fn exp_substitute(&self, c: &[i64], order: usize) -> TruncSeries {
        assert_eq!(c.len(), self.nvars, "direction length must match nvars");
        // Collect coefficients by pairing value first; many monomials share it.
        let mut by_pairing: BTreeMap<BigInt, Rational> = BTreeMap::new();
        for (e, coeff) in &self.terms {
            let a: i128 = e.iter().zip(c).map(|(x, y)| *x as i128 * *y as i128).sum();
            *by_pairing.entry(BigInt::from(a)).or_insert_with(Rational::zero) += coeff;
        }
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut powers: Vec<(BigInt, Rational, BigInt)> = by_pairing
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| (a, c, BigInt::one()))
            .collect();
        let mut factorial = BigInt::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k > 0 {
                factorial *= BigInt::from(k);
            }
            let mut total = Rational::zero();
            for (a, c, p) in powers.iter_mut() {
                total += &*c * Rational::from_integer(p.clone());
                *p *= &*a;
            }
            *slot = total / Rational::from_integer(factorial.clone());
        }
        TruncSeries::new(0, order as i32, coeffs)
    }

    /// Largest absolute exponent entry, used for sanity bounds.
    pub fn max_abs_exponent(&self) -> i32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
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
            let is_const = e.iter().all(|&x| x == 0);
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "T{}", i + 1)?,
                    _ => write!(f, "T{}^{}", i + 1, x)?,
                }
            }
        }
        Ok(())
    }
}
