//! Toric ideals of affine semigroups and multigraded K-polynomials.
//!
//! Binomials `x^a - x^b` are stored as exponent pairs; S-pairs and
//! reductions of such binomials stay binomial, so no coefficients appear.

use std::cmp::Ordering;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::lattice::kernel_basis;

pub type Monomial = Vec<u32>;

/// Weighted reverse lexicographic order in which the variable `last` is
/// the cheapest: ties in weight go to the term with fewer factors of
/// `x_last`, then revlex on the remaining variables.
#[derive(Clone, Debug)]
struct TermOrder {
    weights: Vec<i64>,
    last: usize,
}

impl TermOrder {
    fn weight(&self, a: &[u32]) -> i64 {
        a.iter().zip(&self.weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.weight(a).cmp(&self.weight(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        match a[self.last].cmp(&b[self.last]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// `x^a - x^b` oriented by the order; `None` if zero.
    fn new(a: Monomial, b: Monomial, ord: &TermOrder) -> Option<Self> {
        match ord.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
        }
    }

    /// Divide both terms by their common factor.
    fn cancel(mut self) -> Self {
        for (a, b) in self.lead.iter_mut().zip(self.trail.iter_mut()) {
            let m = (*a).min(*b);
            *a -= m;
            *b -= m;
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn reduce(mut h: Binomial, basis: &[Binomial], ord: &TermOrder) -> Option<Binomial> {
    loop {
        let Some(g) = basis.iter().find(|g| divides(&g.lead, &h.lead)) else {
            return Some(h.cancel());
        };
        let moved: Monomial = h
            .lead
            .iter()
            .zip(&g.lead)
            .zip(&g.trail)
            .map(|((c, a), b)| c - a + b)
            .collect();
        h = Binomial::new(moved, h.trail, ord)?;
    }
}

fn s_pair(f: &Binomial, g: &Binomial, ord: &TermOrder) -> Option<Binomial> {
    let l = lcm(&f.lead, &g.lead);
    let shift = |b: &Binomial| -> Monomial {
        l.iter()
            .zip(&b.lead)
            .zip(&b.trail)
            .map(|((l, a), t)| l - a + t)
            .collect()
    };
    Binomial::new(shift(f), shift(g), ord)
}

/// Buchberger's algorithm for binomials: normal selection strategy with
/// the product and chain criteria. Returns a minimal Gröbner basis.
fn groebner(input: Vec<Binomial>, ord: &TermOrder, max_pairs: usize) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut pending: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut open: HashSet<(usize, usize)> = HashSet::new();
    let add = |g: Binomial,
               basis: &mut Vec<Binomial>,
               pending: &mut BinaryHeap<Reverse<(i64, usize, usize)>>,
               open: &mut HashSet<(usize, usize)>| {
        let new = basis.len();
        for (k, b) in basis.iter().enumerate() {
            pending.push(Reverse((ord.weight(&lcm(&b.lead, &g.lead)), k, new)));
            open.insert((k, new));
        }
        basis.push(g);
    };
    for g in input {
        if let Some(r) = reduce(g, &basis, ord) {
            add(r, &mut basis, &mut pending, &mut open);
        }
    }
    let mut processed = 0usize;
    while let Some(Reverse((_, i, j))) = pending.pop() {
        open.remove(&(i, j));
        processed += 1;
        if processed > max_pairs {
            return Err(Error::Resource(format!(
                "Groebner basis exceeded {max_pairs} S-pairs"
            )));
        }
        if coprime(&basis[i].lead, &basis[j].lead) {
            continue;
        }
        let l = lcm(&basis[i].lead, &basis[j].lead);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && !open.contains(&key(i, k))
                && !open.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let Some(s) = s_pair(&basis[i], &basis[j], ord) else {
            continue;
        };
        if let Some(r) = reduce(s, &basis, ord) {
            add(r, &mut basis, &mut pending, &mut open);
        }
    }
    let leads: Vec<Monomial> = basis.iter().map(|b| b.lead.clone()).collect();
    Ok(basis
        .into_iter()
        .enumerate()
        .filter(|(i, b)| {
            !leads
                .iter()
                .enumerate()
                .any(|(j, l)| j != *i && divides(l, &b.lead) && (l != &b.lead || j < *i))
        })
        .map(|(_, b)| b)
        .collect())
}

/// Minimal generators of a monomial ideal, sorted.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in sorted.iter().enumerate() {
        let redundant = sorted
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && divides(h, g) && (h != g));
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

fn l1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Shorten a lattice basis by pairwise reduction until no `b_i ± b_j`
/// has smaller 1-norm than `b_i`.
fn shorten(mut basis: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1, -1] {
                    let cand: Vec<i64> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(a, b)| a + sign * b)
                        .collect();
                    if l1(&cand) < l1(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
    basis
}

/// Leading monomials of a Gröbner basis of the toric ideal of the columns
/// `a_1, ..., a_k` (each in `Z^dim`), minimalized.
///
/// Starting from the binomials of a lattice basis of the relations, the
/// ideal is saturated one variable at a time: with `x_i` cheapest in a
/// graded reverse lexicographic order, dividing a Gröbner basis by powers
/// of `x_i` gives a Gröbner basis of the saturation by `x_i`.
pub fn toric_initial_ideal(
    gens: &[Vec<i64>],
    dim: usize,
    grading: &[i64],
    max_pairs: usize,
) -> Result<Vec<Monomial>> {
    let k = gens.len();
    // relation matrix: dim x k
    let a: Vec<Vec<i64>> = (0..dim).map(|i| gens.iter().map(|g| g[i]).collect()).collect();
    let kernel = shorten(kernel_basis(&a, k));
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let weights: Vec<i64> = gens
        .iter()
        .map(|g| g.iter().zip(grading).map(|(x, l)| x * l).sum())
        .collect();
    let mut ord = TermOrder { weights, last: 0 };
    let mut basis: Vec<Binomial> = kernel
        .iter()
        .filter_map(|u| {
            let plus: Monomial = u.iter().map(|&x| x.max(0) as u32).collect();
            let minus: Monomial = u.iter().map(|&x| (-x).max(0) as u32).collect();
            Binomial::new(plus, minus, &ord)
        })
        .collect();
    for var in 0..k {
        ord.last = var;
        let oriented: Vec<Binomial> = basis
            .into_iter()
            .filter_map(|b| Binomial::new(b.lead, b.trail, &ord))
            .collect();
        basis = groebner(oriented, &ord, max_pairs)?
            .into_iter()
            .map(|b| {
                let mut b = b;
                let m = b.lead[var].min(b.trail[var]);
                b.lead[var] -= m;
                b.trail[var] -= m;
                b
            })
            .collect();
    }
    // the last round's divided basis is a Gröbner basis of the toric ideal
    Ok(minimalize(
        &basis.iter().map(|b| b.lead.clone()).collect::<Vec<_>>(),
    ))
}

/// Multigraded K-polynomial polynomial in `y_1..y_k`: exponent vector to
/// integer coefficient.
pub type YPoly = HashMap<Vec<u32>, BigInt>;

fn y_add(acc: &mut YPoly, other: &YPoly, shift: Option<usize>) {
    for (e, c) in other {
        let mut e = e.clone();
        if let Some(i) = shift {
            e[i] += 1;
        }
        let slot = acc.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn y_mul(a: &YPoly, b: &YPoly) -> YPoly {
    let mut out = YPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// K-polynomial of `S / M` for the monomial ideal `M` in `nvars` variables,
/// via `K(M) = K(M + x_i) + y_i K(M : x_i)`.
pub fn k_polynomial(gens: &[Monomial], nvars: usize) -> YPoly {
    let mut memo: HashMap<Vec<Monomial>, YPoly> = HashMap::new();
    k_poly_rec(minimalize(gens), nvars, &mut memo)
}

fn k_poly_rec(gens: Vec<Monomial>, nvars: usize, memo: &mut HashMap<Vec<Monomial>, YPoly>) -> YPoly {
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // variable shared by the most generators
    let mut best: Option<(usize, usize)> = None;
    for i in 0..nvars {
        let count = gens.iter().filter(|g| g[i] > 0).count();
        if count >= 2 && best.is_none_or(|(_, c)| count > c) {
            best = Some((i, count));
        }
    }
    let result = match best {
        None => {
            let mut acc: YPoly = YPoly::from([(vec![0; nvars], BigInt::one())]);
            for g in &gens {
                let mut f = YPoly::from([(vec![0; nvars], BigInt::one())]);
                f.insert(g.clone(), -BigInt::one());
                acc = y_mul(&acc, &f);
            }
            acc
        }
        Some((i, _)) => {
            let mut var = vec![0u32; nvars];
            var[i] = 1;
            let mut plus: Vec<Monomial> = gens.iter().filter(|g| g[i] == 0).cloned().collect();
            plus.push(var);
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    h[i] = h[i].saturating_sub(1);
                    h
                })
                .collect();
            let mut acc = k_poly_rec(minimalize(&plus), nvars, memo);
            let colon_k = k_poly_rec(minimalize(&colon), nvars, memo);
            y_add(&mut acc, &colon_k, Some(i));
            acc
        }
    };
    memo.insert(gens, result.clone());
    result
}
