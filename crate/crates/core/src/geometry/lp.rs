//! Exact feasibility linear programming over the rationals.
//!
//! Only phase I of the simplex method is needed: every question the library
//! asks (cone membership, polytope edges, positive gradings) reduces to
//! "does `A x = b, x >= 0` have a solution".

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Find `x >= 0` with `a x = b`, where `a` is given row-major. Uses Bland's
/// rule, so it always terminates.
pub fn solve_nonneg(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // tableau columns: n originals, m artificials, rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the phase-I objective (minimize sum of artificials)
    let mut cost = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rational> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &best_ratio {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            // unbounded direction of the phase-I objective cannot occur
            // (it is bounded below by zero); treat as numerical impossibility
            unreachable!("phase-I objective unbounded");
        };
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let width = t[r].len();
    let p = t[r][c].clone();
    for j in 0..width {
        t[r][j] = &t[r][j] / &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for j in 0..width {
            if !pivot_row[j].is_zero() {
                row[j] -= &f * &pivot_row[j];
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for j in 0..width {
            if !pivot_row[j].is_zero() {
                cost[j] -= &f * &pivot_row[j];
            }
        }
    }
}

fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Nonnegative coefficients expressing `target` in the cone of `gens`, if any.
pub fn cone_combination(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let dim = target.len();
    let a: Vec<Vec<Rational>> = (0..dim).map(|i| gens.iter().map(|g| r(g[i])).collect()).collect();
    let b: Vec<Rational> = target.iter().map(|&x| r(x)).collect();
    solve_nonneg(&a, &b)
}

pub fn in_cone(gens: &[Vec<i64>], target: &[i64]) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    cone_combination(gens, target).is_some()
}

/// A linear functional with `<l, g> >= 1` for every generator, scaled to be
/// integral. Exists iff the cone generated by `gens` is pointed and no
/// generator is zero.
pub fn positive_grading(gens: &[Vec<i64>], dim: usize) -> Option<Vec<i64>> {
    if gens.is_empty() {
        return Some(vec![0; dim]);
    }
    // variables: l+ (dim), l- (dim), slack (k)
    let k = gens.len();
    let width = 2 * dim + k;
    let mut a = Vec::with_capacity(k);
    for (j, g) in gens.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for i in 0..dim {
            row[i] = r(g[i]);
            row[dim + i] = r(-g[i]);
        }
        row[2 * dim + j] = r(-1);
        a.push(row);
    }
    let b = vec![Rational::one(); k];
    let x = solve_nonneg(&a, &b)?;
    let l: Vec<Rational> = (0..dim).map(|i| &x[i] - &x[dim + i]).collect();
    let denom = l.iter().fold(num_bigint::BigInt::one(), |acc, q| {
        num_integer::lcm(acc, q.denom().clone())
    });
    Some(
        l.iter()
            .map(|q| {
                let v = q.numer() * (&denom / q.denom());
                i64::try_from(v).expect("grading entry exceeds i64")
            })
            .collect(),
    )
}
