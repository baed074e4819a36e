//! Small exact linear algebra over the integers and rationals.

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Determinant of a small square integer matrix (Bareiss elimination).
pub fn det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank of a list of integer vectors.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in c..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Coefficients `x` with `sum_j x_j cols[j] = target`, when the columns are
/// linearly independent and the target lies in their span.
pub fn solve(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = cols.len();
    let dim = target.len();
    // augmented rows
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| Rational::from_integer(c[i].into())).collect();
            row.push(Rational::from_integer(target[i].into()));
            row
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::with_capacity(k);
    for c in 0..k {
        let Some(p) = (r..dim).find(|&i| !m[i][c].is_zero()) else {
            return None;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..dim {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=k {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if (r..dim).any(|i| !m[i][k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| m[i][k].clone()).collect())
}

/// Integral solution of [`solve`], if one exists.
pub fn solve_integral(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let x = solve(cols, target)?;
    x.iter()
        .map(|q| {
            q.is_integer()
                .then(|| i64::try_from(q.to_integer()).ok())
                .flatten()
        })
        .collect()
}

/// Normal vector to the hyperplane spanned by `d - 1` vectors in `R^d`
/// (generalized cross product).
pub fn normal(vectors: &[Vec<i64>], d: usize) -> Vec<i64> {
    assert_eq!(vectors.len() + 1, d);
    (0..d)
        .map(|i| {
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|r| {
                    let mut row: Vec<i64> = vectors.iter().map(|v| v[r]).collect();
                    row.push(i64::from(r == i));
                    row
                })
                .collect();
            i64::try_from(det(&rows)).expect("normal entry exceeds i64")
        })
        .collect()
}
