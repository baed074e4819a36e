//! Integer lattice routines built on a Smith-style diagonalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Result of diagonalizing an integer matrix: `u * a * v = diag`, with `u`
/// and `v` unimodular. `u_inv` is kept so column-space bases can be read off
/// directly.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries, all positive, in order.
    pub diag: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl Diagonalization {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Matrix whose columns are the given vectors.
pub fn columns_to_matrix(vectors: &[Vec<i64>], dim: usize) -> IntMatrix {
    (0..dim)
        .map(|i| vectors.iter().map(|v| BigInt::from(v[i])).collect())
        .collect()
}

/// Diagonalize `a` (rows x cols) by unimodular row and column operations.
pub fn diagonalize(a: &IntMatrix, rows: usize, cols: usize) -> Diagonalization {
    let mut m = a.clone();
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    let mut diag = Vec::new();

    while t < rows && t < cols {
        // pivot of minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut m, &mut u, &mut u_inv, t, pi);
        swap_cols(&mut m, &mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                add_row(&mut m, &mut u, &mut u_inv, i, t, &(-q));
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                add_col(&mut m, &mut v, j, t, &(-q));
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                swap_rows(&mut m, &mut u, &mut u_inv, t, best.0);
            }
            if best.1 != t {
                swap_cols(&mut m, &mut v, t, best.1);
            }
        }
        if m[t][t].is_negative() {
            negate_row(&mut m, &mut u, &mut u_inv, t);
        }
        diag.push(m[t][t].clone());
        t += 1;
    }

    Diagonalization {
        u,
        u_inv,
        v,
        diag,
        rows,
        cols,
    }
}

fn swap_rows(m: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    m.swap(i, j);
    u.swap(i, j);
    for row in u_inv.iter_mut() {
        row.swap(i, j);
    }
}

fn swap_cols(m: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in m.iter_mut() {
        row.swap(i, j);
    }
    for row in v.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i += k * row_j
fn add_row(m: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    for c in 0..m[0].len() {
        let x = &m[j][c] * k;
        m[i][c] += x;
    }
    for c in 0..u[0].len() {
        let x = &u[j][c] * k;
        u[i][c] += x;
    }
    // inverse: col_j -= k * col_i
    for row in u_inv.iter_mut() {
        let x = &row[i] * k;
        row[j] -= x;
    }
}

/// col_i += k * col_j
fn add_col(m: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let x = &row[j] * k;
        row[i] += x;
    }
    for row in v.iter_mut() {
        let x = &row[j] * k;
        row[i] += x;
    }
}

fn negate_row(m: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize) {
    for x in m[i].iter_mut() {
        *x = -x.clone();
    }
    for x in u[i].iter_mut() {
        *x = -x.clone();
    }
    for row in u_inv.iter_mut() {
        row[i] = -row[i].clone();
    }
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("lattice entry exceeds i64")
}

/// Basis of the kernel `{x in Z^cols : a x = 0}`.
pub fn kernel_basis(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let rows = a.len();
    if rows == 0 {
        return (0..cols)
            .map(|i| (0..cols).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    let d = diagonalize(&to_big(a), rows, cols);
    (d.rank()..cols)
        .map(|j| (0..cols).map(|i| small(&d.v[i][j])).collect())
        .collect()
}

/// Basis of the lattice `Z{vectors}`.
pub fn span_basis(vectors: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let a = columns_to_matrix(vectors, dim);
    let d = diagonalize(&a, dim, vectors.len());
    (0..d.rank())
        .map(|j| (0..dim).map(|i| small(&(&d.u_inv[i][j] * &d.diag[j]))).collect())
        .collect()
}

/// Basis of the saturated lattice `span_R{vectors} ∩ Z^dim`.
pub fn saturation_basis(vectors: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let a = columns_to_matrix(vectors, dim);
    let d = diagonalize(&a, dim, vectors.len());
    (0..d.rank())
        .map(|j| (0..dim).map(|i| small(&d.u_inv[i][j])).collect())
        .collect()
}

pub fn gcd_vec(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divide by the gcd of the entries. Zero stays zero.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_vec(v);
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
