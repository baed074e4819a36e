//! Delta-matroids realized by maximal isotropic subspaces.
//!
//! A `GroundMatrix` has `n` rows and `2n + 1` columns labeled
//! `n̄, ..., 1̄, 0, 1, ..., n` in that order.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{DeltaMatroid, Subset};
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "F2")]
    Gf2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundMatrix {
    field: Field,
    n: usize,
    rows: Vec<Vec<Rational>>,
}

/// Wire format. Entries are integers or decimal/fraction strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroundMatrixJson {
    pub field: Field,
    pub n: usize,
    pub rows: Vec<Vec<serde_json::Value>>,
}

fn parse_entry(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::Number(x) => x
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| Error::invalid(format!("matrix entry {x} is not an integer"))),
        serde_json::Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("matrix entry {s:?} is not a rational"))),
        other => Err(Error::invalid(format!("matrix entry {other} is not a number"))),
    }
}

impl TryFrom<GroundMatrixJson> for GroundMatrix {
    type Error = Error;
    fn try_from(j: GroundMatrixJson) -> Result<Self> {
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(parse_entry).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GroundMatrix::new(j.field, j.n, rows)
    }
}

fn reduce_mod2(x: &Rational) -> Result<Rational> {
    if !x.is_integer() {
        return Err(Error::invalid(format!("entry {x} is not defined over GF(2)")));
    }
    let two = num_bigint::BigInt::from(2);
    let r = num_integer::Integer::mod_floor(x.numer(), &two);
    Ok(Rational::from_integer(r))
}

impl GroundMatrix {
    pub fn new(field: Field, n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if n == 0 || n > super::MAX_N {
            return Err(Error::invalid(format!("ground size {n} out of range")));
        }
        if rows.len() != n {
            return Err(Error::invalid(format!("expected {n} rows, got {}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != 2 * n + 1) {
            return Err(Error::invalid(format!(
                "expected {} columns, got {}",
                2 * n + 1,
                r.len()
            )));
        }
        let rows = match field {
            Field::Rationals => rows,
            Field::Gf2 => rows
                .iter()
                .map(|r| r.iter().map(reduce_mod2).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(GroundMatrix { field, n, rows })
    }

    pub fn from_ints(field: Field, n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::new(field, n, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Column index of element `i` of `[n]`.
    pub fn col_unbarred(&self, i: usize) -> usize {
        self.n + i
    }

    /// Column index of `ī`.
    pub fn col_barred(&self, i: usize) -> usize {
        self.n - i
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        let s = a + b;
        match self.field {
            Field::Rationals => s,
            Field::Gf2 => reduce_mod2(&s).expect("integral"),
        }
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        let p = a * b;
        match self.field {
            Field::Rationals => p,
            Field::Gf2 => reduce_mod2(&p).expect("integral"),
        }
    }

    /// `q(x) = sum_i x_i x_ī + x_0^2`.
    fn quadratic(&self, x: &[Rational]) -> Rational {
        let n = self.n;
        let mut acc = self.mul(&x[n], &x[n]);
        for i in 1..=n {
            let t = self.mul(&x[self.col_unbarred(i)], &x[self.col_barred(i)]);
            acc = self.add(&acc, &t);
        }
        acc
    }

    fn witness(x: &[Rational]) -> Vec<String> {
        x.iter().map(ToString::to_string).collect()
    }

    /// Check that the row space is isotropic for `q`.
    pub fn check_isotropic(&self) -> Result<()> {
        match self.field {
            Field::Rationals => {
                for r in &self.rows {
                    if !self.quadratic(r).is_zero() {
                        return Err(Error::NotIsotropic {
                            witness: Self::witness(r),
                        });
                    }
                }
                for i in 0..self.n {
                    for j in 0..i {
                        let sum: Vec<Rational> = self.rows[i]
                            .iter()
                            .zip(&self.rows[j])
                            .map(|(a, b)| a + b)
                            .collect();
                        if !self.quadratic(&sum).is_zero() {
                            return Err(Error::NotIsotropic {
                                witness: Self::witness(&sum),
                            });
                        }
                    }
                }
            }
            Field::Gf2 => {
                // q is not bilinear in characteristic 2, so test every vector
                let width = 2 * self.n + 1;
                for combo in 1u32..(1 << self.n) {
                    let mut x = vec![Rational::zero(); width];
                    for (k, row) in self.rows.iter().enumerate() {
                        if combo & (1 << k) != 0 {
                            for (xc, rc) in x.iter_mut().zip(row) {
                                *xc = self.add(xc, rc);
                            }
                        }
                    }
                    if !self.quadratic(&x).is_zero() {
                        return Err(Error::NotIsotropic {
                            witness: Self::witness(&x),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Rank of the submatrix on the given columns (all columns if `None`).
    pub fn rank(&self, cols: Option<&[usize]>) -> usize {
        let all: Vec<usize> = (0..2 * self.n + 1).collect();
        let cols = cols.unwrap_or(&all);
        let mut m: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = Rational::one() / &m[rank][c];
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = self.mul(&m[i][c], &inv);
                    for k in c..cols.len() {
                        let t = self.mul(&f, &m[rank][k]);
                        m[i][k] = self.add(&m[i][k], &-t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Columns indexed by the maximal admissible set with unbarred part `s`.
    pub fn admissible_columns(&self, s: Subset) -> Vec<usize> {
        (1..=self.n)
            .map(|i| {
                if s & (1 << (i - 1)) != 0 {
                    self.col_unbarred(i)
                } else {
                    self.col_barred(i)
                }
            })
            .collect()
    }
}

/// The delta-matroid of nonvanishing admissible Plücker coordinates.
pub fn from_matrix(m: &GroundMatrix) -> Result<DeltaMatroid> {
    let n = m.n;
    let rank = m.rank(None);
    if rank < n {
        return Err(Error::RankDeficient { rank, expected: n });
    }
    m.check_isotropic()?;
    let family: Vec<Subset> = (0..(1 as Subset) << n)
        .filter(|&s| m.rank(Some(&m.admissible_columns(s))) == n)
        .collect();
    if family.is_empty() {
        return Err(Error::consistency("isotropic row space has no admissible minor"));
    }
    DeltaMatroid::new(n, &family).map_err(|e| Error::consistency(format!("realized family invalid: {e}")))
}

fn det_gf2(rows: &[u32], size: usize) -> bool {
    let mut m = rows.to_vec();
    for c in 0..size {
        let Some(p) = (c..size).find(|&i| m[i] & (1 << c) != 0) else {
            return false;
        };
        m.swap(c, p);
        for i in 0..size {
            if i != c && m[i] & (1 << c) != 0 {
                m[i] ^= m[c];
            }
        }
    }
    true
}

/// Delta-matroid of a simple graph: `S` is feasible iff the principal
/// submatrix `A[S]` of the adjacency matrix is invertible over GF(2). Also
/// returns the realizing matrix `[A | I | 0]`, with `A` on the unbarred
/// columns and `I` on the barred ones.
pub fn from_graph(n: usize, edges: &[(usize, usize)]) -> Result<(DeltaMatroid, GroundMatrix)> {
    if n == 0 || n > super::MAX_N {
        return Err(Error::invalid(format!("ground size {n} out of range")));
    }
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::invalid(format!("edge {a}{b} outside [1, {n}]")));
        }
        if a == b {
            return Err(Error::invalid(format!("loop at vertex {a}")));
        }
        if adj[a - 1] & (1 << (b - 1)) != 0 {
            return Err(Error::invalid(format!("repeated edge {a}{b}")));
        }
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    let family: Vec<Subset> = (0..(1 as Subset) << n)
        .filter(|&s| {
            let idx: Vec<usize> = (0..n).filter(|&i| s & (1 << i) != 0).collect();
            let rows: Vec<u32> = idx
                .iter()
                .map(|&i| {
                    idx.iter()
                        .enumerate()
                        .fold(0u32, |acc, (k, &j)| acc | (((adj[i] >> j) & 1) << k))
                })
                .collect();
            det_gf2(&rows, idx.len())
        })
        .collect();

    let width = 2 * n + 1;
    let mut rows = vec![vec![0i64; width]; n];
    for (r, row) in rows.iter_mut().enumerate() {
        for i in 1..=n {
            row[n + i] = i64::from((adj[r] >> (i - 1)) & 1);
        }
        row[n - (r + 1)] = 1;
    }
    let matrix = GroundMatrix::from_ints(Field::Gf2, n, &rows)?;
    let dm = DeltaMatroid::new(n, &family)
        .map_err(|e| Error::consistency(format!("graph family invalid: {e}")))?;
    Ok((dm, matrix))
}

/// Wire format `{"n": 7, "edges": [[1,2], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}
