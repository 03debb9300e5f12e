//! Integer matrix normal forms over ℤ.
//!
//! Matrices are small (rays × dimension), so entries are `i128` with checked
//! arithmetic; overflow surfaces as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i128>>;

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("lattice arithmetic"))
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("lattice arithmetic"))
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_slice(xs: &[i64]) -> i64 {
    xs.iter().fold(0i128, |g, &x| gcd(g, x as i128)) as i64
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// Row-unimodular bookkeeping: `u` accumulates the row operations, `u_inv`
/// stays its inverse.
struct RowOps {
    u: IntMatrix,
    u_inv: IntMatrix,
}

impl RowOps {
    fn new(n: usize) -> Self {
        RowOps { u: identity(n), u_inv: identity(n) }
    }

    fn swap(&mut self, a: &mut IntMatrix, i: usize, j: usize) {
        if i == j {
            return;
        }
        a.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate(&mut self, a: &mut IntMatrix, i: usize) {
        for x in a[i].iter_mut() {
            *x = -*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -*x;
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -row[i];
        }
    }

    /// row_i += c * row_j
    fn add_multiple(&mut self, a: &mut IntMatrix, i: usize, j: usize, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for k in 0..a[i].len() {
            a[i][k] = add(a[i][k], mul(c, a[j][k])?)?;
        }
        for k in 0..self.u[i].len() {
            self.u[i][k] = add(self.u[i][k], mul(c, self.u[j][k])?)?;
        }
        for row in self.u_inv.iter_mut() {
            row[j] = add(row[j], mul(-c, row[i])?)?;
        }
        Ok(())
    }
}

/// Smith normal form `U·A·W = D` of an `m × n` matrix, keeping only the left
/// transform (and its inverse) since callers need the cokernel map.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub rank: usize,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix, ncols: usize) -> Result<SmithForm> {
    let m = a.len();
    let mut a = a.clone();
    let mut ops = RowOps::new(m);
    let mut t = 0;
    while t < m.min(ncols) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..ncols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        ops.swap(&mut a, t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    ops.add_multiple(&mut a, i, t, -q)?;
                    if a[i][t] != 0 {
                        ops.swap(&mut a, t, i);
                        done = false;
                    }
                }
            }
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut() {
                        row[j] = add(row[j], mul(-q, row[t])?)?;
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        done = false;
                    }
                }
            }
            if !done {
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            let pivot = a[t][t];
            let bad = (t + 1..m).find(|&i| (t + 1..ncols).any(|j| a[i][j] % pivot != 0));
            match bad {
                Some(i) => ops.add_multiple(&mut a, t, i, 1)?,
                None => break,
            }
        }
        if a[t][t] < 0 {
            ops.negate(&mut a, t);
        }
        t += 1;
    }
    let diagonal: Vec<i128> = (0..t).map(|i| a[i][i]).collect();
    Ok(SmithForm { rank: t, diagonal, u: ops.u, u_inv: ops.u_inv })
}

/// Row Hermite normal form `T·A = H` with `T` unimodular. Pivots are positive
/// and entries above each pivot are reduced into `[0, pivot)`.
#[derive(Debug, Clone)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub t: IntMatrix,
    pub t_inv: IntMatrix,
}

pub fn hermite_normal_form(a: &IntMatrix, ncols: usize) -> Result<HermiteForm> {
    let m = a.len();
    let mut h = a.clone();
    let mut ops = RowOps::new(m);
    let mut row = 0;
    for col in 0..ncols {
        if row == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..m {
                if h[i][col] != 0 && best.map_or(true, |b| h[i][col].abs() < h[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            ops.swap(&mut h, row, b);
            let mut clean = true;
            for i in row + 1..m {
                if h[i][col] != 0 {
                    let q = h[i][col].div_euclid(h[row][col]);
                    ops.add_multiple(&mut h, i, row, -q)?;
                    if h[i][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if h[row][col] == 0 {
            continue;
        }
        if h[row][col] < 0 {
            ops.negate(&mut h, row);
        }
        let p = h[row][col];
        for i in 0..row {
            let q = h[i][col].div_euclid(p);
            ops.add_multiple(&mut h, i, row, -q)?;
        }
        row += 1;
    }
    Ok(HermiteForm { h, t: ops.u, t_inv: ops.u_inv })
}

pub fn mat_vec(a: &IntMatrix, v: &[i128]) -> Result<Vec<i128>> {
    a.iter()
        .map(|row| row.iter().zip(v).try_fold(0i128, |acc, (&x, &y)| add(acc, mul(x, y)?)))
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix, inner: usize, ncols: usize) -> Result<IntMatrix> {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| (0..inner).try_fold(0i128, |acc, k| add(acc, mul(row[k], b[k][j])?)))
                .collect()
        })
        .collect()
}
