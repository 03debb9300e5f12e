//! Exact sparse linear algebra over ℚ.
//!
//! Rows are stored as primitive integer vectors and combined fraction-free:
//! eliminating a leading entry computes `p·row − c·pivot` and divides out the
//! content, so no rational numbers appear during elimination. When a new row
//! reaches an occupied pivot column with a shorter leading coefficient (bit
//! length) than the current pivot, the two are exchanged; this is the partial
//! pivoting rule and keeps the stored pivots small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse integer row, entries sorted by column, no explicit zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators and removes content. Returns `None` for the zero vector.
pub fn primitive_from_rational(entries: impl IntoIterator<Item = (usize, BigRational)>) -> Option<SparseRow> {
    let mut entries: Vec<(usize, BigRational)> = entries.into_iter().filter(|(_, q)| !q.is_zero()).collect();
    if entries.is_empty() {
        return None;
    }
    entries.sort_by_key(|(c, _)| *c);
    let lcm = entries.iter().fold(BigInt::one(), |l, (_, q)| l.lcm(q.denom()));
    let row: SparseRow = entries
        .into_iter()
        .map(|(c, q)| (c, q.numer() * (&lcm / q.denom())))
        .collect();
    Some(make_primitive(row))
}

fn make_primitive(mut row: SparseRow) -> SparseRow {
    let mut g = BigInt::zero();
    for (_, x) in &row {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    let negate = row.first().map_or(false, |(_, x)| x.is_negative());
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    row
}

/// `a·row − b·pivot` where `a`, `b` cancel the shared leading column, then
/// made primitive.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let lead_row = &row[0].1;
    let lead_piv = &pivot[0].1;
    let g = lead_row.gcd(lead_piv);
    let a = lead_piv / &g;
    let b = lead_row / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                let v = &a * &row[i].1 - &b * &pivot[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(&b * &pivot[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    if out.is_empty() {
        out
    } else {
        make_primitive(out)
    }
}

/// Row echelon form of a subspace of ℚ^ncols, built incrementally.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    /// Reduces the leading entry until it hits a free column. The zero row is
    /// returned empty.
    fn reduce_lead(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, _)) = row.first() {
            match self.pivots.get(lead) {
                Some(p) => row = eliminate(&row, p),
                None => break,
            }
        }
        row
    }

    /// Adds a row to the span. Returns true when the rank went up.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        if row.is_empty() {
            return false;
        }
        debug_assert!(row.last().map_or(true, |(c, _)| *c < self.ncols));
        let mut row = make_primitive(row);
        loop {
            let Some((lead, coeff)) = row.first() else { return false };
            let lead = *lead;
            match self.pivots.get_mut(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    if coeff.bits() < p[0].1.bits() {
                        std::mem::swap(p, &mut row);
                    }
                    row = eliminate(&row, p);
                }
            }
        }
    }

    pub fn insert_rational(&mut self, entries: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        match primitive_from_rational(entries) {
            Some(row) => self.insert(row),
            None => false,
        }
    }

    /// Membership of a vector in the row span.
    pub fn contains(&self, row: SparseRow) -> bool {
        if row.is_empty() {
            return true;
        }
        self.reduce_lead(make_primitive(row)).is_empty()
    }

    pub fn contains_rational(&self, entries: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        match primitive_from_rational(entries) {
            Some(row) => self.contains(row),
            None => true,
        }
    }

    /// Reduced row echelon form over ℚ, keyed by pivot column, each row
    /// normalized to leading coefficient 1.
    pub fn reduced(&self) -> BTreeMap<usize, BTreeMap<usize, BigRational>> {
        let mut done: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
        for (&pc, row) in self.pivots.iter().rev() {
            let lead = BigRational::from_integer(row[0].1.clone());
            let mut r: BTreeMap<usize, BigRational> = row
                .iter()
                .map(|(c, x)| (*c, BigRational::from_integer(x.clone()) / &lead))
                .collect();
            // Later pivots are already reduced; clear their columns here.
            let cols: Vec<usize> = r.keys().copied().filter(|c| *c != pc && done.contains_key(c)).collect();
            for c in cols {
                let Some(factor) = r.get(&c).cloned() else { continue };
                for (k, v) in &done[&c] {
                    let e = r.entry(*k).or_insert_with(BigRational::zero);
                    *e -= &factor * v;
                    if e.is_zero() {
                        r.remove(k);
                    }
                }
            }
            done.insert(pc, r);
        }
        done
    }

    /// Basis of `{λ : λ·v = 0 for every row v}`, one vector per free column,
    /// in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let rref = self.reduced();
        (0..self.ncols)
            .filter(|c| !rref.contains_key(c))
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.ncols];
                v[free] = BigRational::one();
                for (&pc, row) in &rref {
                    if let Some(x) = row.get(&free) {
                        v[pc] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Rank of a dense rational matrix.
pub fn rank_of(rows: &[Vec<BigRational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert_rational(row.iter().cloned().enumerate());
    }
    ech.rank()
}

/// Solves the square system `A x = b` over ℚ; `None` when `A` is singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let t = &f * &m[col][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank_of(&m), 2);
        let m = vec![vec![q(0), q(0)], vec![q(0), q(0)]];
        assert_eq!(rank_of(&m), 0);
    }

    #[test]
    fn nullspace_annihilates_rows() {
        let rows = vec![vec![q(1), q(1), q(0), q(2)], vec![q(0), q(3), q(1), q(1)]];
        let mut ech = Echelon::new(4);
        for r in &rows {
            ech.insert_rational(r.iter().cloned().enumerate());
        }
        let ns = ech.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot: BigRational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn membership() {
        let mut ech = Echelon::new(3);
        ech.insert_rational(vec![(0, q(2)), (1, q(4))]);
        ech.insert_rational(vec![(1, q(1)), (2, q(-1))]);
        assert!(ech.contains_rational(vec![(0, q(1)), (2, q(2))]));
        assert!(!ech.contains_rational(vec![(2, q(1))]));
        assert!(ech.contains_rational(Vec::new()));
    }

    #[test]
    fn solve_square_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve_square(&a, &[q(3), q(4)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(solve_square(&[vec![q(1), q(2)], vec![q(2), q(4)]], &[q(1), q(1)]).is_none());
    }
}
