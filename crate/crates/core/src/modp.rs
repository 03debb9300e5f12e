//! Dense row echelon form over `𝔽_p`, `p = 2^31 − 1`.
//!
//! For an integer matrix the rank over `ℚ` is at least the rank mod `p`, so a
//! full rank here certifies a full rank over `ℚ`. Nothing else computed here
//! is taken as proof.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub const P: u64 = (1 << 31) - 1;

/// `x mod p` for `x < 2^62`.
#[inline]
fn fold(x: u64) -> u64 {
    let x = (x & P) + (x >> 31);
    let x = (x & P) + (x >> 31);
    if x >= P {
        x - P
    } else {
        x
    }
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    fold(a * b)
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r < BigInt::zero() { r + BigInt::from(P) } else { r };
    r.to_u64().expect("residue fits")
}

/// `n/d mod p`, or `None` when `p | d`.
pub fn reduce(q: &BigRational) -> Option<u64> {
    let d = reduce_int(q.denom());
    (d != 0).then(|| mul(reduce_int(q.numer()), inv(d)))
}

#[derive(Debug, Clone)]
pub struct ModEchelon {
    ncols: usize,
    /// Pivot column -> row normalized to a leading 1.
    pivots: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl ModEchelon {
    pub fn new(ncols: usize) -> Self {
        ModEchelon { ncols, pivots: vec![None; ncols], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.ncols
    }

    fn reduce_row(&self, row: &mut [u64]) -> Option<usize> {
        for c in 0..self.ncols {
            if row[c] == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(p) => {
                    let f = P - row[c];
                    for (x, &y) in row[c..].iter_mut().zip(&p[c..]) {
                        *x = fold(*x + f * y);
                    }
                }
                None => return Some(c),
            }
        }
        None
    }

    /// Sparse input; returns whether the rank went up.
    pub fn insert(&mut self, entries: &[(usize, u64)]) -> bool {
        let mut row = vec![0u64; self.ncols];
        for &(c, v) in entries {
            row[c] = fold(row[c] + v);
        }
        match self.reduce_row(&mut row) {
            Some(lead) => {
                let s = inv(row[lead]);
                for x in row.iter_mut().skip(lead) {
                    *x = mul(*x, s);
                }
                self.pivots[lead] = Some(row);
                self.rank += 1;
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, entries: &[(usize, u64)]) -> bool {
        let mut row = vec![0u64; self.ncols];
        for &(c, v) in entries {
            row[c] = fold(row[c] + v);
        }
        self.reduce_row(&mut row).is_none()
    }
}
