//! Hirzebruch's χ_y generating function for complete intersections in ℙⁿ.
//! Shared by test targets through `#[path]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

type Series = Vec<BigRational>;

fn series_mul(a: &Series, b: &Series, n: usize) -> Series {
    let mut out = vec![q(0); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_div(a: &Series, b: &Series, n: usize) -> Series {
    let mut out = vec![q(0); n + 1];
    let b0 = b[0].clone();
    for k in 0..=n {
        let mut acc = a.get(k).cloned().unwrap_or_else(|| q(0));
        for j in 1..=k {
            if let Some(bj) = b.get(j) {
                acc -= bj * &out[k - j];
            }
        }
        out[k] = acc / &b0;
    }
    out
}

fn series_pow(a: &Series, e: i64, n: usize) -> Series {
    let mut out = vec![q(0); n + 1];
    out[0] = q(1);
    for _ in 0..e {
        out = series_mul(&out, a, n);
    }
    out
}

/// χ_y at an integer `y` of the intersection of degrees `a` in `ℙ^n`.
fn chi_y_at(n: usize, a: &[i64], y: i64) -> BigRational {
    let plus = vec![q(1), q(y)];
    let minus = vec![q(1), q(-1)];
    let mut f = series_div(&vec![q(1)], &series_mul(&plus, &minus, n), n);
    for &aj in a {
        let p = series_pow(&plus, aj, n);
        let m = series_pow(&minus, aj, n);
        let num: Series = p.iter().zip(&m).map(|(x, z)| x - z).collect();
        let den: Series = p.iter().zip(&m).map(|(x, z)| x + z * q(y)).collect();
        f = series_mul(&f, &series_div(&num, &den, n), n);
    }
    f[n].clone()
}

/// Coefficients `χ^p` of χ_y, by interpolation through `y = 1..=dim+1`.
pub fn chi_coefficients(n: usize, a: &[i64]) -> Vec<BigRational> {
    let dim = n - a.len();
    let xs: Vec<i64> = (1..=dim as i64 + 1).collect();
    let ys: Vec<BigRational> = xs.iter().map(|&y| chi_y_at(n, a, y)).collect();
    // Lagrange basis polynomials, expanded.
    let mut coeffs = vec![q(0); dim + 1];
    for (i, &xi) in xs.iter().enumerate() {
        let mut basis = vec![q(1)];
        let mut denom = q(1);
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![q(0); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * q(xj);
            }
            basis = next;
            denom *= q(xi - xj);
        }
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &ys[i] / &denom;
        }
    }
    coeffs
}

/// Primitive `h^{p, dim−p}` of a smooth complete intersection.
pub fn oracle_prim_hodge(n: usize, a: &[i64], p: usize) -> i64 {
    let dim = n - a.len();
    let chi = &chi_coefficients(n, a)[p];
    assert!(chi.is_integer());
    let chi = chi.to_integer();
    let sign = |k: usize| if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let h = if 2 * p == dim {
        sign(p) * chi - 1
    } else {
        sign(dim - p) * (chi - sign(p))
    };
    i64::try_from(h).unwrap()
}
