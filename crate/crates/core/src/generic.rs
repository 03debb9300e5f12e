//! Seeded pseudo-random homogeneous polynomials, used to stand in for
//! "generic" members of a linear system.

use crate::error::Result;
use crate::grading::DivisorClass;
use crate::poly::GradedPolynomial;
use crate::rational::q;
use crate::ring::CoxRing;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Coefficients are drawn from `[-bound, bound] \ {0}`.
pub const DEFAULT_COEFF_BOUND: i64 = 10;

/// Every monomial of degree `alpha` with a nonzero random coefficient.
pub fn random_polynomial(ring: &Arc<CoxRing>, alpha: &DivisorClass, rng: &mut ChaCha8Rng, bound: i64) -> Result<GradedPolynomial> {
    let basis = ring.monomial_basis(alpha)?;
    let terms = basis.monomials.iter().map(|m| {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-bound..=bound);
        }
        (m.clone(), q(c))
    });
    GradedPolynomial::with_degree(ring, alpha.clone(), terms)
}

/// One polynomial per degree, all from a single stream seeded by `seed`.
pub fn random_polynomials(ring: &Arc<CoxRing>, degrees: &[DivisorClass], seed: u64) -> Result<Vec<GradedPolynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    degrees.iter().map(|d| random_polynomial(ring, d, &mut rng, DEFAULT_COEFF_BOUND)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard;

    #[test]
    fn seeded_output_is_stable() {
        let ring = CoxRing::from_fan(&standard::projective_space(2)).unwrap();
        let d = [DivisorClass::free(vec![2])];
        let a = random_polynomials(&ring, &d, 7).unwrap();
        let b = random_polynomials(&ring, &d, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].terms().len(), 6);
        assert_ne!(a, random_polynomials(&ring, &d, 8).unwrap());
    }
}
