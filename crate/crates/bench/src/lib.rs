//! Fixtures shared by the benchmarks.

use coxhodge::fan::standard;
use coxhodge::generic::random_polynomials;
use coxhodge::{DivisorClass, GradedPolynomial, ToricVariety};

pub fn projective_space(n: usize) -> ToricVariety {
    ToricVariety::new(standard::projective_space(n)).expect("valid fan")
}

/// `Σ x_i^m` on the given variety.
pub fn fermat(x: &ToricVariety, m: u32) -> GradedPolynomial {
    let text: Vec<String> = (0..x.ring().num_vars()).map(|i| format!("x{i}^{m}")).collect();
    x.parse(&text.join(" + ")).expect("homogeneous")
}

/// Two dense cubics in ℙ⁵, seed 0.
pub fn generic_cubics(p5: &ToricVariety) -> Vec<GradedPolynomial> {
    let d = DivisorClass::free(vec![3]);
    random_polynomials(p5.ring(), &[d.clone(), d], 0).expect("effective degree")
}
