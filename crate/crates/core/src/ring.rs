//! The Cox ring `S = ℚ[x_ρ]` graded by the class group.

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::grading::{ClassGroup, DivisorClass};
use crate::memo::Memo;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

/// Exponent vector of a monomial. `Ord` is graded reverse lexicographic:
/// higher total degree is larger; on ties the monomial with the smaller
/// exponent in the last differing variable is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial basis of `S^α`, in decreasing grevlex order.
#[derive(Debug, Clone)]
pub struct GradedPieceBasis {
    pub degree: DivisorClass,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedPieceBasis {
    fn new(degree: DivisorClass, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GradedPieceBasis { degree, monomials, index }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Finite evidence for the multiplication map `S^α₁ ⊗ S^α₂ → S^{α₁+α₂}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OdaCertificate {
    pub alpha1: DivisorClass,
    pub alpha2: DivisorClass,
    pub dim_alpha1: usize,
    pub dim_alpha2: usize,
    pub target_dim: usize,
    pub image_rank: usize,
    pub surjective: bool,
    pub cokernel_dim: usize,
}

/// A graded polynomial ring with its irrelevant ideal.
#[derive(Debug)]
pub struct CoxRing {
    dim: usize,
    class_group: ClassGroup,
    names: Vec<String>,
    irrelevant: Vec<Monomial>,
    bases: Memo<DivisorClass, GradedPieceBasis>,
}

impl CoxRing {
    /// Cox ring of a fan: variables `x0..x{r−1}`.
    pub fn from_fan(fan: &Fan) -> Result<Arc<CoxRing>> {
        let cl = ClassGroup::from_fan(fan)?;
        let names = (0..fan.num_rays()).map(|i| format!("x{i}")).collect();
        Ok(Arc::new(CoxRing::new(fan.dim(), cl, names, irrelevant_generators(fan))))
    }

    /// `dim` is the dimension of the toric variety the ring belongs to.
    pub fn new(dim: usize, class_group: ClassGroup, names: Vec<String>, irrelevant: Vec<Monomial>) -> CoxRing {
        assert_eq!(class_group.num_vars(), names.len(), "one name per variable");
        CoxRing { dim, class_group, names, irrelevant, bases: Memo::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class_group(&self) -> &ClassGroup {
        &self.class_group
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_degree(&self, i: usize) -> &DivisorClass {
        &self.class_group.variable_degrees()[i]
    }

    /// Generators `x^σ̂` of the irrelevant ideal.
    pub fn irrelevant_generators(&self) -> &[Monomial] {
        &self.irrelevant
    }

    pub fn degree_of(&self, m: &Monomial) -> Result<DivisorClass> {
        self.class_group.degree_of(&m.0)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Complete basis of `S^α`; empty when `α` is not effective. Cached.
    pub fn monomial_basis(&self, alpha: &DivisorClass) -> Result<Arc<GradedPieceBasis>> {
        let alpha = self.class_group.normalize(alpha.clone())?;
        Ok(self.bases.get_or_insert_with(&alpha, || {
            let mut memo = HashMap::new();
            let tails = suffix_basis(&self.class_group, 0, &alpha, &mut memo);
            GradedPieceBasis::new(alpha.clone(), tails.iter().map(|e| Monomial(e.clone())).collect())
        }))
    }

    pub fn piece_dimension(&self, alpha: &DivisorClass) -> Result<usize> {
        Ok(self.monomial_basis(alpha)?.dim())
    }

    /// Rank of the span of all products `m₁·m₂` against `dim S^{α₁+α₂}`.
    /// Products of monomials are monomials, so the span's rank is the number
    /// of distinct products.
    pub fn multiplication_surjective(&self, a1: &DivisorClass, a2: &DivisorClass) -> Result<OdaCertificate> {
        let cl = &self.class_group;
        let a1 = cl.normalize(a1.clone())?;
        let a2 = cl.normalize(a2.clone())?;
        let b1 = self.monomial_basis(&a1)?;
        let b2 = self.monomial_basis(&a2)?;
        let target = self.monomial_basis(&cl.add(&a1, &a2))?;
        let mut hit = vec![false; target.dim()];
        for m1 in &b1.monomials {
            for m2 in &b2.monomials {
                let idx = target.index_of(&m1.mul(m2)).expect("product lies in the target degree");
                hit[idx] = true;
            }
        }
        let image_rank = hit.iter().filter(|&&h| h).count();
        Ok(OdaCertificate {
            alpha1: a1,
            alpha2: a2,
            dim_alpha1: b1.dim(),
            dim_alpha2: b2.dim(),
            target_dim: target.dim(),
            image_rank,
            surjective: image_rank == target.dim(),
            cokernel_dim: target.dim() - image_rank,
        })
    }

    pub fn check_same(self: &Arc<Self>, other: &Arc<Self>) -> Result<()> {
        if Arc::ptr_eq(self, other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// Exponent vectors over variables `i..r` of degree `gamma`, memoized on
/// `(i, gamma)`. Independent of the depth-first search in the grading module.
fn suffix_basis(
    cl: &ClassGroup,
    i: usize,
    gamma: &DivisorClass,
    memo: &mut HashMap<(usize, DivisorClass), Arc<Vec<Vec<u32>>>>,
) -> Arc<Vec<Vec<u32>>> {
    let r = cl.num_vars();
    if i == r {
        return Arc::new(if gamma.is_zero() { vec![Vec::new()] } else { Vec::new() });
    }
    let key = (i, gamma.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let weight = cl.weight(gamma);
    let mut out = Vec::new();
    if weight >= 0 {
        let wi = cl.variable_weights()[i];
        let deg = &cl.variable_degrees()[i];
        for k in 0..=(weight / wi) as u32 {
            let rest = cl.combine(1, gamma, -(k as i64), deg);
            for tail in suffix_basis(cl, i + 1, &rest, memo).iter() {
                let mut e = Vec::with_capacity(r - i);
                e.push(k);
                e.extend_from_slice(tail);
                out.push(e);
            }
        }
    }
    let out = Arc::new(out);
    memo.insert(key, out.clone());
    out
}

/// One square-free monomial `∏_{ρ∉σ} x_ρ` per maximal cone, duplicates removed.
pub fn irrelevant_generators(fan: &Fan) -> Vec<Monomial> {
    let r = fan.num_rays();
    let mut out: Vec<Monomial> = Vec::new();
    for cone in fan.max_cones() {
        let m = Monomial((0..r).map(|i| u32::from(!cone.contains(&i))).collect());
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard;

    fn c(x: i64) -> DivisorClass {
        DivisorClass::free(vec![x])
    }

    #[test]
    fn grevlex_order() {
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![1, 0, 1]);
        let d = Monomial(vec![0, 1, 0]);
        assert!(a > b);
        assert!(b > d);
        assert!(Monomial(vec![1, 1, 0]) > Monomial(vec![1, 0, 1]));
    }

    #[test]
    fn basis_examples() {
        let p2 = CoxRing::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(p2.monomial_basis(&c(2)).unwrap().dim(), 6);
        assert_eq!(p2.monomial_basis(&c(-1)).unwrap().dim(), 0);

        let w = CoxRing::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        let b = w.monomial_basis(&c(2)).unwrap();
        let got: Vec<Vec<u32>> = b.monomials.iter().map(|m| m.0.clone()).collect();
        assert_eq!(got, vec![vec![2, 0, 0], vec![1, 0, 1], vec![0, 0, 2], vec![0, 1, 0]]);
    }

    #[test]
    fn irrelevant_examples() {
        let p2 = CoxRing::from_fan(&standard::projective_space(2)).unwrap();
        let mut gens: Vec<Vec<u32>> = p2.irrelevant_generators().iter().map(|m| m.0.clone()).collect();
        gens.sort();
        assert_eq!(gens, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);

        let q = irrelevant_generators(&standard::p1_x_p1());
        assert_eq!(q.len(), 4);
        assert!(q.iter().all(|m| m.total_degree() == 2 && m.0.iter().all(|&e| e <= 1)));

        assert_eq!(irrelevant_generators(&standard::projective_space(3)).len(), 4);
    }

    #[test]
    fn oda_examples() {
        let p3 = CoxRing::from_fan(&standard::projective_space(3)).unwrap();
        let cert = p3.multiplication_surjective(&c(1), &c(1)).unwrap();
        assert!(cert.surjective);
        assert_eq!((cert.image_rank, cert.target_dim), (10, 10));
        assert!(p3.multiplication_surjective(&c(2), &c(0)).unwrap().surjective);

        let w = CoxRing::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        let cert = w.multiplication_surjective(&c(1), &c(1)).unwrap();
        assert!(!cert.surjective);
        assert_eq!(cert.cokernel_dim, 1);
    }
}
