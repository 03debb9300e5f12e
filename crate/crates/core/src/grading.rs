//! The class group `Cl(ℙ_Σ)` as the grading group of the Cox ring.
//!
//! `Cl` is the cokernel of `M → ℤ^r, m ↦ (⟨m, v_ρ⟩)_ρ`, computed from the
//! Smith normal form of the ray matrix. The free coordinates are put in
//! Hermite normal form so that, e.g., every variable of ℙ^n has degree `1`
//! rather than `−1`.
//!
//! Effectiveness is decided by lattice-point enumeration in
//! `{a ≥ 0 : deg(a) = α}`. That polytope is bounded because the effective cone
//! of a complete fan is pointed: Fourier–Motzkin elimination produces a
//! rational functional `w` on the free part with `w(deg x_ρ) ≥ 1` for every
//! ray, and `Σ a_ρ w(deg x_ρ) = w(α)` bounds every coordinate.

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{self, IntMatrix};
use crate::linalg::solve_square;
use crate::rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// An element of `ℤ^free_rank ⊕ ⊕ ℤ/torsion_orders[i]`, torsion residues in
/// `[0, order)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub free: Vec<i64>,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

impl DivisorClass {
    pub fn new(free: Vec<i64>, torsion: Vec<i64>) -> Self {
        DivisorClass { free, torsion }
    }

    pub fn free(free: Vec<i64>) -> Self {
        DivisorClass { free, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let free: Vec<String> = self.free.iter().map(i64::to_string).collect();
        write!(f, "({})", free.join(","))?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(i64::to_string).collect();
            write!(f, "[{}]", t.join(","))?;
        }
        Ok(())
    }
}

/// Data for lifting a class back to a torus-invariant divisor `a ∈ ℤ^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct LiftData {
    /// r × free_rank
    free_cols: IntMatrix,
    /// r × torsion_count
    torsion_cols: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    free_rank: usize,
    torsion_orders: Vec<i64>,
    degrees: Vec<DivisorClass>,
    lift: Option<LiftData>,
    /// Integer weights `W_ρ ≥ 1` proportional to `w(deg x_ρ)`.
    var_weights: Vec<i128>,
    /// Scaled functional: `W(α) = Σ functional_i · α_free_i`.
    functional: Vec<i128>,
}

/// Positivity verdict for a class on a fan, with the support-function
/// certificate `m_σ` for every maximal cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Positivity {
    pub lift: Vec<i64>,
    pub cartier: bool,
    pub nef: bool,
    pub ample: bool,
    #[serde(serialize_with = "rational::serialize_vecs")]
    pub cone_functionals: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Effectiveness {
    Effective { witness: Vec<u32> },
    NotEffective,
}

impl Effectiveness {
    pub fn is_effective(&self) -> bool {
        matches!(self, Effectiveness::Effective { .. })
    }
}

/// Reading of `iη ≤ β` when computing `m_β`.
#[derive(Debug, Clone, Copy)]
pub enum ClassOrder<'a> {
    /// `β − iη` effective.
    Effective,
    /// `β − iη` nef on the given fan.
    Nef(&'a Fan),
}

impl ClassGroup {
    pub fn from_fan(fan: &Fan) -> Result<ClassGroup> {
        let r = fan.num_rays();
        let d = fan.dim();
        let rays: IntMatrix = fan.rays().iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
        let snf = lattice::smith_normal_form(&rays, d)?;
        if snf.rank != d {
            return Err(Error::InvalidFan("rays do not span the lattice rationally".into()));
        }
        let torsion_rows: Vec<usize> = (0..d).filter(|&i| snf.diagonal[i] > 1).collect();
        let torsion_orders: Vec<i64> =
            torsion_rows.iter().map(|&i| to_i64(snf.diagonal[i])).collect::<Result<_>>()?;
        let free_rank = r - d;
        let q_free: IntMatrix = snf.u[d..].to_vec();
        let hnf = lattice::hermite_normal_form(&q_free, r)?;

        let mut degrees = Vec::with_capacity(r);
        for rho in 0..r {
            let free = (0..free_rank).map(|i| to_i64(hnf.h[i][rho])).collect::<Result<Vec<_>>>()?;
            let torsion = torsion_rows
                .iter()
                .zip(&torsion_orders)
                .map(|(&i, &o)| to_i64(snf.u[i][rho].rem_euclid(o as i128)))
                .collect::<Result<Vec<_>>>()?;
            degrees.push(DivisorClass { free, torsion });
        }

        // lift(c) = U⁻¹ z with z_free = T⁻¹ c_free, z_torsion = c_torsion.
        let u_inv_free: IntMatrix = snf.u_inv.iter().map(|row| row[d..].to_vec()).collect();
        let free_cols = lattice::mat_mul(&u_inv_free, &hnf.t_inv, free_rank, free_rank)?;
        let torsion_cols: IntMatrix =
            snf.u_inv.iter().map(|row| torsion_rows.iter().map(|&i| row[i]).collect()).collect();

        let mut cl = ClassGroup::from_degrees(free_rank, torsion_orders, degrees)?;
        cl.lift = Some(LiftData { free_cols, torsion_cols });
        Ok(cl)
    }

    /// Grading given directly by variable degrees. The degree map must make
    /// the effective cone pointed (every variable has positive weight under
    /// some functional), otherwise graded pieces would be infinite.
    pub fn from_degrees(free_rank: usize, torsion_orders: Vec<i64>, degrees: Vec<DivisorClass>) -> Result<ClassGroup> {
        if torsion_orders.iter().any(|&o| o < 2) {
            return Err(Error::MalformedClass("torsion orders must be at least 2".into()));
        }
        let mut cl = ClassGroup {
            free_rank,
            torsion_orders,
            degrees: Vec::new(),
            lift: None,
            var_weights: Vec::new(),
            functional: Vec::new(),
        };
        let degrees = degrees.into_iter().map(|c| cl.normalize(c)).collect::<Result<Vec<_>>>()?;
        let free_parts: Vec<Vec<i64>> = degrees.iter().map(|c| c.free.clone()).collect();
        let w = positive_functional(&free_parts, free_rank)?;
        let lcm = w.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        cl.functional = w
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer().to_i128())
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("weight functional"))?;
        cl.var_weights = free_parts
            .iter()
            .map(|f| f.iter().zip(&cl.functional).map(|(&a, &b)| a as i128 * b).sum())
            .collect();
        cl.degrees = degrees;
        Ok(cl)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[i64] {
        &self.torsion_orders
    }

    pub fn num_vars(&self) -> usize {
        self.degrees.len()
    }

    pub fn variable_degrees(&self) -> &[DivisorClass] {
        &self.degrees
    }

    /// Rows: free coordinates, then torsion coordinates (to be read modulo
    /// the matching order). Column ρ is `deg x_ρ`.
    pub fn degree_matrix(&self) -> Vec<Vec<i64>> {
        let mut rows = Vec::new();
        for i in 0..self.free_rank {
            rows.push(self.degrees.iter().map(|c| c.free[i]).collect());
        }
        for i in 0..self.torsion_orders.len() {
            rows.push(self.degrees.iter().map(|c| c.torsion[i]).collect());
        }
        rows
    }

    /// Integer weight of each variable under the positive functional.
    pub fn variable_weights(&self) -> &[i128] {
        &self.var_weights
    }

    /// Weight of a class under the positive functional (scaled to integers).
    pub fn weight(&self, c: &DivisorClass) -> i128 {
        c.free.iter().zip(&self.functional).map(|(&a, &b)| a as i128 * b).sum()
    }

    /// Checks shape and reduces torsion residues.
    pub fn normalize(&self, c: DivisorClass) -> Result<DivisorClass> {
        if c.free.len() != self.free_rank {
            return Err(Error::MalformedClass(format!(
                "free part has length {}, expected {}",
                c.free.len(),
                self.free_rank
            )));
        }
        let torsion = if c.torsion.is_empty() {
            vec![0; self.torsion_orders.len()]
        } else if c.torsion.len() == self.torsion_orders.len() {
            c.torsion.iter().zip(&self.torsion_orders).map(|(&t, &o)| t.rem_euclid(o)).collect()
        } else {
            return Err(Error::MalformedClass(format!(
                "torsion part has length {}, expected {}",
                c.torsion.len(),
                self.torsion_orders.len()
            )));
        };
        Ok(DivisorClass { free: c.free, torsion })
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass { free: vec![0; self.free_rank], torsion: vec![0; self.torsion_orders.len()] }
    }

    pub fn add(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        self.combine(1, a, 1, b)
    }

    pub fn sub(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        self.combine(1, a, -1, b)
    }

    pub fn scale(&self, k: i64, a: &DivisorClass) -> DivisorClass {
        self.combine(k, a, 0, a)
    }

    pub fn neg(&self, a: &DivisorClass) -> DivisorClass {
        self.scale(-1, a)
    }

    /// `s·a + t·b`
    pub fn combine(&self, s: i64, a: &DivisorClass, t: i64, b: &DivisorClass) -> DivisorClass {
        let free = a.free.iter().zip(&b.free).map(|(&x, &y)| s * x + t * y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.torsion_orders)
            .map(|((&x, &y), &o)| (s * x + t * y).rem_euclid(o))
            .collect();
        DivisorClass { free, torsion }
    }

    pub fn degree_of(&self, exponents: &[u32]) -> Result<DivisorClass> {
        if exponents.len() != self.degrees.len() {
            return Err(Error::LengthMismatch { expected: self.degrees.len(), got: exponents.len() });
        }
        Ok(self.degree_of_signed(&exponents.iter().map(|&e| e as i64).collect::<Vec<_>>()))
    }

    /// Degree of an arbitrary torus-invariant divisor `Σ a_ρ D_ρ`.
    pub fn degree_of_signed(&self, a: &[i64]) -> DivisorClass {
        let mut acc = self.zero();
        for (deg, &k) in self.degrees.iter().zip(a) {
            if k != 0 {
                acc = self.combine(1, &acc, k, deg);
            }
        }
        acc
    }

    /// `β₀ = Σ_ρ deg x_ρ`
    pub fn anticanonical(&self) -> DivisorClass {
        self.degree_of_signed(&vec![1; self.degrees.len()])
    }

    /// Some `a ∈ ℤ^r` with `deg(a) = α`. Only available for class groups
    /// computed from a fan.
    pub fn lift(&self, alpha: &DivisorClass) -> Result<Vec<i64>> {
        let alpha = self.normalize(alpha.clone())?;
        let lift = self
            .lift
            .as_ref()
            .ok_or_else(|| Error::NoLiftFound("class group was not computed from a fan".into()))?;
        let mut z: Vec<i128> = alpha.free.iter().map(|&x| x as i128).collect();
        let mut a = lattice::mat_vec(&lift.free_cols, &z)?;
        z = alpha.torsion.iter().map(|&x| x as i128).collect();
        let at = lattice::mat_vec(&lift.torsion_cols, &z)?;
        for (x, y) in a.iter_mut().zip(at) {
            *x += y;
        }
        let a: Vec<i64> = a.into_iter().map(to_i64).collect::<Result<_>>()?;
        debug_assert_eq!(self.degree_of_signed(&a), alpha);
        Ok(a)
    }

    /// Every `a ∈ ℕ^r` with `deg(a) = α`, in lexicographically decreasing
    /// order of exponent vectors.
    pub fn lattice_points(&self, alpha: &DivisorClass) -> Result<Vec<Vec<u32>>> {
        let alpha = self.normalize(alpha.clone())?;
        let mut out = Vec::new();
        self.enumerate(&alpha, &mut |a| {
            out.push(a.to_vec());
            true
        });
        Ok(out)
    }

    pub fn is_effective(&self, alpha: &DivisorClass) -> Result<Effectiveness> {
        let alpha = self.normalize(alpha.clone())?;
        let mut found = None;
        self.enumerate(&alpha, &mut |a| {
            found = Some(a.to_vec());
            false
        });
        Ok(match found {
            Some(witness) => Effectiveness::Effective { witness },
            None => Effectiveness::NotEffective,
        })
    }

    /// Depth-first search over `a_0, a_1, …` with the remaining weight as the
    /// budget. The last coordinate is solved for rather than searched.
    /// `visit` returns false to stop early.
    fn enumerate(&self, alpha: &DivisorClass, visit: &mut dyn FnMut(&[u32]) -> bool) {
        let r = self.degrees.len();
        let budget = self.weight(alpha);
        if budget < 0 || r == 0 {
            if r == 0 && alpha.is_zero() {
                visit(&[]);
            }
            return;
        }
        let mut a = vec![0u32; r];
        let mut partial = self.zero();
        self.descend(0, budget, alpha, &mut a, &mut partial, visit);
    }

    fn descend(
        &self,
        i: usize,
        budget: i128,
        alpha: &DivisorClass,
        a: &mut Vec<u32>,
        partial: &mut DivisorClass,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        let r = self.degrees.len();
        let w = self.var_weights[i];
        let max = (budget / w) as u32;
        if i + 1 == r {
            let need = self.sub(alpha, partial);
            let deg = &self.degrees[i];
            let k = match deg.free.iter().position(|&x| x != 0) {
                Some(j) => {
                    if need.free[j] % deg.free[j] != 0 {
                        return true;
                    }
                    let k = need.free[j] / deg.free[j];
                    if k < 0 || k as u32 > max {
                        return true;
                    }
                    k as u32
                }
                None => {
                    // Torsion-only variable; cannot happen for a pointed
                    // grading, but scan its bounded range anyway.
                    match (0..=max).find(|&k| self.scale(k as i64, deg) == need) {
                        Some(k) => k,
                        None => return true,
                    }
                }
            };
            if self.scale(k as i64, deg) == need {
                a[i] = k;
                let keep_going = visit(a);
                a[i] = 0;
                return keep_going;
            }
            return true;
        }
        for k in (0..=max).rev() {
            a[i] = k;
            let saved = partial.clone();
            *partial = self.combine(1, partial, k as i64, &self.degrees[i]);
            let go = self.descend(i + 1, budget - k as i128 * w, alpha, a, partial, visit);
            *partial = saved;
            if !go {
                a[i] = 0;
                return false;
            }
        }
        a[i] = 0;
        true
    }

    /// All `α` with both `α` and `N − α` effective, sorted and duplicate-free.
    pub fn effective_predecessors(&self, n: &DivisorClass) -> Result<Vec<DivisorClass>> {
        let n = self.normalize(n.clone())?;
        let tops = self.lattice_points(&n)?;
        if tops.is_empty() {
            return Err(Error::NotEffectiveInput);
        }
        // α = deg(a) for some a ≤ c with c a lattice point of N.
        let mut seen_vectors = BTreeSet::new();
        let mut classes = BTreeSet::new();
        for c in tops {
            let mut a = vec![0u32; c.len()];
            loop {
                if seen_vectors.insert(a.clone()) {
                    classes.insert(self.degree_of_signed(&a.iter().map(|&x| x as i64).collect::<Vec<_>>()));
                }
                // Odometer over the box [0, c].
                let mut i = 0;
                while i < a.len() {
                    if a[i] < c[i] {
                        a[i] += 1;
                        break;
                    }
                    a[i] = 0;
                    i += 1;
                }
                if i == a.len() {
                    break;
                }
            }
        }
        Ok(classes.into_iter().collect())
    }

    /// Support-function test with the lift computed from the class.
    pub fn positivity(&self, fan: &Fan, alpha: &DivisorClass) -> Result<Positivity> {
        let a = self.lift(alpha)?;
        positivity_of_divisor(fan, &a)
    }

    pub fn is_nef(&self, fan: &Fan, alpha: &DivisorClass) -> Result<bool> {
        Ok(self.positivity(fan, alpha)?.nef)
    }

    pub fn is_ample(&self, fan: &Fan, alpha: &DivisorClass) -> Result<bool> {
        Ok(self.positivity(fan, alpha)?.ample)
    }

    /// Largest `i ≥ 0` with `iη ≤ β` in the given order.
    pub fn m_beta(&self, beta: &DivisorClass, eta: &DivisorClass, order: ClassOrder<'_>) -> Result<u64> {
        let beta = self.normalize(beta.clone())?;
        let eta = self.normalize(eta.clone())?;
        if eta.is_zero() {
            return Err(Error::ZeroEta);
        }
        if !self.is_effective(&eta)?.is_effective() {
            return Err(Error::ZeroEta);
        }
        let holds = |i: i64| -> Result<bool> {
            let diff = self.combine(1, &beta, -i, &eta);
            match order {
                ClassOrder::Effective => Ok(self.is_effective(&diff)?.is_effective()),
                ClassOrder::Nef(fan) => self.is_nef(fan, &diff),
            }
        };
        if !holds(0)? {
            return Err(Error::NotEffectiveInput);
        }
        // Nef and effective classes have nonnegative weight, so the answer is
        // at most W(β)/W(η); the set of valid i is downward closed.
        let upper = (self.weight(&beta) / self.weight(&eta)).max(0) as i64;
        let (mut lo, mut hi) = (0i64, upper);
        while lo < hi {
            let mid = lo + (hi - lo + 1) / 2;
            if holds(mid)? {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Ok(lo as u64)
    }
}

/// Solves `m_σ(v_ρ) = −a_ρ` on every maximal cone and reads off Cartier,
/// nef and ample verdicts.
pub fn positivity_of_divisor(fan: &Fan, a: &[i64]) -> Result<Positivity> {
    if a.len() != fan.num_rays() {
        return Err(Error::LengthMismatch { expected: fan.num_rays(), got: a.len() });
    }
    let rays: Vec<Vec<BigRational>> =
        fan.rays().iter().map(|v| v.iter().map(|&x| rational::q(x)).collect()).collect();
    let mut cartier = true;
    let mut nef = true;
    let mut ample = true;
    let mut functionals = Vec::with_capacity(fan.max_cones().len());
    for cone in fan.max_cones() {
        let system: Vec<Vec<BigRational>> = cone.iter().map(|&i| rays[i].clone()).collect();
        let rhs: Vec<BigRational> = cone.iter().map(|&i| rational::q(-a[i])).collect();
        let m = solve_square(&system, &rhs).ok_or_else(|| Error::InvalidFan("singular maximal cone".into()))?;
        if m.iter().any(|x| !x.is_integer()) {
            cartier = false;
        }
        for (rho, v) in rays.iter().enumerate() {
            let value: BigRational = m.iter().zip(v).map(|(x, y)| x * y).sum();
            let bound = rational::q(-a[rho]);
            if value < bound {
                nef = false;
                ample = false;
            } else if value == bound && !cone.contains(&rho) {
                ample = false;
            }
        }
        functionals.push(m);
    }
    Ok(Positivity { lift: a.to_vec(), cartier, nef, ample, cone_functionals: functionals })
}

fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("class coordinates"))
}

/// A rational `w` with `w · q ≥ 1` for every row `q`, by Fourier–Motzkin
/// elimination and back-substitution.
fn positive_functional(rows: &[Vec<i64>], n: usize) -> Result<Vec<BigRational>> {
    type Ineq = (Vec<BigRational>, BigRational); // coeffs · w ≥ rhs
    let mut systems: Vec<Vec<Ineq>> = Vec::with_capacity(n + 1);
    let mut current: Vec<Ineq> =
        rows.iter().map(|q| (q.iter().map(|&x| rational::q(x)).collect(), BigRational::one())).collect();
    for k in (0..n).rev() {
        systems.push(current.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in current {
            match ineq.0[k].cmp(&BigRational::zero()) {
                std::cmp::Ordering::Greater => pos.push(ineq),
                std::cmp::Ordering::Less => neg.push(ineq),
                std::cmp::Ordering::Equal => rest.push(ineq),
            }
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                let s = -&nc[k];
                let t = pc[k].clone();
                let coeffs: Vec<BigRational> = pc.iter().zip(nc).map(|(x, y)| &s * x + &t * y).collect();
                let rhs = &s * pr + &t * nr;
                rest.push((coeffs, rhs));
            }
        }
        rest.sort();
        rest.dedup();
        current = rest;
    }
    if current.iter().any(|(_, rhs)| rhs.is_positive()) {
        return Err(Error::EnumerationBudgetExceeded(
            "no positive grading functional: the effective cone is not pointed".into(),
        ));
    }
    // Back-substitute w_0, w_1, … using the system in which w_k was last present.
    let mut w: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let system = &systems[n - 1 - k];
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for (coeffs, rhs) in system {
            let c = &coeffs[k];
            if c.is_zero() {
                continue;
            }
            let known: BigRational = coeffs[..k].iter().zip(&w).map(|(x, y)| x * y).sum();
            let bound = (rhs - known) / c;
            if c.is_positive() {
                if lower.as_ref().is_none_or(|l| &bound > l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| &bound < u) {
                upper = Some(bound);
            }
        }
        let value = match (lower, upper) {
            (Some(l), Some(u)) => {
                let c = l.ceil();
                if c <= u {
                    c
                } else {
                    l
                }
            }
            (Some(l), None) => l.ceil(),
            (None, Some(u)) => u.floor(),
            (None, None) => BigRational::zero(),
        };
        w.push(value);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard;

    fn c(x: i64) -> DivisorClass {
        DivisorClass::free(vec![x])
    }

    #[test]
    fn class_groups_of_standard_fans() {
        let cl = ClassGroup::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(cl.free_rank(), 1);
        assert!(cl.torsion_orders().is_empty());
        assert_eq!(cl.variable_degrees(), &[c(1), c(1), c(1)]);

        let cl = ClassGroup::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        assert_eq!(cl.variable_degrees(), &[c(1), c(2), c(1)]);

        let cl = ClassGroup::from_fan(&standard::hirzebruch(1)).unwrap();
        assert_eq!(cl.free_rank(), 2);
        assert!(cl.torsion_orders().is_empty());
    }

    #[test]
    fn fake_weighted_projective_plane_has_torsion() {
        // P^2 / (Z/3) acting with weights (1,1,1): rays (1,0), (0,1), (−1,−1)
        // in the lattice generated additionally by (1/3, 2/3).
        // In coordinates: rays (2,-1), (-1,2), (-1,-1).
        let fan = Fan::new(vec![vec![2, -1], vec![-1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]], 2)
            .unwrap();
        let cl = ClassGroup::from_fan(&fan).unwrap();
        assert_eq!(cl.free_rank(), 1);
        assert_eq!(cl.torsion_orders(), &[3]);
        // Degree map kills M: deg(Σ ⟨m, v_ρ⟩ D_ρ) = 0.
        for m in [[1i64, 0], [0, 1]] {
            let a: Vec<i64> = fan.rays().iter().map(|v| v[0] * m[0] + v[1] * m[1]).collect();
            assert!(cl.degree_of_signed(&a).is_zero());
        }
    }

    #[test]
    fn degree_of_examples() {
        let p2 = ClassGroup::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(p2.degree_of(&[1, 1, 0]).unwrap(), c(2));
        assert_eq!(p2.degree_of(&[0, 0, 0]).unwrap(), c(0));
        assert_eq!(p2.degree_of(&[1, 1]), Err(Error::LengthMismatch { expected: 3, got: 2 }));
        let w = ClassGroup::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        assert_eq!(w.degree_of(&[0, 1, 0]).unwrap(), c(2));
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(ClassGroup::from_fan(&standard::projective_space(2)).unwrap().anticanonical(), c(3));
        assert_eq!(ClassGroup::from_fan(&standard::projective_space(3)).unwrap().anticanonical(), c(4));
        assert_eq!(ClassGroup::from_fan(&standard::weighted_plane_1w1(2)).unwrap().anticanonical(), c(4));
    }

    #[test]
    fn effectiveness_examples() {
        let p2 = ClassGroup::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(p2.is_effective(&c(2)).unwrap(), Effectiveness::Effective { witness: vec![2, 0, 0] });
        assert_eq!(p2.is_effective(&c(-1)).unwrap(), Effectiveness::NotEffective);
        assert_eq!(p2.is_effective(&c(0)).unwrap(), Effectiveness::Effective { witness: vec![0, 0, 0] });
        let w = ClassGroup::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        assert_eq!(w.is_effective(&c(1)).unwrap(), Effectiveness::Effective { witness: vec![1, 0, 0] });
    }

    #[test]
    fn predecessor_examples() {
        let p2 = ClassGroup::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(p2.effective_predecessors(&c(3)).unwrap(), vec![c(0), c(1), c(2), c(3)]);
        assert_eq!(p2.effective_predecessors(&c(0)).unwrap(), vec![c(0)]);
        assert_eq!(p2.effective_predecessors(&c(-2)), Err(Error::NotEffectiveInput));
        let w = ClassGroup::from_fan(&standard::weighted_plane_1w1(2)).unwrap();
        assert_eq!(w.effective_predecessors(&c(2)).unwrap(), vec![c(0), c(1), c(2)]);
    }

    #[test]
    fn positivity_on_the_plane() {
        let fan = standard::projective_space(2);
        let cl = ClassGroup::from_fan(&fan).unwrap();
        let one = cl.positivity(&fan, &c(1)).unwrap();
        assert!(one.cartier && one.nef && one.ample);
        let zero = cl.positivity(&fan, &c(0)).unwrap();
        assert!(zero.nef && !zero.ample);
        let minus = cl.positivity(&fan, &c(-1)).unwrap();
        assert!(!minus.nef && !minus.ample);
    }

    #[test]
    fn weighted_plane_generator_is_not_cartier() {
        let fan = standard::weighted_plane_1w1(2);
        let cl = ClassGroup::from_fan(&fan).unwrap();
        let p = cl.positivity(&fan, &c(1)).unwrap();
        assert!(!p.cartier);
        assert!(p.ample);
        assert!(cl.positivity(&fan, &c(2)).unwrap().cartier);
    }

    #[test]
    fn m_beta_examples() {
        let p3 = ClassGroup::from_fan(&standard::projective_space(3)).unwrap();
        assert_eq!(p3.m_beta(&c(4), &c(1), ClassOrder::Effective).unwrap(), 4);
        let p2 = ClassGroup::from_fan(&standard::projective_space(2)).unwrap();
        assert_eq!(p2.m_beta(&c(3), &c(2), ClassOrder::Effective).unwrap(), 1);
        assert_eq!(p2.m_beta(&c(0), &c(1), ClassOrder::Effective).unwrap(), 0);
        assert_eq!(p2.m_beta(&c(3), &c(0), ClassOrder::Effective), Err(Error::ZeroEta));
        let fan = standard::projective_space(2);
        assert_eq!(p2.m_beta(&c(5), &c(2), ClassOrder::Nef(&fan)).unwrap(), 2);
    }

    #[test]
    fn functional_is_positive_on_hirzebruch() {
        let cl = ClassGroup::from_fan(&standard::hirzebruch(3)).unwrap();
        assert!(cl.variable_weights().iter().all(|&w| w >= 1));
    }
}
