//! Arithmetic behind the asymptotic Noether–Lefschetz bound: the `δ`
//! threshold, the codimension bound `d·m_β^k/k!`, the Chern-class
//! coefficient of `∏(1 + a_i t)/(1 + bt)`, the socle-degree chain, and a
//! hypothesis audit for `(Σ, β, η, k)`.

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::grading::{ClassGroup, ClassOrder, DivisorClass};
use crate::rational::{self, frac, q};
use crate::ring::{CoxRing, OdaCertificate};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaBound {
    pub r: i64,
    pub k: i64,
    #[serde(serialize_with = "rational::serialize")]
    pub delta_upper: BigRational,
    pub warnings: Vec<String>,
}

/// `1/(4(r − (k+1)))`.
pub fn delta_upper(r: i64, k: i64) -> Result<BigRational> {
    if r <= k + 1 {
        return Err(Error::DegenerateDenominator { r, k });
    }
    Ok(frac(1, 4 * (r - k - 1)))
}

/// [`delta_upper`] plus a warning when `r < 2(k+1)`.
pub fn delta_bound(r: i64, k: i64) -> Result<DeltaBound> {
    let delta_upper = delta_upper(r, k)?;
    let mut warnings = Vec::new();
    if r < 2 * (k + 1) {
        warnings.push(format!("r = {r} is below 2(k+1) = {}", 2 * (k + 1)));
    }
    Ok(DeltaBound { r, k, delta_upper, warnings })
}

/// `d · m^k / k!`.
pub fn codim_bound(d: u64, m_beta: u64, k: u32) -> BigRational {
    let num = BigInt::from(d) * BigInt::from(m_beta).pow(k);
    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
    BigRational::new(num, fact)
}

/// Coefficient of `t^k` in `∏(1 + a_i t) / (1 + b t)`.
pub fn step1_coefficient(a: &[i64], b: i64, k: usize) -> BigRational {
    let mut num = vec![BigInt::zero(); k + 1];
    num[0] = BigInt::one();
    for &ai in a {
        for j in (1..=k).rev() {
            let prev = num[j - 1].clone();
            num[j] += prev * ai;
        }
    }
    // 1/(1 + bt) = Σ (−b)^j t^j
    let mut acc = BigInt::zero();
    let mut p = BigInt::one();
    for j in 0..=k {
        acc += &num[k - j] * &p;
        p *= -b;
    }
    BigRational::from_integer(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step3Input {
    pub k: i64,
    pub deg_v: i64,
    pub m_beta: i64,
    #[serde(serialize_with = "rational::serialize")]
    pub delta: BigRational,
    pub r: i64,
    pub d_param: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step3Report {
    pub input: Step3Input,
    /// `2(k+1)·deg V`.
    pub left_multiplier: i64,
    pub left_bound: DivisorClass,
    /// `2r·m_β·δ`.
    #[serde(serialize_with = "rational::serialize")]
    pub right_multiplier: BigRational,
    /// Present only when the right multiplier is an integer.
    pub right_bound: Option<DivisorClass>,
    pub chain_holds: bool,
    #[serde(serialize_with = "rational::serialize")]
    pub absurdity_threshold: BigRational,
    /// `δ > 1/(2r)`.
    pub absurdity: bool,
    /// `min(2δ·m_β, d)`, or just `2δ·m_β` without `d`.
    #[serde(serialize_with = "rational::serialize")]
    pub deg_v_limit: BigRational,
    pub deg_v_constraint_holds: bool,
}

/// Socle-degree chain `2(k+1)(deg V)η − β₀ ≤ 2r·m_β·δ·η − β₀`.
pub fn step3_socle_bounds(cl: &ClassGroup, eta: &DivisorClass, input: Step3Input) -> Result<Step3Report> {
    if input.r <= 0 {
        return Err(Error::InvalidArgument(format!("r must be positive, got {}", input.r)));
    }
    let beta0 = cl.anticanonical();
    let left_multiplier = 2 * (input.k + 1) * input.deg_v;
    let left_bound = cl.sub(&cl.scale(left_multiplier, eta), &beta0);
    let right_multiplier = q(2 * input.r * input.m_beta) * &input.delta;
    let right_bound = if right_multiplier.is_integer() {
        let t = i64::try_from(right_multiplier.to_integer()).map_err(|_| Error::Overflow("step3 multiplier"))?;
        Some(cl.sub(&cl.scale(t, eta), &beta0))
    } else {
        None
    };
    let chain_holds = q(left_multiplier) <= right_multiplier;
    let absurdity_threshold = frac(1, 2 * input.r);
    let absurdity = input.delta > absurdity_threshold;
    let two_delta_m = q(2 * input.m_beta) * &input.delta;
    let deg_v_limit = match input.d_param {
        Some(d) => two_delta_m.min(q(d)),
        None => two_delta_m,
    };
    let deg_v_constraint_holds = q(input.deg_v) <= deg_v_limit;
    Ok(Step3Report {
        input,
        left_multiplier,
        left_bound,
        right_multiplier,
        right_bound,
        chain_holds,
        absurdity_threshold,
        absurdity,
        deg_v_limit,
        deg_v_constraint_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NLHypothesisReport {
    pub k: i64,
    pub fan_dim: usize,
    pub beta: DivisorClass,
    pub eta: DivisorClass,
    pub beta0: DivisorClass,
    pub beta_ample: bool,
    pub beta_cartier: bool,
    pub eta_ample: bool,
    pub eta_primitive: bool,
    /// `kβ − β₀ = nη`, absent when no integer `n ≥ 0` solves it.
    pub n: Option<i64>,
    pub n_is_zero: bool,
    pub m_beta: Option<u64>,
    /// `(k+1)β − β₀`.
    pub socle_degree: DivisorClass,
    pub oda: Vec<OdaCertificate>,
    pub hypotheses_hold: bool,
    pub warnings: Vec<String>,
}

/// Integer `n` with `target = n·η` in `cl`, if one exists.
pub fn solve_multiple(cl: &ClassGroup, target: &DivisorClass, eta: &DivisorClass) -> Option<i64> {
    let pivot = eta.free.iter().position(|&e| e != 0)?;
    let (t, e) = (target.free[pivot], eta.free[pivot]);
    if t % e != 0 {
        return None;
    }
    let n = t / e;
    (cl.scale(n, eta) == *target).then_some(n)
}

pub fn nl_hypothesis_report(
    fan: &Fan,
    ring: &CoxRing,
    beta: &DivisorClass,
    eta: &DivisorClass,
    k: i64,
    oda_pairs: &[(DivisorClass, DivisorClass)],
) -> Result<NLHypothesisReport> {
    let cl = ring.class_group();
    let beta = cl.normalize(beta.clone())?;
    let eta = cl.normalize(eta.clone())?;
    let mut warnings = Vec::new();
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    if fan.dim() as i64 != 2 * k + 1 {
        warnings.push(format!("fan dimension {} differs from 2k+1 = {}", fan.dim(), 2 * k + 1));
    }
    let beta0 = cl.anticanonical();
    let pb = cl.positivity(fan, &beta)?;
    let pe = cl.positivity(fan, &eta)?;
    let free_gcd = eta.free.iter().fold(0i64, |g, &x| g.gcd(&x));
    let eta_primitive = free_gcd == 1;
    if !cl.torsion_orders().is_empty() {
        warnings.push("primitivity of eta decided on the free part only".into());
    }

    let target = cl.sub(&cl.scale(k, &beta), &beta0);
    let n = solve_multiple(cl, &target, &eta).filter(|&n| n >= 0);
    let n_is_zero = n == Some(0);
    if n_is_zero {
        warnings.push("k*beta - beta0 = 0, accepted with n = 0".into());
    }
    if n.is_none() {
        warnings.push("k*beta - beta0 is not a nonnegative multiple of eta".into());
    }

    let m_beta = if pe.ample && !eta.is_zero() {
        match cl.m_beta(&beta, &eta, ClassOrder::Effective) {
            Ok(m) => Some(m),
            Err(e) => {
                warnings.push(format!("m_beta undefined: {e}"));
                None
            }
        }
    } else {
        warnings.push("m_beta not computed: eta is not ample".into());
        None
    };
    let socle_degree = cl.sub(&cl.scale(k + 1, &beta), &beta0);

    let mut pairs: Vec<(DivisorClass, DivisorClass)> = oda_pairs
        .iter()
        .map(|(a, b)| Ok((cl.normalize(a.clone())?, cl.normalize(b.clone())?)))
        .collect::<Result<_>>()?;
    pairs.sort();
    pairs.dedup();
    let oda = pairs.iter().map(|(a, b)| ring.multiplication_surjective(a, b)).collect::<Result<Vec<_>>>()?;

    let hypotheses_hold = pb.ample
        && pb.cartier
        && pe.ample
        && eta_primitive
        && n.is_some()
        && m_beta.is_some()
        && oda.iter().all(|c| c.surjective);
    Ok(NLHypothesisReport {
        k,
        fan_dim: fan.dim(),
        beta,
        eta,
        beta0,
        beta_ample: pb.ample,
        beta_cartier: pb.cartier,
        eta_ample: pe.ample,
        eta_primitive,
        n,
        n_is_zero,
        m_beta,
        socle_degree,
        oda,
        hypotheses_hold,
        warnings,
    })
}
