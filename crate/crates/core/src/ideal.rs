//! Homogeneous ideals of the Cox ring, one graded piece at a time.
//!
//! `I^α` is the span of `g·m` over generators `g` and monomials `m` of degree
//! `α − deg g`. Nothing here needs a Gröbner basis: every question asked of
//! an ideal (dimensions, membership, the socle functional, the Macaulay
//! pairing) lives in finitely many degrees.

use crate::error::{Error, Result};
use crate::grading::DivisorClass;
use crate::linalg::Echelon;
use crate::memo::Memo;
use crate::modp::{self, ModEchelon};
use crate::poly::{eval_monomial, GradedPolynomial};
use crate::rational;
use crate::ring::{CoxRing, GradedPieceBasis, Monomial};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;

/// Default bound on powers of irrelevant generators tried by emptiness
/// certificates.
pub const DEFAULT_M_MAX: u32 = 20;

/// Witness search gives up beyond this many candidate points.
const WITNESS_SEARCH_LIMIT: u64 = 100_000;

/// `I^α` inside `S^α`.
#[derive(Debug)]
pub struct IdealPiece {
    pub basis: Arc<GradedPieceBasis>,
    pub echelon: Echelon,
}

impl IdealPiece {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.dim() - self.echelon.rank()
    }
}

#[derive(Debug, Clone)]
pub struct GradedIdeal {
    ring: Arc<CoxRing>,
    generators: Vec<GradedPolynomial>,
    pieces: Arc<Memo<DivisorClass, IdealPiece>>,
    modular: Arc<Memo<DivisorClass, Option<ModEchelon>>>,
}

/// How a power of an irrelevant generator was shown to lie in `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipProof {
    /// Exact reduction against `I^α` over `ℚ`.
    Exact,
    /// `I^α = S^α`, shown by a full rank mod `p` (rank over `ℚ` can only be larger).
    FullPieceModP,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerWitness {
    pub generator: String,
    pub power: u32,
    pub proof: MembershipProof,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Emptiness {
    /// Every irrelevant generator has a power in `I`, so `B ⊆ √I`.
    Verified { powers: Vec<PowerWitness> },
    /// Some generator had no power `≤ m_max` in `I`. Proves nothing.
    Inconclusive { m_max: u32, unresolved: Vec<String> },
}

impl Emptiness {
    pub fn is_verified(&self) -> bool {
        matches!(self, Emptiness::Verified { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PointCheck {
    ValidWitness,
    NotAWitness { reason: String },
}

/// The functional `Λ` on `S^N` vanishing on `I^N`, as coordinates on the
/// monomial basis of `S^N`, first nonzero coordinate equal to 1.
#[derive(Debug, Clone)]
pub struct SocleFunctional {
    pub basis: Arc<GradedPieceBasis>,
    pub coefficients: Vec<BigRational>,
}

impl SocleFunctional {
    pub fn degree(&self) -> &DivisorClass {
        &self.basis.degree
    }

    pub fn apply_monomial(&self, m: &Monomial) -> BigRational {
        self.basis.index_of(m).map_or_else(BigRational::zero, |i| self.coefficients[i].clone())
    }

    pub fn apply(&self, f: &GradedPolynomial) -> BigRational {
        f.terms().iter().map(|(m, c)| c * self.apply_monomial(m)).sum()
    }

    /// Nonzero coordinates as `(monomial text, value)` pairs.
    pub fn support(&self, ring: &CoxRing) -> Vec<(String, String)> {
        self.basis
            .monomials
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (ring.format_monomial(m), rational::to_string(c)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub alpha: DivisorClass,
    pub complement: DivisorClass,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub quotient_dim_alpha: usize,
    pub quotient_dim_complement: usize,
    pub nondegenerate: bool,
}

/// Per-degree apolarity check: `I^α` equals the left kernel of the pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApolarityCheck {
    pub alpha: DivisorClass,
    pub ideal_dim: usize,
    pub kernel_dim: usize,
    pub ideal_in_kernel: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum FailedCondition {
    EmptinessRefuted { witness: Vec<String> },
    SocleNotEffective,
    SocleDimension { dim: usize },
    Pairing { alpha: DivisorClass, rank: usize },
    Apolarity { alpha: DivisorClass, ideal_dim: usize, kernel_dim: usize, ideal_in_kernel: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GorensteinVerdict {
    CoxGorenstein,
    ConditionsFailed { failures: Vec<FailedCondition> },
    EmptinessInconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub socle_degree: DivisorClass,
    pub emptiness: Emptiness,
    pub witness: Option<Vec<String>>,
    pub socle_dim: usize,
    pub socle_functional: Option<Vec<(String, String)>>,
    pub degrees: Vec<DegreeCheck>,
    pub verdict: GorensteinVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub pairing: PairingReport,
    pub apolarity: ApolarityCheck,
}

impl GradedIdeal {
    pub fn new(ring: &Arc<CoxRing>, generators: Vec<GradedPolynomial>) -> Result<GradedIdeal> {
        for (i, g) in generators.iter().enumerate() {
            ring.check_same(g.ring())?;
            if g.is_zero() {
                return Err(Error::ZeroGenerator(i));
            }
        }
        Ok(GradedIdeal { ring: ring.clone(), generators, pieces: Arc::new(Memo::new()), modular: Arc::new(Memo::new()) })
    }

    /// Drops zero polynomials and exact duplicates, keeping first occurrences.
    pub fn from_nonzero(ring: &Arc<CoxRing>, polys: Vec<GradedPolynomial>) -> Result<GradedIdeal> {
        let mut gens: Vec<GradedPolynomial> = Vec::new();
        for p in polys {
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
        Self::new(ring, gens)
    }

    pub fn parse(ring: &Arc<CoxRing>, texts: &[impl AsRef<str>]) -> Result<GradedIdeal> {
        let gens = texts.iter().map(|t| GradedPolynomial::parse(ring, t.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<CoxRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[GradedPolynomial] {
        &self.generators
    }

    /// Ideal generated by these generators and some more.
    pub fn extended(&self, more: Vec<GradedPolynomial>) -> Result<GradedIdeal> {
        let mut all = self.generators.clone();
        all.extend(more);
        Self::from_nonzero(&self.ring, all)
    }

    pub fn piece(&self, alpha: &DivisorClass) -> Result<Arc<IdealPiece>> {
        let cl = self.ring.class_group();
        let alpha = cl.normalize(alpha.clone())?;
        self.pieces.try_get_or_insert_with(&alpha, || {
            let basis = self.ring.monomial_basis(&alpha)?;
            let mut echelon = Echelon::new(basis.dim());
            if basis.dim() > 0 {
                for g in &self.generators {
                    let shift = cl.sub(&alpha, g.degree());
                    let multipliers = self.ring.monomial_basis(&shift)?;
                    for m in &multipliers.monomials {
                        if echelon.rank() == basis.dim() {
                            break;
                        }
                        echelon.insert_rational(g.mul_monomial(m).coordinates(&basis));
                    }
                }
            }
            Ok(IdealPiece { basis, echelon })
        })
    }

    /// `I^α` mod `p`; `None` if `p` divides some coefficient denominator.
    pub fn modular_piece(&self, alpha: &DivisorClass) -> Result<Arc<Option<ModEchelon>>> {
        let cl = self.ring.class_group();
        let alpha = cl.normalize(alpha.clone())?;
        self.modular.try_get_or_insert_with(&alpha, || {
            let basis = self.ring.monomial_basis(&alpha)?;
            let mut echelon = ModEchelon::new(basis.dim());
            for g in &self.generators {
                let Some(coeffs) = g.terms().iter().map(|(m, c)| modp::reduce(c).map(|v| (m, v))).collect::<Option<Vec<_>>>()
                else {
                    return Ok(None);
                };
                let multipliers = self.ring.monomial_basis(&cl.sub(&alpha, g.degree()))?;
                for m in &multipliers.monomials {
                    if echelon.is_full() {
                        break;
                    }
                    let row: Vec<(usize, u64)> = coeffs
                        .iter()
                        .map(|(t, v)| (basis.index_of(&t.mul(m)).expect("product lies in the piece"), *v))
                        .collect();
                    echelon.insert(&row);
                }
            }
            Ok(Some(echelon))
        })
    }

    pub fn piece_dimension(&self, alpha: &DivisorClass) -> Result<usize> {
        Ok(self.piece(alpha)?.dim())
    }

    pub fn quotient_dimension(&self, alpha: &DivisorClass) -> Result<usize> {
        Ok(self.piece(alpha)?.quotient_dim())
    }

    pub fn contains(&self, f: &GradedPolynomial) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let piece = self.piece(f.degree())?;
        Ok(piece.echelon.contains_rational(f.coordinates(&piece.basis)))
    }

    fn check_proper(&self) -> Result<()> {
        if self.generators.iter().any(|g| g.degree().is_zero()) {
            return Err(Error::UnitGenerator);
        }
        Ok(())
    }

    /// Tries `(x^σ̂)^m ∈ I` for `m ≤ m_max` and every irrelevant generator.
    pub fn emptiness_certificate(&self, m_max: u32) -> Result<Emptiness> {
        if m_max == 0 {
            return Err(Error::InvalidArgument("m_max must be at least 1".into()));
        }
        self.check_proper()?;
        let mut powers = Vec::new();
        let mut unresolved = Vec::new();
        for gen in self.ring.irrelevant_generators() {
            let mut found = None;
            for m in 1..=m_max {
                let power = gen.pow(m);
                let alpha = self.ring.degree_of(&power)?;
                if let Some(modular) = self.modular_piece(&alpha)?.as_ref() {
                    if modular.is_full() {
                        found = Some((m, MembershipProof::FullPieceModP));
                        break;
                    }
                    let basis = self.ring.monomial_basis(&alpha)?;
                    let idx = basis.index_of(&power).expect("power lies in its own piece");
                    // Not in the span mod p: skip the exact check. This can
                    // only cost completeness, never soundness.
                    if !modular.contains(&[(idx, 1)]) {
                        continue;
                    }
                }
                let f = GradedPolynomial::monomial(&self.ring, power, BigRational::one())?;
                if self.contains(&f)? {
                    found = Some((m, MembershipProof::Exact));
                    break;
                }
            }
            let name = self.ring.format_monomial(gen);
            match found {
                Some((power, proof)) => powers.push(PowerWitness { generator: name, power, proof }),
                None => unresolved.push(name),
            }
        }
        Ok(if unresolved.is_empty() {
            Emptiness::Verified { powers }
        } else {
            Emptiness::Inconclusive { m_max, unresolved }
        })
    }

    /// A point of `V(I) ∩ U(Σ)` disproves emptiness.
    pub fn point_witness(&self, point: &[BigRational]) -> Result<PointCheck> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::LengthMismatch { expected: self.ring.num_vars(), got: point.len() });
        }
        for (i, g) in self.generators.iter().enumerate() {
            if !g.evaluate(point)?.is_zero() {
                return Ok(PointCheck::NotAWitness { reason: format!("generator {i} is nonzero at the point") });
            }
        }
        let in_u = self.ring.irrelevant_generators().iter().any(|m| !eval_monomial(m, point).is_zero());
        if !in_u {
            return Ok(PointCheck::NotAWitness { reason: "point lies in Z(Σ)".into() });
        }
        Ok(PointCheck::ValidWitness)
    }

    /// Deterministic search over small integer points, coordinates from
    /// `{0, 1, −1}` (or `{0, 1}` when that would be too many points).
    pub fn search_witness(&self) -> Result<Option<Vec<BigRational>>> {
        let r = self.ring.num_vars() as u32;
        let values: Vec<i64> = if 3u64.checked_pow(r).is_some_and(|n| n <= WITNESS_SEARCH_LIMIT) {
            vec![0, 1, -1]
        } else if 2u64.checked_pow(r).is_some_and(|n| n <= WITNESS_SEARCH_LIMIT) {
            vec![0, 1]
        } else {
            return Ok(None);
        };
        let r = r as usize;
        let mut idx = vec![0usize; r];
        loop {
            // Odometer, last coordinate fastest.
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < values.len() {
                    break;
                }
                idx[i] = 0;
            }
            let point: Vec<BigRational> = idx.iter().map(|&k| rational::q(values[k])).collect();
            if self.point_witness(&point)? == PointCheck::ValidWitness {
                return Ok(Some(point));
            }
        }
    }

    pub fn socle_functional(&self, n: &DivisorClass) -> Result<SocleFunctional> {
        let piece = self.piece(n)?;
        let q = piece.quotient_dim();
        if q != 1 {
            return Err(Error::SocleDimensionNotOne(q));
        }
        let mut v = piece.echelon.nullspace().pop().expect("one-dimensional annihilator");
        let first = v.iter().find(|x| !x.is_zero()).expect("nonzero functional").clone();
        for x in v.iter_mut() {
            *x /= &first;
        }
        Ok(SocleFunctional { basis: piece.basis.clone(), coefficients: v })
    }

    fn pairing_matrix(&self, lambda: &SocleFunctional, alpha: &DivisorClass) -> Result<PairingData> {
        let cl = self.ring.class_group();
        let complement = cl.sub(lambda.degree(), alpha);
        let left = self.ring.monomial_basis(alpha)?;
        let right = self.ring.monomial_basis(&complement)?;
        let matrix: Vec<Vec<BigRational>> = left
            .monomials
            .iter()
            .map(|m1| right.monomials.iter().map(|m2| lambda.apply_monomial(&m1.mul(m2))).collect())
            .collect();
        Ok(PairingData { complement, left, right, matrix })
    }

    pub fn pairing_report(&self, lambda: &SocleFunctional, alpha: &DivisorClass) -> Result<PairingReport> {
        let alpha = self.ring.class_group().normalize(alpha.clone())?;
        let data = self.pairing_matrix(lambda, &alpha)?;
        Ok(self.pairing_from(&alpha, &data)?.0)
    }

    fn pairing_from(&self, alpha: &DivisorClass, data: &PairingData) -> Result<(PairingReport, usize)> {
        let mut ech = Echelon::new(data.right.dim());
        for row in &data.matrix {
            ech.insert_rational(row.iter().cloned().enumerate());
        }
        let rank = ech.rank();
        let qa = self.quotient_dimension(alpha)?;
        let qc = self.quotient_dimension(&data.complement)?;
        let report = PairingReport {
            alpha: alpha.clone(),
            complement: data.complement.clone(),
            rows: data.left.dim(),
            cols: data.right.dim(),
            rank,
            quotient_dim_alpha: qa,
            quotient_dim_complement: qc,
            nondegenerate: rank == qa && rank == qc,
        };
        Ok((report, rank))
    }

    fn apolarity(&self, alpha: &DivisorClass, data: &PairingData, rank: usize) -> Result<ApolarityCheck> {
        let piece = self.piece(alpha)?;
        let kernel_dim = data.left.dim() - rank;
        // Each stored row v of I^α must satisfy vᵀM = 0.
        let ideal_in_kernel = piece.echelon.rows().all(|row| {
            (0..data.right.dim()).all(|j| {
                let s: BigRational = row
                    .iter()
                    .map(|(i, x)| BigRational::from_integer(x.clone()) * &data.matrix[*i][j])
                    .sum();
                s.is_zero()
            })
        });
        Ok(ApolarityCheck {
            alpha: alpha.clone(),
            ideal_dim: piece.dim(),
            kernel_dim,
            ideal_in_kernel,
            holds: ideal_in_kernel && kernel_dim == piece.dim(),
        })
    }

    /// Full Cox–Gorenstein check in socle degree `n`: empty zero locus, a
    /// one-dimensional socle, and for every `α` with `α`, `n − α` effective a
    /// nondegenerate pairing whose left kernel is exactly `I^α`.
    pub fn verify_cox_gorenstein(&self, n: &DivisorClass, m_max: u32) -> Result<GorensteinReport> {
        let cl = self.ring.class_group();
        let n = cl.normalize(n.clone())?;
        let emptiness = self.emptiness_certificate(m_max)?;
        let mut failures = Vec::new();
        let mut witness = None;
        if !emptiness.is_verified() {
            if let Some(p) = self.search_witness()? {
                let p: Vec<String> = p.iter().map(rational::to_string).collect();
                failures.push(FailedCondition::EmptinessRefuted { witness: p.clone() });
                witness = Some(p);
            }
        }
        let socle_dim = self.quotient_dimension(&n)?;
        let mut degrees = Vec::new();
        let mut functional = None;
        if socle_dim != 1 {
            failures.push(FailedCondition::SocleDimension { dim: socle_dim });
        } else {
            match cl.effective_predecessors(&n) {
                Err(Error::NotEffectiveInput) => failures.push(FailedCondition::SocleNotEffective),
                Err(e) => return Err(e),
                Ok(alphas) => {
                    let lambda = self.socle_functional(&n)?;
                    functional = Some(lambda.support(&self.ring));
                    let checks: Vec<Result<DegreeCheck>> = alphas
                        .par_iter()
                        .map(|alpha| {
                            let data = self.pairing_matrix(&lambda, alpha)?;
                            let (pairing, rank) = self.pairing_from(alpha, &data)?;
                            let apolarity = self.apolarity(alpha, &data, rank)?;
                            Ok(DegreeCheck { pairing, apolarity })
                        })
                        .collect();
                    for check in checks {
                        let check = check?;
                        if !check.pairing.nondegenerate {
                            failures.push(FailedCondition::Pairing {
                                alpha: check.pairing.alpha.clone(),
                                rank: check.pairing.rank,
                            });
                        }
                        if !check.apolarity.holds {
                            failures.push(FailedCondition::Apolarity {
                                alpha: check.apolarity.alpha.clone(),
                                ideal_dim: check.apolarity.ideal_dim,
                                kernel_dim: check.apolarity.kernel_dim,
                                ideal_in_kernel: check.apolarity.ideal_in_kernel,
                            });
                        }
                        degrees.push(check);
                    }
                }
            }
        }
        let verdict = if !failures.is_empty() {
            GorensteinVerdict::ConditionsFailed { failures }
        } else if emptiness.is_verified() {
            GorensteinVerdict::CoxGorenstein
        } else {
            GorensteinVerdict::EmptinessInconclusive
        };
        Ok(GorensteinReport {
            socle_degree: n,
            emptiness,
            witness,
            socle_dim,
            socle_functional: functional,
            degrees,
            verdict,
        })
    }
}

struct PairingData {
    complement: DivisorClass,
    left: Arc<GradedPieceBasis>,
    right: Arc<GradedPieceBasis>,
    matrix: Vec<Vec<BigRational>>,
}
