//! Jacobian rings, quasi-smoothness certificates, the Cayley trick and
//! primitive Hodge numbers.
//!
//! For a quasi-smooth hypersurface `X_f ⊂ ℙ^d_Σ` of ample degree `β`,
//! `h^{a, d−1−a}_prim(X_f) = dim R(f)_{(d−a)β − β₀}` with `R(f) = S/J(f)`.
//!
//! For an intersection `X = X_{f_1} ∩ … ∩ X_{f_s}` the Cayley trick passes
//! to `F = Σ y_j f_j` on the projectivized bundle `ℙ(E)`, whose Cox ring is
//! `S[y_1, …, y_s]` graded by `Cl ⊕ ℤ` with
//!
//! ```text
//! deg x_ρ = (deg x_ρ, 0),   deg y_j = (−β_j, 1),   deg F = (0, 1),
//! β₀^E = Σ (all variable degrees) = (β₀ − Σβ_j, s).
//! ```
//!
//! Then `h^{p−s, d−p}_prim(X) = dim R(F)_{(d+s−p)·(0,1) − β₀^E}`, and the target
//! degree simplifies to `(Σβ_j − β₀, d − p)`.
//! The ring of `ℙ(E)` is built directly; its fan never is.

use crate::error::{Error, Result};
use crate::grading::{ClassGroup, DivisorClass};
use crate::ideal::{Emptiness, GradedIdeal, PowerWitness};
use crate::poly::GradedPolynomial;
use crate::rational;
use crate::ring::{CoxRing, Monomial};
use crate::toric::ToricVariety;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use std::sync::Arc;

/// Ideal of all nonzero partial derivatives.
pub fn jacobian_ideal(f: &GradedPolynomial) -> Result<GradedIdeal> {
    let ring = f.ring();
    let partials = (0..ring.num_vars()).map(|i| f.partial_derivative(i)).collect();
    GradedIdeal::from_nonzero(ring, partials)
}

/// `J₀(f) = (x_ρ ∂f/∂x_ρ)`, zero generators dropped and duplicates merged.
pub fn toric_jacobian_ideal(f: &GradedPolynomial) -> Result<GradedIdeal> {
    let ring = f.ring();
    let gens = (0..ring.num_vars()).map(|i| f.euler_derivative(i)).collect();
    GradedIdeal::from_nonzero(ring, gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    Verified { powers: Vec<PowerWitness> },
    Refuted { witness: Vec<String> },
    Inconclusive { m_max: u32, unresolved: Vec<String> },
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        matches!(self, Certificate::Verified { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Certificate::Refuted { .. })
    }
}

/// Runs the witness checks and then the emptiness certificate on `ideal`.
fn certify_empty(ideal: &GradedIdeal, m_max: u32, point: Option<&[BigRational]>) -> Result<Certificate> {
    let witness = match point {
        Some(p) if ideal.point_witness(p)? == crate::ideal::PointCheck::ValidWitness => Some(p.to_vec()),
        _ => ideal.search_witness()?,
    };
    if let Some(w) = witness {
        return Ok(Certificate::Refuted { witness: w.iter().map(rational::to_string).collect() });
    }
    Ok(match ideal.emptiness_certificate(m_max)? {
        Emptiness::Verified { powers } => Certificate::Verified { powers },
        Emptiness::Inconclusive { m_max, unresolved } => Certificate::Inconclusive { m_max, unresolved },
    })
}

/// `(f_1, …, f_s) + (s × s minors of ∂f_i/∂x_j)`, whose zero locus in `U(Σ)`
/// is the singular locus of the intersection.
pub fn singular_locus_ideal(polys: &[GradedPolynomial]) -> Result<GradedIdeal> {
    let ring = polys.first().ok_or(Error::NoPolynomials)?.ring().clone();
    let s = polys.len();
    let n = ring.num_vars();
    let jac: Vec<Vec<GradedPolynomial>> =
        polys.iter().map(|f| (0..n).map(|j| f.partial_derivative(j)).collect()).collect();
    let mut gens: Vec<GradedPolynomial> = polys.to_vec();
    for cols in combinations(n, s) {
        let sub: Vec<Vec<&GradedPolynomial>> = jac.iter().map(|row| cols.iter().map(|&c| &row[c]).collect()).collect();
        gens.push(determinant(&sub)?);
    }
    GradedIdeal::from_nonzero(&ring, gens)
}

pub fn quasi_smooth_certificate(
    polys: &[GradedPolynomial],
    m_max: u32,
    point: Option<&[BigRational]>,
) -> Result<Certificate> {
    let ring = polys.first().ok_or(Error::NoPolynomials)?.ring();
    if polys.len() > ring.dim() {
        return Err(Error::TooManyPolynomials { got: polys.len(), dim: ring.dim() });
    }
    certify_empty(&singular_locus_ideal(polys)?, m_max, point)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NondegeneracyReport {
    pub certificate: Certificate,
    /// Nondegenerate hypersurfaces are quasi-smooth.
    pub implies_quasi_smooth: bool,
    pub degree_ample: Option<bool>,
    pub warnings: Vec<String>,
}

/// Emptiness of `V(f, x_ρ ∂f/∂x_ρ) ∩ U(Σ)`.
pub fn nondegeneracy_certificate(
    variety: &ToricVariety,
    f: &GradedPolynomial,
    m_max: u32,
    point: Option<&[BigRational]>,
) -> Result<NondegeneracyReport> {
    let mut warnings = Vec::new();
    let degree_ample = match variety.positivity(f.degree()) {
        Ok(p) => Some(p.ample),
        Err(e) => {
            warnings.push(format!("ampleness of deg f not decided: {e}"));
            None
        }
    };
    if degree_ample == Some(false) {
        warnings.push("deg f is not ample".into());
    }
    let ideal = toric_jacobian_ideal(f)?.extended(vec![f.clone()])?;
    let certificate = certify_empty(&ideal, m_max, point)?;
    Ok(NondegeneracyReport { implies_quasi_smooth: certificate.is_verified(), certificate, degree_ample, warnings })
}

/// The Cayley ring of `(f_1, …, f_s)` and `F = Σ y_j f_j`.
#[derive(Debug, Clone)]
pub struct CayleyData {
    pub ring: Arc<CoxRing>,
    pub base_vars: usize,
    pub codim: usize,
    pub degrees: Vec<DivisorClass>,
    pub f: GradedPolynomial,
    pub anticanonical: DivisorClass,
}

impl CayleyData {
    pub fn irrelevant_generators(&self) -> &[Monomial] {
        self.ring.irrelevant_generators()
    }
}

pub fn cayley(variety: &ToricVariety, polys: &[GradedPolynomial]) -> Result<CayleyData> {
    let s = polys.len();
    if s == 0 {
        return Err(Error::NoPolynomials);
    }
    let base = variety.ring();
    let cl = base.class_group();
    for f in polys {
        base.check_same(f.ring())?;
        if !cl.is_effective(f.degree())?.is_effective() {
            return Err(Error::NotEffectiveInput);
        }
    }
    let n = base.num_vars();
    let extend = |c: &DivisorClass, last: i64| {
        let mut free = c.free.clone();
        free.push(last);
        DivisorClass::new(free, c.torsion.clone())
    };
    let mut degrees: Vec<DivisorClass> = cl.variable_degrees().iter().map(|c| extend(c, 0)).collect();
    for f in polys {
        degrees.push(extend(&cl.neg(f.degree()), 1));
    }
    let ext_cl = ClassGroup::from_degrees(cl.free_rank() + 1, cl.torsion_orders().to_vec(), degrees)?;
    let mut names: Vec<String> = base.var_names().to_vec();
    names.extend((1..=s).map(|j| format!("y{j}")));
    let mut irrelevant = Vec::new();
    for g in base.irrelevant_generators() {
        for j in 0..s {
            let mut e = g.0.clone();
            e.extend(std::iter::repeat_n(0, s));
            e[n + j] = 1;
            irrelevant.push(Monomial(e));
        }
    }
    let ring = Arc::new(CoxRing::new(variety.dim() + s - 1, ext_cl, names, irrelevant));

    let mut terms = Vec::new();
    for (j, f) in polys.iter().enumerate() {
        for (m, c) in f.terms() {
            let mut e = m.0.clone();
            e.extend(std::iter::repeat_n(0, s));
            e[n + j] = 1;
            terms.push((Monomial(e), c.clone()));
        }
    }
    let deg_f = DivisorClass::new(
        {
            let mut v = vec![0; cl.free_rank()];
            v.push(1);
            v
        },
        vec![0; cl.torsion_orders().len()],
    );
    let f = GradedPolynomial::with_degree(&ring, deg_f, terms)?;

    let beta_sum = polys.iter().fold(cl.zero(), |acc, f| cl.add(&acc, f.degree()));
    let anticanonical = ring.class_group().anticanonical();
    debug_assert_eq!(anticanonical, extend(&cl.sub(&cl.anticanonical(), &beta_sum), s as i64));
    Ok(CayleyData {
        ring,
        base_vars: n,
        codim: s,
        degrees: polys.iter().map(|f| f.degree().clone()).collect(),
        f,
        anticanonical,
    })
}

/// How much certification a Hodge computation attaches.
#[derive(Debug, Clone, Copy)]
pub struct HodgeOptions {
    pub m_max: u32,
    /// Quasi-smoothness of the input polynomials on `ℙ_Σ`.
    pub certify: bool,
    /// Quasi-smoothness of `F` on the Cayley side (intersections only).
    pub certify_cayley: bool,
}

impl Default for HodgeOptions {
    fn default() -> Self {
        HodgeOptions { m_max: crate::ideal::DEFAULT_M_MAX, certify: true, certify_cayley: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: DivisorClass,
    pub cartier: bool,
    pub ample: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeCertificates {
    pub quasi_smooth: Option<Certificate>,
    pub cayley_quasi_smooth: Option<Certificate>,
    pub degrees: Vec<DegreeCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeReport {
    pub ambient_dim: usize,
    pub codim: usize,
    pub requested_index: i64,
    pub index_pair: [i64; 2],
    pub target_degree: DivisorClass,
    pub dimension: usize,
    pub certificates: HodgeCertificates,
    /// False when quasi-smoothness or ampleness was not certified: the
    /// dimension is exact but its reading as a Hodge number is unverified.
    pub geometric_interpretation_verified: bool,
    pub warnings: Vec<String>,
}

fn degree_checks(variety: &ToricVariety, polys: &[GradedPolynomial], warnings: &mut Vec<String>) -> Vec<DegreeCheck> {
    let mut out = Vec::new();
    for f in polys {
        match variety.positivity(f.degree()) {
            Ok(p) => {
                if !p.ample {
                    warnings.push(format!("degree {} is not ample", f.degree()));
                }
                out.push(DegreeCheck { degree: f.degree().clone(), cartier: p.cartier, ample: p.ample })
            }
            Err(e) => warnings.push(format!("positivity of {} not decided: {e}", f.degree())),
        }
    }
    out
}

fn interpretation(cert: &Option<Certificate>, degrees: &[DegreeCheck], n: usize, warnings: &mut Vec<String>) -> bool {
    match cert {
        Some(Certificate::Verified { .. }) => {}
        Some(Certificate::Refuted { .. }) => warnings.push("input is not quasi-smooth".into()),
        Some(Certificate::Inconclusive { .. }) => warnings.push("quasi-smoothness inconclusive".into()),
        None => warnings.push("quasi-smoothness not checked".into()),
    }
    cert.as_ref().is_some_and(Certificate::is_verified) && degrees.len() == n && degrees.iter().all(|d| d.ample)
}

/// `h^{a, d−1−a}_prim(X_f) = dim R(f)_{(d−a)β − β₀}`.
pub fn hypersurface_prim_hodge(
    variety: &ToricVariety,
    f: &GradedPolynomial,
    a: i64,
    opts: HodgeOptions,
) -> Result<HodgeReport> {
    variety.ring().check_same(f.ring())?;
    let d = variety.dim() as i64;
    if a < 0 || a > d - 1 {
        return Err(Error::HodgeIndexOutOfRange { index: a, max: d - 1 });
    }
    let cl = variety.class_group();
    let target = cl.sub(&cl.scale(d - a, f.degree()), &cl.anticanonical());
    let dimension = jacobian_ideal(f)?.quotient_dimension(&target)?;

    let mut warnings = Vec::new();
    let polys = std::slice::from_ref(f);
    let degrees = degree_checks(variety, polys, &mut warnings);
    let quasi_smooth = if opts.certify { Some(quasi_smooth_certificate(polys, opts.m_max, None)?) } else { None };
    let verified = interpretation(&quasi_smooth, &degrees, 1, &mut warnings);
    Ok(HodgeReport {
        ambient_dim: d as usize,
        codim: 1,
        requested_index: a,
        index_pair: [a, d - 1 - a],
        target_degree: target,
        dimension,
        certificates: HodgeCertificates { quasi_smooth, cayley_quasi_smooth: None, degrees },
        geometric_interpretation_verified: verified,
        warnings,
    })
}

/// `h^{p−s, d−p}_prim(X) = dim R(F)_{(d+s−p)·(0,1) − β₀^E}`.
pub fn intersection_prim_hodge(
    variety: &ToricVariety,
    polys: &[GradedPolynomial],
    p: i64,
    opts: HodgeOptions,
) -> Result<HodgeReport> {
    let s = polys.len() as i64;
    let d = variety.dim() as i64;
    if s == 0 {
        return Err(Error::NoPolynomials);
    }
    if s > d {
        return Err(Error::TooManyPolynomials { got: s as usize, dim: d as usize });
    }
    if p < s || p > d {
        return Err(Error::HodgeIndexOutOfRange { index: p, max: d });
    }
    if 2 * p == d + s - 1 || 2 * p == d + s - 3 {
        return Err(Error::ExcludedIndex {
            index: p,
            reason: format!("p must avoid (d+s-1)/2 and (d+s-3)/2 for d = {d}, s = {s}"),
        });
    }
    let data = cayley(variety, polys)?;
    let ext = data.ring.class_group();
    let target = ext.sub(&ext.scale(d + s - p, data.f.degree()), &data.anticanonical);
    let jac = jacobian_ideal(&data.f)?;
    let dimension = jac.quotient_dimension(&target)?;

    let mut warnings = Vec::new();
    let degrees = degree_checks(variety, polys, &mut warnings);
    let quasi_smooth = if opts.certify { Some(quasi_smooth_certificate(polys, opts.m_max, None)?) } else { None };
    let cayley_quasi_smooth = if opts.certify_cayley { Some(certify_empty(&jac, opts.m_max, None)?) } else { None };
    let verified = interpretation(&quasi_smooth, &degrees, polys.len(), &mut warnings);
    Ok(HodgeReport {
        ambient_dim: d as usize,
        codim: s as usize,
        requested_index: p,
        index_pair: [p - s, d - p],
        target_degree: target,
        dimension,
        certificates: HodgeCertificates { quasi_smooth, cayley_quasi_smooth, degrees },
        geometric_interpretation_verified: verified,
        warnings,
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Laplace expansion along the first row.
fn determinant(m: &[Vec<&GradedPolynomial>]) -> Result<GradedPolynomial> {
    let k = m.len();
    if k == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc: Option<GradedPolynomial> = None;
    for j in 0..k {
        let minor: Vec<Vec<&GradedPolynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| *p).collect()).collect();
        let mut term = m[0][j].multiply(&determinant(&minor)?)?;
        if j % 2 == 1 {
            term = term.scale(&-BigRational::one());
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.expect("nonempty matrix"))
}
