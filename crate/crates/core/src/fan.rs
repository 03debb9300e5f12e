//! Complete simplicial fans and their combinatorial invariants.

use crate::error::{Error, Result};
use crate::lattice::gcd_slice;
use crate::linalg::rank_of;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// Unvalidated fan as it appears in a fan file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

/// A validated complete simplicial fan. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>, dim: usize) -> Result<Fan> {
        validate_fan(rays, cones, dim)
    }

    pub fn from_raw(raw: RawFan) -> Result<Fan> {
        validate_fan(raw.rays, raw.max_cones, raw.dim)
    }

    pub fn to_raw(&self) -> RawFan {
        RawFan { dim: self.dim, rays: self.rays.clone(), max_cones: self.max_cones.clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Every cone of the fan, the zero cone included, as sorted index sets.
    pub fn all_cones(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for cone in &self.max_cones {
            for mask in 0u64..(1u64 << cone.len()) {
                let face: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                out.insert(face);
            }
        }
        out
    }

    /// Coefficients of `P(t) = Σ_σ (t−1)^{d−dim σ}`; entry `k` is `b_{2k}`.
    pub fn poincare_polynomial(&self) -> Vec<u64> {
        poincare_polynomial(self)
    }
}

pub fn validate_fan(raw_rays: Vec<Vec<i64>>, raw_cones: Vec<Vec<usize>>, d: usize) -> Result<Fan> {
    if d == 0 {
        return Err(Error::InvalidFan("dimension must be positive".into()));
    }
    for (i, ray) in raw_rays.iter().enumerate() {
        if ray.len() != d {
            return Err(Error::RayDimension { index: i, len: ray.len(), dim: d });
        }
        let g = gcd_slice(ray);
        if g != 1 {
            return Err(Error::NonPrimitiveRay { index: i, gcd: g });
        }
    }
    let r = raw_rays.len();
    if r < d + 1 {
        return Err(Error::InvalidFan(format!("{r} rays cannot span a complete fan in dimension {d}")));
    }

    let mut cones = Vec::with_capacity(raw_cones.len());
    let mut seen = HashSet::new();
    for (ci, cone) in raw_cones.iter().enumerate() {
        if let Some(&bad) = cone.iter().find(|&&i| i >= r) {
            return Err(Error::IndexOutOfRange { index: bad, limit: r });
        }
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != d {
            return Err(Error::NonSimplicialCone {
                cone: ci,
                reason: format!("{} distinct rays, expected {d}", sorted.len()),
            });
        }
        let m: Vec<Vec<BigRational>> = sorted
            .iter()
            .map(|&i| raw_rays[i].iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        if rank_of(&m) != d {
            return Err(Error::NonSimplicialCone { cone: ci, reason: "rays are linearly dependent".into() });
        }
        if !seen.insert(sorted.clone()) {
            return Err(Error::InvalidFan(format!("maximal cone {ci} is listed twice")));
        }
        cones.push(sorted);
    }
    let used: HashSet<usize> = cones.iter().flatten().copied().collect();
    if let Some(unused) = (0..r).find(|i| !used.contains(i)) {
        return Err(Error::InvalidFan(format!("ray {unused} lies in no maximal cone")));
    }

    // Facet pairing: every (d−1)-face lies in exactly two maximal cones.
    let mut facets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (ci, cone) in cones.iter().enumerate() {
        for skip in 0..d {
            let facet: Vec<usize> = cone.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &x)| x).collect();
            facets.entry(facet).or_default().push(ci);
        }
    }
    let mut bad: Vec<(&Vec<usize>, usize)> =
        facets.iter().filter(|(_, v)| v.len() != 2).map(|(f, v)| (f, v.len())).collect();
    bad.sort();
    if let Some((facet, count)) = bad.first() {
        return Err(Error::IncompleteFan { facet: (*facet).clone(), count: *count });
    }

    // Connectivity of the dual graph.
    let mut adj = vec![Vec::new(); cones.len()];
    for v in facets.values() {
        adj[v[0]].push(v[1]);
        adj[v[1]].push(v[0]);
    }
    let mut comp = vec![usize::MAX; cones.len()];
    let mut components = 0;
    for start in 0..cones.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = components;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for &n in &adj[c] {
                if comp[n] == usize::MAX {
                    comp[n] = components;
                    queue.push_back(n);
                }
            }
        }
        components += 1;
    }
    if components != 1 {
        return Err(Error::DisconnectedFan { components });
    }

    Ok(Fan { dim: d, rays: raw_rays, max_cones: cones })
}

pub fn poincare_polynomial(fan: &Fan) -> Vec<u64> {
    let d = fan.dim;
    let mut face_counts = vec![0i128; d + 1];
    for cone in fan.all_cones() {
        face_counts[cone.len()] += 1;
    }
    // Σ_k f_k (t−1)^{d−k}
    let mut coeffs = vec![0i128; d + 1];
    for (k, &fk) in face_counts.iter().enumerate() {
        let e = d - k;
        let mut binom = 1i128;
        for j in 0..=e {
            let sign = if (e - j) % 2 == 0 { 1 } else { -1 };
            coeffs[j] += fk * binom * sign;
            binom = binom * (e - j) as i128 / (j + 1) as i128;
        }
    }
    coeffs
        .into_iter()
        .map(|c| u64::try_from(c).expect("Betti numbers of a complete simplicial fan are nonnegative"))
        .collect()
}

/// Standard fans used throughout the tests, examples and benchmarks.
pub mod standard {
    use super::Fan;

    /// Fan of ℙ^n with rays e_1..e_n and −Σe_i.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        Fan::new(rays, cones, n).expect("projective space fan is valid")
    }

    /// Weighted projective plane ℙ(1, w, 1) realized with rays (1,0), (0,1), (−1,−w).
    pub fn weighted_plane_1w1(w: i64) -> Fan {
        Fan::new(vec![vec![1, 0], vec![0, 1], vec![-1, -w]], vec![vec![0, 1], vec![1, 2], vec![0, 2]], 2)
            .expect("weighted plane fan is valid")
    }

    pub fn p1_x_p1() -> Fan {
        Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            2,
        )
        .expect("P1xP1 fan is valid")
    }

    /// Hirzebruch surface F_a with rays (1,0), (0,1), (−1,a), (0,−1).
    pub fn hirzebruch(a: i64) -> Fan {
        Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            2,
        )
        .expect("Hirzebruch fan is valid")
    }
}
