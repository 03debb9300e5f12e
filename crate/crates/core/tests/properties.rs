use coxhodge::fan::standard;
use coxhodge::ideal::Emptiness;
use coxhodge::nl::{codim_bound, delta_upper, nl_hypothesis_report, step1_coefficient};
use coxhodge::rational::{frac, q};
use coxhodge::{DivisorClass, Fan, GradedIdeal, GradedPolynomial, Monomial, ToricVariety};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::sync::OnceLock;

fn torsion_fan() -> Fan {
    Fan::new(vec![vec![2, -1], vec![-1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]], 2).unwrap()
}

fn corpus() -> &'static [ToricVariety] {
    static CORPUS: OnceLock<Vec<ToricVariety>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        vec![
            standard::projective_space(1),
            standard::projective_space(2),
            standard::projective_space(3),
            standard::weighted_plane_1w1(2),
            standard::weighted_plane_1w1(3),
            standard::p1_x_p1(),
            standard::hirzebruch(1),
            standard::hirzebruch(2),
            torsion_fan(),
        ]
        .into_iter()
        .map(|f| ToricVariety::new(f).unwrap())
        .collect()
    })
}

fn variety() -> impl Strategy<Value = &'static ToricVariety> {
    (0..corpus().len()).prop_map(|i| &corpus()[i])
}

fn exponents(x: &ToricVariety, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, x.class_group().num_vars())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn degree_is_additive((x, a, b) in variety().prop_flat_map(|x| (Just(x), exponents(x, 5), exponents(x, 5)))) {
        let cl = x.class_group();
        let sum: Vec<u32> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        prop_assert_eq!(cl.degree_of(&sum).unwrap(), cl.add(&cl.degree_of(&a).unwrap(), &cl.degree_of(&b).unwrap()));
    }

    #[test]
    fn lift_recovers_the_class((x, a) in variety().prop_flat_map(|x| {
        let n = x.class_group().num_vars();
        (Just(x), prop::collection::vec(-6i64..=6, n))
    })) {
        let cl = x.class_group();
        let alpha = cl.degree_of_signed(&a);
        prop_assert_eq!(cl.degree_of_signed(&cl.lift(&alpha).unwrap()), alpha);
    }

    #[test]
    fn predecessors_are_closed_under_complement((x, e) in variety().prop_flat_map(|x| (Just(x), exponents(x, 2)))) {
        let cl = x.class_group();
        let n = cl.degree_of(&e).unwrap();
        let preds = cl.effective_predecessors(&n).unwrap();
        prop_assert!(preds.contains(&cl.zero()));
        prop_assert!(preds.contains(&n));
        for b in &preds {
            prop_assert!(preds.contains(&cl.sub(&n, b)));
        }
    }

    #[test]
    fn graded_piece_counts_agree((x, a) in variety().prop_flat_map(|x| {
        let n = x.class_group().num_vars();
        (Just(x), prop::collection::vec(-2i64..=5, n))
    })) {
        let cl = x.class_group();
        let alpha = cl.degree_of_signed(&a);
        let points = cl.lattice_points(&alpha).unwrap();
        prop_assert_eq!(x.ring().piece_dimension(&alpha).unwrap(), points.len());
        prop_assert_eq!(cl.is_effective(&alpha).unwrap().is_effective(), !points.is_empty());
    }

    #[test]
    fn poincare_polynomials_are_palindromic(x in variety()) {
        let p = x.fan().poincare_polynomial();
        let mut rev = p.clone();
        rev.reverse();
        prop_assert_eq!(p, rev);
    }
}

/// Random binomial-ish generators `c₁m₁ + c₂m₂` of a common degree.
fn random_ideal(x: &ToricVariety, seeds: &[(Vec<u32>, Vec<u32>, i64)]) -> Option<GradedIdeal> {
    let cl = x.class_group();
    let mut gens = Vec::new();
    for (a, b, c) in seeds {
        let alpha = cl.degree_of(a).unwrap();
        let mut terms = vec![(Monomial(a.clone()), q(1))];
        if cl.degree_of(b).unwrap() == alpha && a != b && *c != 0 {
            terms.push((Monomial(b.clone()), q(*c)));
        }
        let f = GradedPolynomial::new(x.ring(), terms).ok()?;
        if f.degree().is_zero() {
            return None;
        }
        gens.push(f);
    }
    GradedIdeal::new(x.ring(), gens).ok()
}

fn plane() -> &'static ToricVariety {
    &corpus()[1]
}

fn plane_seeds() -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>, i64)>> {
    // Degrees 1..=3 in three variables; b is reused only if it has a's degree.
    let mono = prop::collection::vec(0u32..=2, 3);
    prop::collection::vec((mono.clone(), mono, -2i64..=2), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ideals_are_closed_under_multiplication(seeds in plane_seeds(), extra in prop::collection::vec(0u32..=2, 3), var in 0usize..3) {
        let x = plane();
        let Some(ideal) = random_ideal(x, &seeds) else { return Ok(()) };
        let g = &ideal.generators()[0];
        let f = g.mul_monomial(&Monomial(extra));
        prop_assert!(ideal.contains(&f).unwrap());
        let h = f.mul_monomial(&Monomial::var(3, var));
        prop_assert!(ideal.contains(&h).unwrap());
        let deg = f.degree().clone();
        prop_assert!(ideal.piece_dimension(&deg).unwrap() <= x.ring().piece_dimension(&deg).unwrap());
    }

    #[test]
    fn emptiness_and_witness_exclude_each_other(seeds in plane_seeds()) {
        let x = plane();
        let Some(ideal) = random_ideal(x, &seeds) else { return Ok(()) };
        let verified = matches!(ideal.emptiness_certificate(6).unwrap(), Emptiness::Verified { .. });
        let witness = ideal.search_witness().unwrap();
        prop_assert!(!(verified && witness.is_some()));
    }

    #[test]
    fn macaulay_symmetry_for_monomial_complete_intersections(a in 1u32..=4, b in 1u32..=4, c in 1u32..=4) {
        let x = plane();
        let ideal = GradedIdeal::parse(x.ring(), &[format!("x0^{a}"), format!("x1^{b}"), format!("x2^{c}")]).unwrap();
        let n = DivisorClass::free(vec![(a + b + c) as i64 - 3]);
        let cl = x.class_group();
        for alpha in cl.effective_predecessors(&n).unwrap() {
            prop_assert_eq!(
                ideal.quotient_dimension(&alpha).unwrap(),
                ideal.quotient_dimension(&cl.sub(&n, &alpha)).unwrap()
            );
        }
        prop_assert_eq!(ideal.quotient_dimension(&n).unwrap(), 1);
    }
}

/// Long division of `∏(1 + a_i t)` by `1 + bt`, quotient coefficients in order.
fn division_oracle(a: &[i64], b: i64, k: usize) -> BigRational {
    let mut p = vec![BigInt::from(1)];
    for &ai in a {
        let mut next = vec![BigInt::from(0); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * ai;
        }
        p = next;
    }
    p.resize(p.len().max(k + 1), BigInt::from(0));
    let mut rem = p;
    let mut quotient = Vec::new();
    for j in 0..=k {
        let c = rem[j].clone();
        if j + 1 < rem.len() {
            let sub = &c * b;
            rem[j + 1] -= sub;
        } else {
            rem.push(-(&c * b));
        }
        quotient.push(c);
    }
    BigRational::from_integer(quotient[k].clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn step1_matches_long_division(a in prop::collection::vec(0i64..=9, 0..=3), b in 0i64..=9, k in 0usize..=5) {
        prop_assert_eq!(step1_coefficient(&a, b, k), division_oracle(&a, b, k));
    }

    #[test]
    fn delta_threshold_direction(k in 2i64..=10, offset in 1i64..=40) {
        let r = k + 1 + offset;
        let d = delta_upper(r, k).unwrap();
        let threshold = frac(1, 2 * r);
        prop_assert_eq!(d >= threshold, r <= 2 * (k + 1));
        prop_assert_eq!(d == threshold, r == 2 * (k + 1));
    }

    #[test]
    fn codim_bound_is_monotone(d in 0u64..20, m in 0u64..20, k in 0u32..8) {
        let base = codim_bound(d, m, k);
        prop_assert!(codim_bound(d + 1, m, k) >= base);
        prop_assert!(codim_bound(d, m + 1, k) >= base);
        // Raising k multiplies by m/(k+1), so growth in k needs m ≥ k+1.
        if base > q(0) {
            prop_assert_eq!(codim_bound(d, m, k + 1) >= base, m >= k as u64 + 1);
        }
    }

    #[test]
    fn nl_report_ignores_pair_order(perm in Just(vec![0usize, 1, 2]).prop_shuffle(), beta in 4i64..=7, eta in 1i64..=2) {
        let x = &corpus()[2];
        let pairs = [
            (DivisorClass::free(vec![1]), DivisorClass::free(vec![1])),
            (DivisorClass::free(vec![2]), DivisorClass::free(vec![1])),
            (DivisorClass::free(vec![1]), DivisorClass::free(vec![3])),
        ];
        let shuffled: Vec<_> = perm.iter().map(|&i| pairs[i].clone()).collect();
        let a = nl_hypothesis_report(x.fan(), x.ring(), &DivisorClass::free(vec![beta]), &DivisorClass::free(vec![eta]), 1, &pairs).unwrap();
        let b = nl_hypothesis_report(x.fan(), x.ring(), &DivisorClass::free(vec![beta]), &DivisorClass::free(vec![eta]), 1, &shuffled).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn polynomials_survive_display_and_parse(coeffs in prop::collection::vec((-20i64..=20, 1i64..=6), 10)) {
        let x = plane();
        let basis = x.ring().monomial_basis(&DivisorClass::free(vec![3])).unwrap();
        let terms: Vec<_> = basis.monomials.iter().zip(&coeffs).map(|(m, (n, d))| (m.clone(), frac(*n, *d))).collect();
        let Ok(f) = GradedPolynomial::with_degree(x.ring(), DivisorClass::free(vec![3]), terms) else { return Ok(()) };
        if f.is_zero() {
            return Ok(());
        }
        prop_assert_eq!(x.parse(&f.to_string()).unwrap(), f);
    }
}
