use crate::input::{load_fan, load_ideal_texts, load_polys, load_variety, parse_class, parse_ints, parse_point, parse_rational};
use crate::{Cli, Command, Failure, FanCommand, HodgeCommand, Status};
use coxhodge::hodge::{
    cayley, hypersurface_prim_hodge, intersection_prim_hodge, jacobian_ideal, nondegeneracy_certificate,
    quasi_smooth_certificate, singular_locus_ideal, toric_jacobian_ideal,
};
use coxhodge::ideal::GorensteinVerdict;
use coxhodge::nl::{codim_bound, delta_bound, nl_hypothesis_report, step1_coefficient, step3_socle_bounds, Step3Input};
use coxhodge::{rational, Certificate, CoxRing, DivisorClass, GradedIdeal, GradedPolynomial, HodgeOptions, ToricVariety};
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

type Outcome = Result<(Value, Status), Failure>;

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn certificate_status(c: &Certificate) -> Status {
    match c {
        Certificate::Verified { .. } => Status::Computed,
        Certificate::Refuted { .. } => Status::Refuted,
        Certificate::Inconclusive { .. } => Status::Inconclusive,
    }
}

fn trace_basis(ring: &CoxRing, alpha: &DivisorClass) -> Result<(), Failure> {
    let basis = ring.monomial_basis(alpha)?;
    eprintln!("trace: basis of degree {alpha}, dimension {}", basis.dim());
    for (i, m) in basis.monomials.iter().enumerate() {
        eprintln!("trace:   [{i}] {}", ring.format_monomial(m));
    }
    Ok(())
}

fn trace_piece(ideal: &GradedIdeal, alpha: &DivisorClass) -> Result<(), Failure> {
    trace_basis(ideal.ring(), alpha)?;
    let piece = ideal.piece(alpha)?;
    let pivots: Vec<String> = piece.echelon.pivot_columns().map(|c| c.to_string()).collect();
    eprintln!("trace: ideal piece rank {}, pivot columns [{}]", piece.dim(), pivots.join(", "));
    Ok(())
}

fn trace_generators(ideal: &GradedIdeal) {
    eprintln!("trace: {} generators", ideal.generators().len());
    for (i, g) in ideal.generators().iter().enumerate() {
        eprintln!("trace:   [{i}] degree {}: {g}", g.degree());
    }
}

fn one_poly(x: &ToricVariety, paths: &[std::path::PathBuf]) -> Result<GradedPolynomial, Failure> {
    let mut polys = load_polys(x, paths)?;
    if polys.len() != 1 {
        return Err(Failure::new("InvalidArgument", format!("expected one polynomial, found {}", polys.len())));
    }
    Ok(polys.remove(0))
}

fn class_pairs(x: &ToricVariety, flat: &[String]) -> Result<Vec<(DivisorClass, DivisorClass)>, Failure> {
    let cl = x.class_group();
    flat.chunks(2).map(|p| Ok((parse_class(cl, &p[0])?, parse_class(cl, &p[1])?))).collect()
}

pub fn run(cli: &Cli) -> Outcome {
    let m_max = cli.m_max;
    match &cli.command {
        Command::Fan(FanCommand::Check { fan }) => {
            let fan = load_fan(&fan.fan)?;
            Ok((
                json!({
                    "valid": true,
                    "dim": fan.dim(),
                    "num_rays": fan.num_rays(),
                    "num_max_cones": fan.max_cones().len(),
                    "poincare_polynomial": fan.poincare_polynomial(),
                }),
                Status::Computed,
            ))
        }
        Command::Classgroup { fan, classes } => {
            let x = load_variety(&fan.fan)?;
            let cl = x.class_group();
            let mut reports = Vec::new();
            for text in classes {
                let c = parse_class(cl, text)?;
                reports.push(json!({
                    "class": to_value(&c),
                    "effective": to_value(&cl.is_effective(&c)?),
                    "positivity": to_value(&x.positivity(&c)?),
                }));
            }
            Ok((
                json!({
                    "free_rank": cl.free_rank(),
                    "torsion_orders": cl.torsion_orders(),
                    "variables": x.ring().var_names(),
                    "variable_degrees": to_value(&cl.variable_degrees()),
                    "anticanonical": to_value(&cl.anticanonical()),
                    "classes": reports,
                }),
                Status::Computed,
            ))
        }
        Command::Basis { fan, degree } => {
            let x = load_variety(&fan.fan)?;
            let alpha = parse_class(x.class_group(), degree)?;
            let ring = x.ring();
            if cli.trace {
                trace_basis(ring, &alpha)?;
            }
            let basis = ring.monomial_basis(&alpha)?;
            let names: Vec<String> = basis.monomials.iter().map(|m| ring.format_monomial(m)).collect();
            let exps: Vec<&[u32]> = basis.monomials.iter().map(|m| m.exponents()).collect();
            Ok((
                json!({ "degree": to_value(&alpha), "dimension": basis.dim(), "monomials": names, "exponents": exps }),
                Status::Computed,
            ))
        }
        Command::Oda { fan, pair, unchecked } => {
            let x = load_variety(&fan.fan)?;
            let pairs = class_pairs(&x, pair)?;
            if !unchecked {
                for (a1, a2) in &pairs {
                    let (p1, p2) = (x.positivity(a1)?, x.positivity(a2)?);
                    if !(p1.ample && p1.cartier) {
                        return Err(Failure::new("PreconditionFailed", format!("{a1} is not ample Cartier (pass --unchecked to override)")));
                    }
                    if !(p2.nef && p2.cartier) {
                        return Err(Failure::new("PreconditionFailed", format!("{a2} is not nef Cartier (pass --unchecked to override)")));
                    }
                }
            }
            let certs = pairs
                .iter()
                .map(|(a1, a2)| x.ring().multiplication_surjective(a1, a2))
                .collect::<coxhodge::Result<Vec<_>>>()?;
            let all = certs.iter().all(|c| c.surjective);
            let status = if all { Status::Computed } else { Status::Refuted };
            Ok((json!({ "certificates": to_value(&certs), "all_surjective": all }), status))
        }
        Command::Quasismooth { fan, poly, point } => {
            let x = load_variety(&fan.fan)?;
            let polys = load_polys(&x, poly)?;
            let point = point.as_deref().map(parse_point).transpose()?;
            if cli.trace {
                trace_generators(&singular_locus_ideal(&polys)?);
            }
            let cert = quasi_smooth_certificate(&polys, m_max, point.as_deref())?;
            let degrees: Vec<&DivisorClass> = polys.iter().map(|f| f.degree()).collect();
            let status = certificate_status(&cert);
            Ok((json!({ "degrees": to_value(&degrees), "certificate": to_value(&cert) }), status))
        }
        Command::Nondegenerate { fan, poly, point } => {
            let x = load_variety(&fan.fan)?;
            let f = one_poly(&x, poly)?;
            let point = point.as_deref().map(parse_point).transpose()?;
            let report = nondegeneracy_certificate(&x, &f, m_max, point.as_deref())?;
            let status = certificate_status(&report.certificate);
            Ok((to_value(&report), status))
        }
        Command::Hodge(HodgeCommand::Hypersurface { fan, poly, index, no_certify }) => {
            let x = load_variety(&fan.fan)?;
            let f = one_poly(&x, poly)?;
            let opts = HodgeOptions { m_max, certify: !no_certify, certify_cayley: false };
            let report = hypersurface_prim_hodge(&x, &f, *index, opts)?;
            if cli.trace {
                trace_piece(&jacobian_ideal(&f)?, &report.target_degree)?;
            }
            Ok((to_value(&report), Status::Computed))
        }
        Command::Hodge(HodgeCommand::Intersection { fan, poly, index, no_certify, certify_cayley }) => {
            let x = load_variety(&fan.fan)?;
            let polys = load_polys(&x, poly)?;
            let opts = HodgeOptions { m_max, certify: !no_certify, certify_cayley: *certify_cayley };
            let report = intersection_prim_hodge(&x, &polys, *index, opts)?;
            if cli.trace {
                let data = cayley(&x, &polys)?;
                eprintln!("trace: Cayley polynomial F = {}", data.f);
                trace_piece(&jacobian_ideal(&data.f)?, &report.target_degree)?;
            }
            Ok((to_value(&report), Status::Computed))
        }
        Command::Gorenstein { fan, ideal, jacobian, toric_jacobian, socle } => {
            let x = load_variety(&fan.fan)?;
            let ring: &Arc<CoxRing> = x.ring();
            let ideal = match (ideal, jacobian, toric_jacobian) {
                (Some(path), _, _) => GradedIdeal::parse(ring, &load_ideal_texts(path)?)?,
                (_, Some(path), _) => jacobian_ideal(&one_poly(&x, std::slice::from_ref(path))?)?,
                (_, _, Some(path)) => toric_jacobian_ideal(&one_poly(&x, std::slice::from_ref(path))?)?,
                _ => return Err(Failure::new("Usage", "one of --ideal, --jacobian, --toric-jacobian is required")),
            };
            let n = parse_class(x.class_group(), socle)?;
            if cli.trace {
                trace_generators(&ideal);
                trace_piece(&ideal, &n)?;
            }
            let report = ideal.verify_cox_gorenstein(&n, m_max)?;
            let status = match report.verdict {
                GorensteinVerdict::CoxGorenstein => Status::Computed,
                GorensteinVerdict::ConditionsFailed { .. } => Status::Refuted,
                GorensteinVerdict::EmptinessInconclusive => Status::Inconclusive,
            };
            Ok((to_value(&report), status))
        }
        Command::Nl { fan, beta, eta, k, pair, deg_v, delta, r, d_param } => {
            let x = load_variety(&fan.fan)?;
            let cl = x.class_group();
            let beta = parse_class(cl, beta)?;
            let eta = parse_class(cl, eta)?;
            let pairs = class_pairs(&x, pair)?;
            let report = nl_hypothesis_report(x.fan(), x.ring(), &beta, &eta, *k, &pairs)?;
            let mut out = json!({ "hypotheses": to_value(&report), "delta_bound": null, "step3": null });
            if let (Some(deg_v), Some(delta), Some(r)) = (deg_v, delta, r) {
                let m_beta = report
                    .m_beta
                    .ok_or_else(|| Failure::new("PreconditionFailed", "m_beta is undefined for this (beta, eta)"))?;
                let m_beta = i64::try_from(m_beta).map_err(|_| Failure::new("Overflow", "m_beta"))?;
                out["delta_bound"] = to_value(&delta_bound(*r, *k)?);
                let input = Step3Input { k: *k, deg_v: *deg_v, m_beta, delta: parse_rational(delta)?, r: *r, d_param: *d_param };
                out["step3"] = to_value(&step3_socle_bounds(cl, &eta, input)?);
            }
            Ok((out, Status::Computed))
        }
        Command::Step1 { a, b, k } => {
            let a = parse_ints(a)?;
            let c = step1_coefficient(&a, *b, *k);
            Ok((json!({ "a": a, "b": b, "k": k, "coefficient": rational::to_string(&c) }), Status::Computed))
        }
        Command::Bounds { r, k, d, m_beta } => {
            let delta = delta_bound(*r, *k)?;
            let codim = match (d, m_beta) {
                (Some(d), Some(m)) => {
                    let k = u32::try_from(*k).map_err(|_| Failure::new("InvalidArgument", "k must be nonnegative"))?;
                    json!({ "d": d, "m_beta": m, "k": k, "bound": rational::to_string(&codim_bound(*d, *m, k)) })
                }
                _ => Value::Null,
            };
            Ok((json!({ "delta": to_value(&delta), "codim": codim }), Status::Computed))
        }
        Command::Generic { fan, degree } => {
            let x = load_variety(&fan.fan)?;
            let degrees = degree.iter().map(|d| parse_class(x.class_group(), d)).collect::<Result<Vec<_>, _>>()?;
            let polys = coxhodge::generic::random_polynomials(x.ring(), &degrees, cli.seed)?;
            let texts: Vec<String> = polys.iter().map(|f| f.to_string()).collect();
            Ok((json!({ "seed": cli.seed, "degrees": to_value(&degrees), "polynomials": texts }), Status::Computed))
        }
    }
}
