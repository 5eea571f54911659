//! Command implementations behind the `polyflat` binary. Each command
//! returns certificates; failures become `error` certificates rather than
//! panics so every invocation produces parseable output.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::rational::{parse_rational, rational_json};
use crate::algebra::Rational;
use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::flatness::{
    area_degree_check, classify_range, cyclic_quartic_check, is_flat_cot_field, lemma_quartic_check,
    polygon_area_min_poly, real_cyclotomic_check, verify_cot_multiple, FLAT_INDICES,
};
use crate::geometry::{
    area_identity_check, heron_area_squared, polygon_area_formula_check, search_rational_points, unit_polygon,
    write_candidates_csv, ExactPoint,
};
use crate::sqrt_sums::{mq_from_sqrt, refute_or_find_sum, sign_flip_check};

/// Claims accepted by [`cmd_verify`], with their argument shapes.
pub const VERIFY_CLAIMS: &[(&str, &str)] = &[
    ("cot-multiple", "N D"),
    ("sign-flip", "R1 [R2 ...]"),
    ("cyclic-quartic", "N"),
    ("real-cyclotomic", "Q"),
    ("lemma", "P A B C"),
    ("area-formula", "N"),
    ("area-identity", "N X Y"),
    ("area-degree", "N"),
    ("heron", "A B C"),
];

/// Short aliases for some claims.
const CLAIM_ALIASES: &[(&str, &str)] = &[
    ("prop1", "cot-multiple"),
    ("prop2", "sign-flip"),
    ("prop3", "cyclic-quartic"),
    ("prop4", "real-cyclotomic"),
];

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn finish(claim: &str, inputs: Value, r: Result<Certificate>) -> Certificate {
    r.unwrap_or_else(|e| Certificate::error(claim, inputs, &e))
}

/// One flatness certificate per `n` in `3..=max_n`, then a summary.
pub fn cmd_classify(max_n: usize) -> Vec<Certificate> {
    let inputs = json!({ "max_n": max_n });
    if max_n < 3 {
        let e = Error::InvalidArgument(format!("--max-n must be at least 3, got {max_n}"));
        return vec![Certificate::error("flatness.classify", inputs, &e)];
    }
    let reports = match classify_range(3, max_n) {
        Ok(r) => r,
        Err(e) => return vec![Certificate::error("flatness.classify", inputs, &e)],
    };
    let mut certs: Vec<Certificate> = reports
        .iter()
        .map(|r| Certificate::new("flatness.field", json!({ "n": r.n }), Verdict::Verified, to_value(r)))
        .collect();
    let flat: Vec<usize> = reports.iter().filter(|r| r.is_flat).map(|r| r.n).collect();
    let expected: Vec<usize> = FLAT_INDICES.iter().copied().filter(|&n| n <= max_n).collect();
    certs.push(Certificate::from_bool(
        "flatness.classify",
        inputs,
        flat == expected,
        json!({ "flat_set": flat, "expected": expected, "checked": reports.len() }),
    ));
    certs
}

fn canonical_claim(claim: &str) -> &str {
    CLAIM_ALIASES
        .iter()
        .find(|(alias, _)| *alias == claim)
        .map_or(claim, |(_, name)| name)
}

fn arity(args: &[String], n: usize, usage: &str) -> Result<()> {
    if args.len() != n {
        return Err(Error::InvalidArgument(format!("expected arguments: {usage}")));
    }
    Ok(())
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("not a nonnegative integer: {s}")))
}

fn parse_rat(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidArgument(format!("not a rational number: {s}")))
}

/// Check one named claim on the given arguments.
pub fn cmd_verify(claim: &str, args: &[String]) -> Certificate {
    let name = canonical_claim(claim);
    let label = format!("verify.{name}");
    let inputs = json!({ "claim": name, "args": args });
    finish(&label, inputs.clone(), verify_inner(name, &label, inputs, args))
}

fn verify_inner(name: &str, label: &str, inputs: Value, args: &[String]) -> Result<Certificate> {
    let usage = VERIFY_CLAIMS
        .iter()
        .find(|(c, _)| *c == name)
        .map(|(_, u)| *u)
        .ok_or_else(|| {
            let known: Vec<_> = VERIFY_CLAIMS.iter().map(|(c, _)| *c).collect();
            Error::InvalidArgument(format!("unknown claim {name:?}; expected one of {}", known.join(", ")))
        })?;
    let cert = match name {
        "cot-multiple" => {
            arity(args, 2, usage)?;
            let r = verify_cot_multiple(parse_usize(&args[0])?, parse_usize(&args[1])?)?;
            Certificate::from_bool(label, inputs, r.verified(), to_value(&r))
        }
        "sign-flip" => {
            if args.is_empty() {
                arity(args, 1, usage)?;
            }
            let rs = args.iter().map(|a| parse_rat(a)).collect::<Result<Vec<_>>>()?;
            let r = sign_flip_check(&rs)?;
            let mut payload = to_value(&r);
            payload["sum_text"] = json!(r.sum.to_string());
            Certificate::from_bool(label, inputs, r.verified(), payload)
        }
        "cyclic-quartic" => {
            arity(args, 1, usage)?;
            let r = cyclic_quartic_check(parse_usize(&args[0])?)?;
            let mut payload = to_value(&r);
            payload["cot_min_poly_text"] = json!(r.cot_min_poly.to_string());
            payload["radical_min_poly_text"] = json!(r.radical_min_poly.to_string());
            Certificate::from_bool(label, inputs, r.verified(), payload)
        }
        "real-cyclotomic" => {
            arity(args, 1, usage)?;
            let r = real_cyclotomic_check(parse_usize(&args[0])?)?;
            let mut payload = to_value(&r);
            payload["min_poly_text"] = json!(r.min_poly.to_string());
            Certificate::from_bool(label, inputs, r.verified(), payload)
        }
        "lemma" => {
            arity(args, 4, usage)?;
            let p = parse_usize(&args[0])? as u64;
            let (a, b, c) = (parse_rat(&args[1])?, parse_rat(&args[2])?, parse_rat(&args[3])?);
            let r = lemma_quartic_check(p, &a, &b, &c)?;
            let mut payload = to_value(&r);
            payload["quartic_text"] = json!(r.quartic.to_string());
            Certificate::new(label, inputs, Verdict::Verified, payload)
        }
        "area-formula" => {
            arity(args, 1, usage)?;
            let r = polygon_area_formula_check(parse_usize(&args[0])?)?;
            let mut payload = to_value(&r);
            payload["min_poly_text"] = json!(r.min_poly.to_string());
            Certificate::from_bool(label, inputs, r.holds, payload)
        }
        "area-identity" => {
            arity(args, 3, usage)?;
            let poly = unit_polygon(parse_usize(&args[0])?)?;
            let p = ExactPoint::from_rationals(poly.index(), parse_rat(&args[1])?, parse_rat(&args[2])?);
            let r = area_identity_check(&poly, &p)?;
            Certificate::from_bool(label, inputs, r.holds, to_value(&r))
        }
        "area-degree" => {
            arity(args, 1, usage)?;
            let r = area_degree_check(parse_usize(&args[0])?)?;
            Certificate::new(label, inputs, Verdict::Verified, to_value(&r))
        }
        "heron" => {
            arity(args, 3, usage)?;
            let (a, b, c) = (parse_rat(&args[0])?, parse_rat(&args[1])?, parse_rat(&args[2])?);
            let sq = heron_area_squared(&a, &b, &c)?;
            let (a2, b2, c2) = (&a * &a, &b * &b, &c * &c);
            let t = &a2 + &b2 - &c2;
            let identity =
                Rational::from_integer(16.into()) * &sq == Rational::from_integer(4.into()) * &a2 * &b2 - &t * &t;
            let area = mq_from_sqrt(&sq)?;
            Certificate::from_bool(
                label,
                inputs,
                identity,
                json!({
                    "area_squared": rational_json(&sq),
                    "area": to_value(&area),
                    "area_text": area.to_string(),
                    "sixteen_area_squared_identity": identity,
                }),
            )
        }
        _ => unreachable!("claim list and dispatch disagree"),
    };
    Ok(cert)
}

/// Search for `area(P_n) = ±√r_1 ± ... ± √r_k` and report whether the
/// field `ℚ(cot(π/n))` rules such an identity out for every bound.
pub fn cmd_refute(n: usize, k: usize, bound: u64) -> Certificate {
    let inputs = json!({ "n": n, "terms": k, "bound": bound });
    finish("sqrt_sum.refute", inputs.clone(), refute_inner(n, k, bound, inputs))
}

fn refute_inner(n: usize, k: usize, bound: u64, inputs: Value) -> Result<Certificate> {
    let target = polygon_area_min_poly(n)?;
    let flat = is_flat_cot_field(n)?;
    let report = refute_or_find_sum(&target, k, bound)?;
    let verdict = if report.witness.is_some() {
        Verdict::WitnessFound
    } else {
        Verdict::ExhaustedNoWitness
    };
    let payload = json!({
        "target_min_poly_text": target.to_string(),
        "search": to_value(&report),
        "flatness": to_value(&flat),
        // a non-flat field cannot lie in any multiquadratic field
        "structural_refutation": !flat.is_flat,
    });
    Ok(Certificate::new("sqrt_sum.refute", inputs, verdict, payload))
}

/// Run the rational-distance point search, optionally writing CSV.
pub fn cmd_search(n: usize, bound: u64, out: Option<&Path>) -> Certificate {
    let inputs = json!({ "n": n, "bound": bound });
    finish("geometry.search", inputs.clone(), search_inner(n, bound, out, inputs))
}

fn search_inner(n: usize, bound: u64, out: Option<&Path>, inputs: Value) -> Result<Certificate> {
    let hits = search_rational_points(n, bound)?;
    if let Some(path) = out {
        let file = std::fs::File::create(path)?;
        write_candidates_csv(file, &hits)?;
    }
    let verdict = if hits.is_empty() {
        Verdict::ExhaustedNoWitness
    } else {
        Verdict::WitnessFound
    };
    Ok(Certificate::new(
        "geometry.search",
        inputs,
        verdict,
        json!({ "hit_count": hits.len(), "candidates": to_value(&hits) }),
    ))
}

/// Short human-readable line for a certificate.
pub fn summarize(cert: &Certificate) -> String {
    let verdict = serde_json::to_value(cert.verdict).expect("verdict serializes");
    let verdict = verdict.as_str().unwrap_or("?");
    if cert.verdict == Verdict::Error {
        let message = cert.payload["message"].as_str().unwrap_or("");
        return format!("{}: {verdict} ({message})", cert.claim);
    }
    let detail = match cert.claim.as_str() {
        "flatness.field" => format!(
            "n = {}: degree {}, flat = {}",
            cert.payload["n"], cert.payload["degree"], cert.payload["is_flat"]
        ),
        "flatness.classify" => format!("flat set {}", cert.payload["flat_set"]),
        "sqrt_sum.refute" => format!(
            "target {}, {} candidates, structural refutation = {}",
            cert.payload["target_min_poly_text"].as_str().unwrap_or(""),
            cert.payload["search"]["candidates_tested"],
            cert.payload["structural_refutation"]
        ),
        "geometry.search" => format!("{} hits", cert.payload["hit_count"]),
        _ => cert.inputs["args"].to_string(),
    };
    format!("{}: {verdict} ({detail})", cert.claim)
}
