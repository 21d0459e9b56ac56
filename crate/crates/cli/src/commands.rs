//! Subcommand handlers. Each parses its JSON-valued flags, runs the
//! library, and assembles a report value carrying every intermediate
//! quantity the computation produced.

use serde_json::{json, Value};

use p1spec::chain::CyclicChain;
use p1spec::pairs::BgType;
use p1spec::perm::{
    cyclic_cover_factorizable, cyclic_transitive_classification, group_elements,
    is_imprimitive, is_transitive, minimal_blocks, BlockSystem, Permutation,
};
use p1spec::spectral::{cyclic_integrality, Integrality};
use p1spec::tower::{plan_tower, pushforward_degree};
use p1spec::{
    nitsure_dimension, Error, FactoredSection, HitchinTuple, LambdaPoly, Rational, Section,
    TwistedPair,
};

use crate::{Failure, ShapeArg};

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("{what}: {e}")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// λ-polynomial as ascending lists of ascending rational coefficients.
fn lambda_value(p: &LambdaPoly) -> Value {
    let coeffs: Vec<Vec<String>> = p
        .coeffs()
        .iter()
        .map(|c| c.coeffs().iter().map(Rational::to_string).collect())
        .collect();
    json!({ "lambda_coeffs": coeffs })
}

fn blocks_value(blocks: &Option<BlockSystem>) -> Value {
    match blocks {
        Some(system) => to_value(&system),
        None => Value::Null,
    }
}

pub fn pair_charpoly(t: i64, bg: &str, phi: &str) -> Result<Value, Failure> {
    let bg: Value = parse_json("--bg", bg)?;
    let phi: Value = parse_json("--phi", phi)?;
    let pair: TwistedPair = serde_json::from_value(json!({"t": t, "bg": bg, "phi": phi}))
        .map_err(|e| Failure::Input(format!("pair: {e}")))?;
    let newton = pair.char_coefficients_newton();
    let det = pair.char_coefficients_det();
    let dimension = nitsure_dimension(pair.rank() as u32, t)?;
    Ok(json!({
        "t": t,
        "rank": pair.rank(),
        "bg": to_value(pair.bg()),
        "char_coefficients": to_value(&newton.sections()),
        "char_coefficients_det": to_value(&det.sections()),
        "routes_agree": newton == det,
        "cayley_hamilton": pair.cayley_hamilton_check(),
        "slope": pair.bg().slope().to_string(),
        "nitsure_dimension": dimension,
    }))
}

pub fn pair_companion(t: i64, s: &str) -> Result<Value, Failure> {
    let sections: Vec<Section> = parse_json("--s", s)?;
    let tuple = HitchinTuple::new(t, sections)?;
    let companion = tuple.companion();
    let roundtrip_ok = companion.char_coefficients_det() == tuple;
    Ok(json!({
        "t": t,
        "rank": tuple.rank(),
        "pair": to_value(&companion),
        "char_roundtrip_ok": roundtrip_ok,
    }))
}

pub fn chain_build(t: i64, bg: &str, s: &str) -> Result<Value, Failure> {
    let bg: Vec<i64> = parse_json("--bg", bg)?;
    let bg = BgType::new(bg)?;
    let factored: FactoredSection = parse_json("--s", s)?;
    let expanded = factored.expand();
    let chain = CyclicChain::build(bg, t, &factored)?;
    let r = chain.rank();
    let induced = chain.induced_pair();
    let char_is_cyclic = induced.char_coefficients_det()
        == HitchinTuple::cyclic(t, r, expanded.clone())?;
    let chain_value = to_value(&chain);
    Ok(json!({
        "t": t,
        "bg": chain_value["bg"],
        "u": chain_value["u"],
        "determinant": to_value(&chain.determinant()),
        "determinant_target": to_value(&expanded),
        "stability": to_value(&chain.stability()),
        "char_is_cyclic": char_is_cyclic,
    }))
}

pub fn chain_stability(t: i64, bg: &str, u: &str) -> Result<Value, Failure> {
    let bg_value: Value = parse_json("--bg", bg)?;
    let u_value: Value = parse_json("--u", u)?;
    let chain: CyclicChain =
        serde_json::from_value(json!({"t": t, "bg": bg_value, "u": u_value}))
            .map_err(|e| Failure::Input(format!("chain: {e}")))?;
    let r = chain.rank();
    let m = chain.bg().numbers();
    let heads: Vec<Value> = (0..r.saturating_sub(1))
        .map(|i| {
            let sum: i64 = m[..=i].iter().sum();
            let slope = Rational::new(sum.into(), (i as i64 + 1).into()).unwrap();
            json!({
                "length": i + 1,
                "entry_zero": chain.entries()[i].is_zero(),
                "head_slope": slope.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "t": t,
        "bg": to_value(chain.bg()),
        "slope": chain.bg().slope().to_string(),
        "heads": heads,
        "corner_zero": chain.entries()[r - 1].is_zero(),
        "determinant": to_value(&chain.determinant()),
        "verdict": to_value(&chain.stability()),
    }))
}

pub fn spectral_report(t: i64, r: Option<usize>, s: &str) -> Result<Value, Failure> {
    let sections: Vec<Section> = parse_json("--s", s)?;
    let tuple = HitchinTuple::new(t, sections)?;
    if let Some(expected) = r {
        if expected != tuple.rank() {
            return Err(Failure::Input(format!(
                "--r {expected} does not match the {} supplied sections",
                tuple.rank()
            )));
        }
    }
    let rank = tuple.rank();
    let report = p1spec::spectral::spectral_report(&tuple)?;
    let mut value = to_value(&report);
    if tuple.is_cyclic_shape() {
        if rank >= 2 {
            value["genus_hurwitz_cyclic"] =
                json!(p1spec::spectral::genus_hurwitz_cyclic(t, rank));
        }
        let minus_s = tuple.sections()[rank - 1].scale(&Rational::from_int(-1));
        if !minus_s.is_zero() {
            if let Integrality::No {
                factor_left,
                factor_right,
            } = cyclic_integrality(t, rank, &minus_s)?
            {
                value["integrality_certificate"] = json!({
                    "factor_left": lambda_value(&factor_left),
                    "factor_right": lambda_value(&factor_right),
                });
            }
        }
    }
    Ok(value)
}

pub fn galois_blocks(
    gens: &str,
    a: Option<usize>,
    b: Option<usize>,
    bound: usize,
) -> Result<Value, Failure> {
    let gens: Vec<Permutation> = parse_json("--gens", gens)?;
    if gens.is_empty() {
        return Err(Failure::Input(Error::EmptyGenerators.to_string()));
    }
    let degree = gens[0].degree();
    let transitive = is_transitive(&gens)?;
    let order = match group_elements(&gens, bound) {
        Ok(elements) => json!(elements.len()),
        Err(Error::GroupTooLarge(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let classification = cyclic_transitive_classification(&gens)?;
    let mut value = json!({
        "degree": degree,
        "transitive": transitive,
        "order": order,
        "classification": to_value(&classification),
    });
    match (a, b) {
        (Some(a), Some(b)) => {
            if a >= degree || b >= degree || a == b {
                return Err(Failure::Input(format!(
                    "symbols must be distinct and below the degree {degree}"
                )));
            }
            let blocks = minimal_blocks(&gens, a, b)?;
            value["pair"] = json!({"a": a, "b": b});
            value["minimal_blocks"] = blocks_value(&blocks);
            value["trivial"] = json!(blocks.is_none());
        }
        (None, None) => {
            let witness = is_imprimitive(&gens)?;
            value["imprimitive"] = json!(witness.is_some());
            value["witness_blocks"] = blocks_value(&witness);
        }
        _ => {
            return Err(Failure::Input(
                "--a and --b must be given together".to_owned(),
            ))
        }
    }
    Ok(value)
}

pub fn cover_factor(r: u64) -> Result<Value, Failure> {
    let (factorizable, factorizations) = cyclic_cover_factorizable(r)?;
    Ok(json!({
        "r": r,
        "factorizable": factorizable,
        "factorizations": factorizations,
    }))
}

pub fn tower_plan(t: i64, r: i64, m: i64, p: i64, d: i64) -> Result<Value, Failure> {
    let plan = plan_tower(t, r, m, p, d)?;
    let mut value = to_value(&plan);
    value["consistency"] = json!({
        "d_dprime_via_pushforward": pushforward_degree(plan.d_prime, 1, plan.g_top, plan.g_mid, plan.m),
        "d_via_pushforward": pushforward_degree(plan.d_dprime, plan.m, plan.g_mid, 0, plan.p),
    });
    Ok(value)
}

fn parse_pair_arg(what: &str, text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Input(format!("{what}: expected two comma-separated integers"));
    let (first, second) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        first.trim().parse().map_err(|_| bad())?,
        second.trim().parse().map_err(|_| bad())?,
    ))
}

pub fn elliptic_push(
    rank: u32,
    degree: i64,
    shape: ShapeArg,
    h0: Option<u8>,
    line_degrees: Option<String>,
    line_h0: Option<String>,
) -> Result<Value, Failure> {
    use p1spec::elliptic::{pushforward_splitting, BundleShape, EllipticBundleSpec};
    let line_degrees = line_degrees
        .map(|text| parse_pair_arg("--line-degrees", &text))
        .transpose()?;
    let line_h0 = line_h0
        .map(|text| -> Result<(u8, u8), Failure> {
            let (a, b) = parse_pair_arg("--line-h0", &text)?;
            let narrow = |v: i64| -> Result<u8, Failure> {
                u8::try_from(v).map_err(|_| Failure::Input("--line-h0: values must be 0 or 1".into()))
            };
            Ok((narrow(a)?, narrow(b)?))
        })
        .transpose()?;
    let spec = EllipticBundleSpec {
        rank,
        degree,
        shape: match shape {
            ShapeArg::Indecomposable => BundleShape::Indecomposable,
            ShapeArg::DecomposableLineSum => BundleShape::DecomposableLineSum,
        },
        h0,
        line_degrees,
        line_h0,
    };
    let result = pushforward_splitting(&spec)?;
    Ok(json!({
        "spec": to_value(&spec),
        "bg": to_value(&result.bg),
        "degree_check": result.degree_check,
        "pushforward_degree": degree - 2 * rank as i64,
        "grothendieck_ok": result.bg.grothendieck_constraint(2),
    }))
}
