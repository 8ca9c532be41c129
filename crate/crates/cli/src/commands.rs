use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use romaneq_core::dp::tree_roman_number;
use romaneq_core::gadget::{build_gadget, parse_dimacs, verify_gadget};
use romaneq_core::generator::{random_member, DEFAULT_ENUMERATION_CAP};
use romaneq_core::{
    check_decision, decide_membership, enumerate_family, parse_edge_list, replay, Graph,
    OpStep, ReductionTrace, Solver, Tree, Triple, VertexSet,
};

use crate::certificate::{digest, Certificate, Kind, SCHEMA_VERSION};

/// JSON for stdout plus the process exit code.
pub struct Outcome {
    pub output: Value,
    pub exit: u8,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Outcome { output, exit: 0 }
    }

    fn verdict(output: Value, positive: bool) -> Self {
        Outcome {
            output,
            exit: if positive { 0 } else { 1 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    DpRdf,
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("plain data serializes")
}

fn parse_x(spec: &str, order: usize) -> Result<VertexSet> {
    match spec {
        "all" => Ok(VertexSet::full(order)),
        "none" => Ok(VertexSet::empty(order)),
        list => {
            let members = list
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .with_context(|| format!("bad vertex `{s}` in --x"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(VertexSet::from_vertices(order, members)?)
        }
    }
}

fn as_tree(g: Graph) -> Result<Tree> {
    Tree::new(g).context("input graph is not a tree")
}

fn triple_json(tr: &Triple) -> Value {
    json!({
        "order": tr.order(),
        "edges": tr.tree().edges(),
        "X": tr.x(),
        "Y": tr.y(),
        "canonical": tr.canonical(),
    })
}

fn solve_result(text: &str, x: &str, method: Method, solver: &Solver) -> Result<Value> {
    let g = parse_edge_list(text)?;
    let x = parse_x(x, g.order())?;
    Ok(match method {
        Method::Oracle => {
            let mut report = to_json(&solver.report(&g, &x)?);
            report["method"] = json!("oracle");
            report
        }
        Method::DpRdf => {
            let t = as_tree(g)?;
            json!({ "method": "dp-rdf", "gamma_R": tree_roman_number(&t, &x) })
        }
    })
}

pub fn solve(text: String, x: &str, method: Method, solver: &Solver) -> Result<Outcome> {
    let result = solve_result(&text, x, method, solver)?;
    let options = json!({ "x": x, "method": method });
    Ok(Outcome::ok(to_json(&Certificate::new(
        Kind::Solve,
        text,
        options,
        result,
    ))))
}

fn recognize_result(text: &str) -> Result<(bool, Value)> {
    let t = as_tree(parse_edge_list(text)?)?;
    let order = t.order();
    let (accepted, trace) = decide_membership(&Triple::whole(t));
    Ok((
        accepted,
        json!({ "strongly_equal": accepted, "order": order, "trace": trace }),
    ))
}

pub fn recognize(text: String) -> Result<Outcome> {
    let (accepted, result) = recognize_result(&text)?;
    let cert = Certificate::new(Kind::Recognize, text, json!({}), result);
    Ok(Outcome::verdict(to_json(&cert), accepted))
}

pub fn generate(n: usize, seed: u64) -> Result<Outcome> {
    let sample = random_member(n, seed)?;
    let input = json!({ "n": n, "seed": seed }).to_string();
    let result = json!({
        "base": sample.base,
        "steps": sample.steps,
        "triple": triple_json(&sample.triple),
    });
    Ok(Outcome::ok(to_json(&Certificate::new(
        Kind::Generate,
        input,
        json!({}),
        result,
    ))))
}

pub fn enumerate(max: usize) -> Result<Outcome> {
    let family = enumerate_family(max, DEFAULT_ENUMERATION_CAP)?;
    let members: Vec<Value> = family.iter().map(|(_, tr)| triple_json(tr)).collect();
    Ok(Outcome::ok(json!({
        "max": max,
        "count": members.len(),
        "members": members,
    })))
}

fn gadget_result(text: &str, check: bool, solver: &Solver) -> Result<Value> {
    let f = parse_dimacs(text)?;
    let g = build_gadget(&f);
    let mut result = json!({
        "graph": {
            "order": g.graph.order(),
            "edges": g.graph.edges(),
            "labels": g.graph.labels(),
            "roles": g.roles,
            "edge_list": g.graph.to_edge_list(),
        }
    });
    if check {
        result["report"] = to_json(&verify_gadget(&f, solver)?);
    }
    Ok(result)
}

pub fn gadget(text: String, check: bool, solver: &Solver) -> Result<Outcome> {
    let result = gadget_result(&text, check, solver)?;
    let options = json!({ "verify": check });
    Ok(Outcome::ok(to_json(&Certificate::new(
        Kind::Gadget,
        text,
        options,
        result,
    ))))
}

fn option<'a>(cert: &'a Certificate, key: &str) -> Result<&'a Value> {
    cert.options
        .get(key)
        .ok_or_else(|| anyhow!("certificate options lack `{key}`"))
}

/// `Ok(None)` if the certificate holds, `Ok(Some(reason))` if it does not.
fn check(cert: &Certificate, solver: &Solver) -> Result<Option<String>> {
    if cert.version != SCHEMA_VERSION {
        bail!("unsupported certificate version {}", cert.version);
    }
    if digest(&cert.input) != cert.input_digest {
        return Ok(Some("input digest mismatch".into()));
    }
    let mismatch = |expected: Value| {
        (expected != cert.result).then(|| "recomputed result differs".to_string())
    };
    match cert.kind {
        Kind::Solve => {
            let x = option(cert, "x")?.as_str().context("`x` must be a string")?;
            let method: Method = serde_json::from_value(option(cert, "method")?.clone())?;
            Ok(mismatch(solve_result(&cert.input, x, method, solver)?))
        }
        Kind::Recognize => {
            let t = as_tree(parse_edge_list(&cert.input)?)?;
            let claimed = cert.result["strongly_equal"]
                .as_bool()
                .context("result lacks `strongly_equal`")?;
            let trace: ReductionTrace = serde_json::from_value(cert.result["trace"].clone())
                .context("result lacks a readable trace")?;
            Ok((!check_decision(&Triple::whole(t), claimed, &trace))
                .then(|| "trace does not support the recorded decision".to_string()))
        }
        Kind::Generate => {
            let base = serde_json::from_value(cert.result["base"].clone())
                .context("result lacks `base`")?;
            let steps: Vec<OpStep> = serde_json::from_value(cert.result["steps"].clone())
                .context("result lacks `steps`")?;
            let triple = match replay(base, &steps) {
                Ok(t) => t,
                Err(e) => return Ok(Some(format!("replay failed: {e}"))),
            };
            let params: Value = serde_json::from_str(&cert.input)?;
            if params["n"].as_u64() != Some(triple.order() as u64) {
                return Ok(Some("replayed order differs from the requested order".into()));
            }
            Ok((triple_json(&triple) != cert.result["triple"])
                .then(|| "replayed triple differs".to_string()))
        }
        Kind::Gadget => {
            let with_report = option(cert, "verify")?.as_bool().unwrap_or(false);
            Ok(mismatch(gadget_result(&cert.input, with_report, solver)?))
        }
    }
}

pub fn verify(text: &str, solver: &Solver) -> Result<Outcome> {
    let cert: Certificate = serde_json::from_str(text).context("not a certificate")?;
    let failure = check(&cert, solver)?;
    Ok(Outcome::verdict(
        json!({
            "kind": cert.kind,
            "valid": failure.is_none(),
            "reason": failure,
        }),
        failure.is_none(),
    ))
}
