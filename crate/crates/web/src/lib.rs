//! Browser bindings. Every export returns a JSON string; the plain Rust
//! functions underneath are what the native tests exercise.

use flexmeadow::axioms::{eval, parse_term, Env};
use flexmeadow::carrier::{visit_model, MeadowCarrier, ModelId, ModelVisitor};
use flexmeadow::{Boundary, ExtNum, Neutrix, Quotient};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize, Debug, PartialEq)]
pub struct Evaluated {
    pub value: String,
}

/// A neutrix laid out for drawing on a valuation axis.
#[derive(Serialize, Debug, PartialEq)]
pub struct NeutrixInfo {
    pub display: String,
    /// "zero", "cut" or "full".
    pub kind: &'static str,
    /// Cut exponent as `n` or `n/d`.
    pub at: Option<String>,
    pub closed: bool,
    pub r: String,
    pub idempotent_part: String,
    pub idempotent: bool,
    pub inverse: String,
}

#[derive(Serialize, Debug, PartialEq)]
pub struct QuotientInfo {
    pub empty: bool,
    pub value: String,
    /// The quotient as a neutrix, for the axis view.
    pub neutrix: Option<NeutrixInfo>,
    pub precise: Option<String>,
}

struct EvalIn<'a> {
    term: &'a str,
    binds: &'a str,
}

impl ModelVisitor for EvalIn<'_> {
    type Output = Result<String, String>;
    fn visit<M: MeadowCarrier>(self, model: &M) -> Result<String, String> {
        let term = parse_term(self.term).map_err(|e| format!("term: {e}"))?;
        let mut env: Env<M::Value> = Env::new();
        for line in self.binds.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (name, lit) = line
                .split_once('=')
                .ok_or_else(|| format!("binding '{line}' is not name=value"))?;
            let v = model.parse(lit).map_err(|e| format!("{}: {e}", name.trim()))?;
            env.push((name.trim().to_string(), v));
        }
        let v = eval(model, &term, &env).map_err(|e| e.to_string())?;
        Ok(model.format(&v))
    }
}

/// Evaluates `term` in `model`; `binds` holds one `name=literal` per line.
pub fn evaluate_in(model: &str, term: &str, binds: &str) -> Result<Evaluated, String> {
    let id: ModelId = model.parse().map_err(|e| format!("{e}"))?;
    let value = visit_model(id, EvalIn { term, binds }).map_err(|e| e.to_string())??;
    Ok(Evaluated { value })
}

pub fn describe_neutrix(n: &Neutrix) -> NeutrixInfo {
    let (r, i) = n.decompose();
    let (kind, at, closed) = match n {
        Neutrix::Zero => ("zero", None, true),
        Neutrix::Full => ("full", None, false),
        Neutrix::Cut { at, boundary } => ("cut", Some(at.to_string()), *boundary == Boundary::Closed),
    };
    NeutrixInfo {
        display: n.to_string(),
        kind,
        at,
        closed,
        r: r.to_string(),
        idempotent_part: i.to_string(),
        idempotent: n.is_idempotent(),
        inverse: n.inv().to_string(),
    }
}

pub fn neutrix_info_of(src: &str) -> Result<NeutrixInfo, String> {
    let n: Neutrix = src.parse().map_err(|e| format!("{e}"))?;
    Ok(describe_neutrix(&n))
}

pub fn quotient_of(a: &str, b: &str) -> Result<QuotientInfo, String> {
    let a: ExtNum = a.parse().map_err(|e| format!("dividend: {e}"))?;
    let b: ExtNum = b.parse().map_err(|e| format!("divisor: {e}"))?;
    let q = a.quotient(&b);
    Ok(match &q {
        Quotient::Empty => QuotientInfo {
            empty: true,
            value: q.to_string(),
            neutrix: None,
            precise: None,
        },
        Quotient::Set(x) => QuotientInfo {
            empty: false,
            value: q.to_string(),
            neutrix: Some(describe_neutrix(x.neutrix())),
            precise: Some(x.precise().to_string()),
        },
    })
}

fn to_json<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn evaluate(model: &str, term: &str, binds: &str) -> Result<String, JsError> {
    to_json(evaluate_in(model, term, binds))
}

#[wasm_bindgen]
pub fn neutrix_info(src: &str) -> Result<String, JsError> {
    to_json(neutrix_info_of(src))
}

#[wasm_bindgen]
pub fn quotient(a: &str, b: &str) -> Result<String, JsError> {
    to_json(quotient_of(a, b))
}
