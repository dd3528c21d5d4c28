use std::collections::BTreeMap;

use flexmeadow::axioms::{Report, Status};
use serde::Serialize;

#[derive(Serialize)]
pub struct JsonCounterexample {
    pub bindings: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize)]
pub struct JsonResult {
    pub law: String,
    pub catalog: String,
    pub status: &'static str,
    pub samples: u64,
    pub effective_samples: u64,
    pub counterexample: Option<JsonCounterexample>,
}

#[derive(Serialize)]
pub struct JsonReport {
    pub model: String,
    pub results: Vec<JsonResult>,
    pub seed: u64,
    pub timestamp: String,
}

impl From<&Report> for JsonResult {
    fn from(r: &Report) -> Self {
        let (status, counterexample) = match &r.status {
            Status::Pass => ("pass", None),
            Status::Counterexample(c) => (
                "fail",
                Some(JsonCounterexample {
                    bindings: c.bindings.iter().cloned().collect(),
                    lhs: c.lhs.clone(),
                    rhs: c.rhs.clone(),
                }),
            ),
            Status::Error(_) => ("error", None),
        };
        JsonResult {
            law: r.law.clone(),
            catalog: r.catalog.clone(),
            status,
            samples: r.samples,
            effective_samples: r.effective_samples,
            counterexample,
        }
    }
}

/// One human-readable line per report.
pub fn text_line(r: &Report) -> String {
    let counts = format!("{} samples, {} effective", r.samples, r.effective_samples);
    match &r.status {
        Status::Pass => format!("PASS  {:<18} {:<24} ({counts})", r.law, r.catalog),
        Status::Counterexample(c) => {
            let binds: Vec<String> = c.bindings.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            format!(
                "FAIL  {:<18} {:<24} ({counts})\n      at {}\n      lhs {}\n      rhs {}",
                r.law,
                r.catalog,
                binds.join(", "),
                c.lhs,
                c.rhs
            )
        }
        Status::Error(e) => format!("ERROR {:<18} {:<24} ({counts}): {e}", r.law, r.catalog),
    }
}
