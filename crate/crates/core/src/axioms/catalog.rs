use thiserror::Error;

use super::law::{Builtin, Guard, Law, LawKind};
use super::term::Term;
use crate::carrier::ModelId;

pub const CATALOGS: [&str; 8] = [
    "involutive",
    "common",
    "flexible",
    "arithmetical",
    "neutrix-extra",
    "derived",
    "regularity",
    "distributivity-variants",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog '{0}' (known: {known})", known = CATALOGS.join(", "))]
pub struct UnknownCatalog(pub String);

fn t(s: &str) -> Term {
    s.parse().unwrap_or_else(|e| panic!("bad built-in term '{s}': {e}"))
}

fn eq(id: &str, cat: &str, lhs: &str, rhs: &str) -> Law {
    Law::new(id, cat, LawKind::Identity { lhs: t(lhs), rhs: t(rhs) })
}

fn involutive() -> Vec<Law> {
    let c = "involutive";
    vec![
        eq("I1", c, "(x + y) + z", "x + (y + z)"),
        eq("I2", c, "x + y", "y + x"),
        eq("I3", c, "x + 0", "x"),
        eq("I4", c, "x + (-x)", "0"),
        eq("I5", c, "(x*y)*z", "x*(y*z)"),
        eq("I6", c, "x*y", "y*x"),
        eq("I7", c, "1*x", "x"),
        eq("I8", c, "x*(y + z)", "x*y + x*z"),
        eq("I9", c, "(x^-1)^-1", "x"),
        eq("I10", c, "x*(x*x^-1)", "x"),
    ]
}

fn common() -> Vec<Law> {
    let c = "common";
    vec![
        eq("M1", c, "(x + y) + z", "x + (y + z)"),
        eq("M2", c, "x + y", "y + x"),
        eq("M3", c, "x + 0", "x"),
        eq("M4", c, "x + (-x)", "0*x"),
        eq("M5", c, "(x*y)*z", "x*(y*z)"),
        eq("M6", c, "x*y", "y*x"),
        eq("M7", c, "1*x", "x"),
        eq("M8", c, "x*(y + z)", "x*y + x*z"),
        eq("M9", c, "-(-x)", "x"),
        eq("M10", c, "x*x^-1", "1 + 0*x^-1"),
        eq("M11", c, "(x*y)^-1", "x^-1*y^-1"),
        eq("M12", c, "(1 + 0*x)^-1", "1 + 0*x"),
        eq("M13", c, "0^-1", "err"),
        eq("M14", c, "x + err", "err"),
    ]
}

fn flexible() -> Vec<Law> {
    let c = "flexible";
    vec![
        eq("FI1", c, "(x + y) + z", "x + (y + z)"),
        eq("FI2", c, "x + y", "y + x"),
        eq("FI3", c, "x + N(x)", "x"),
        eq("FI4", c, "x + (-x)", "N(x)"),
        eq("FI5", c, "(x*y)*z", "x*(y*z)"),
        eq("FI6", c, "x*y", "y*x"),
        eq("FI7", c, "(1 + N(x)*x^-1)*x", "x"),
        eq("FI8", c, "x*(y + z)", "x*y + x*z + N(x)*y + N(x)*z"),
        eq("FI9", c, "(x^-1)^-1", "x"),
        eq("FI10", c, "x*(x*x^-1)", "x"),
    ]
}

fn arithmetical() -> Vec<Law> {
    let c = "arithmetical";
    vec![
        eq("A1", c, "x + (-x)", "N(x)"),
        eq("A2", c, "x + N(x)", "x"),
        Law::new("FIL", c, LawKind::Builtin(Builtin::FlexibleInverse)),
    ]
}

fn neutrix_extra() -> Vec<Law> {
    let c = "neutrix-extra";
    vec![
        Law::new(
            "N1",
            c,
            LawKind::Disjunction(vec![(t("N(x + y)"), t("N(x)")), (t("N(x + y)"), t("N(y)"))]),
        ),
        eq("N2", c, "N(-x)", "N(x)"),
    ]
}

fn derived() -> Vec<Law> {
    let c = "derived";
    // Drawing z independently almost never satisfies x + y = x + z, so z
    // is built from y by adding a multiple of N(x).
    let shift = || vec![("z".to_string(), t("y + N(x)*w"))];
    vec![
        Law::with_witnesses(
            "cancel-fwd",
            c,
            LawKind::Conditional {
                guard: Guard::Equal(t("x + y"), t("x + z")),
                lhs: t("N(x) + y"),
                rhs: t("N(x) + z"),
            },
            shift(),
        ),
        Law::with_witnesses(
            "cancel-bwd",
            c,
            LawKind::Conditional {
                guard: Guard::Equal(t("N(x) + y"), t("N(x) + z")),
                lhs: t("x + y"),
                rhs: t("x + z"),
            },
            shift(),
        ),
        eq("N-sum-idempotent", c, "N(x) + N(x)", "N(x)"),
        eq("N-additive", c, "N(x + y)", "N(x) + N(y)"),
        eq("N-idempotent", c, "N(N(x))", "N(x)"),
        Law::with_witnesses(
            "N-fixed",
            c,
            LawKind::Conditional {
                guard: Guard::Equal(t("x"), t("N(y)")),
                lhs: t("x"),
                rhs: t("N(x)"),
            },
            vec![("x".to_string(), t("N(y)"))],
        ),
        eq("neg-involution", c, "-(-x)", "x"),
        eq("neg-sum", c, "-(x + y)", "-x - y"),
        eq("N-neg", c, "N(x)", "-N(x)"),
    ]
}

fn regularity() -> Vec<Law> {
    let c = "regularity";
    let law = |id: &str, lhs: &str, witness: &str| {
        Law::with_witnesses(
            id,
            c,
            LawKind::Identity { lhs: t(lhs), rhs: t("x") },
            vec![("y".to_string(), t(witness))],
        )
    };
    vec![
        law("vN-regular-mul", "x*x*y", "x^-1"),
        law("vN-regular-add", "x + x + y", "-x"),
    ]
}

fn distributivity_variants() -> Vec<Law> {
    let c = "distributivity-variants";
    vec![
        eq("distrib-printed", c, "x*(y + z)", "x*y + x*z + N(x)*y + N(x)*z"),
        eq("distrib-corrected", c, "x*(y + z) + N(x)*y + N(x)*z", "x*y + x*z"),
        eq("distrib-classical", c, "x*(y + z)", "x*y + x*z"),
        Law::new(
            "distrib-sub",
            c,
            LawKind::Inclusion {
                sub: t("x*(y + z)"),
                sup: t("x*y + x*z"),
            },
        ),
    ]
}

pub fn catalog(name: &str) -> Result<Vec<Law>, UnknownCatalog> {
    Ok(match name {
        "involutive" => involutive(),
        "common" => common(),
        "flexible" => flexible(),
        "arithmetical" => arithmetical(),
        "neutrix-extra" => neutrix_extra(),
        "derived" => derived(),
        "regularity" => regularity(),
        "distributivity-variants" => distributivity_variants(),
        _ => return Err(UnknownCatalog(name.to_string())),
    })
}

/// The axiom set a model is meant to satisfy.
pub fn default_catalogs(model: ModelId) -> Vec<&'static str> {
    match model {
        ModelId::External => vec!["flexible"],
        ModelId::FfpInvolutive(_) | ModelId::RatInvolutive => vec!["involutive"],
        ModelId::FfpCommon(_) | ModelId::RhatCommon => vec!["common"],
    }
}

/// Looks a law up by id across all catalogs.
pub fn find_law(id: &str) -> Option<Law> {
    CATALOGS
        .iter()
        .flat_map(|c| catalog(c).expect("known catalog"))
        .find(|l| l.id == id)
}
