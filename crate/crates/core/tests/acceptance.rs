//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use flexmeadow::axioms::{catalog, check, check_laws, eval, find_law, Env, Law, Report, Status, Strategy};
use flexmeadow::carrier::{
    sample_rng, FiniteCommon, FiniteInvolutive, GenConfig, MeadowCarrier, RhatCommon,
};
use flexmeadow::carrier::ExternalModel;
use flexmeadow::{Boundary, BoundaryRule, Exp, ExtNum, FieldElem, Neutrix, Quotient, Rational};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn summary(reports: &[Report]) -> (Vec<String>, String) {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {:?}", r.law, r.status))
        .collect();
    let min_eff = reports.iter().map(|r| r.effective_samples).min().unwrap_or(0);
    (bad, format!("{} laws, min effective samples {min_eff}", reports.len()))
}

fn laws(ids: &[&str]) -> Vec<Law> {
    ids.iter()
        .map(|id| find_law(id).unwrap_or_else(|| panic!("no law {id}")))
        .collect()
}

const FLEXIBLE_ACCEPTANCE: [&str; 15] = [
    "FI1", "FI2", "FI3", "FI4", "FI5", "FI6", "FI7", "FI9", "FI10",
    "distrib-corrected", "FIL", "A1", "A2", "N1", "N2",
];

fn c1() -> Outcome {
    let start = Instant::now();
    let reports = check_laws(&ExternalModel::new(), &laws(&FLEXIBLE_ACCEPTANCE), &Strategy::random(10_000, 42));
    let secs = start.elapsed().as_secs_f64();
    let (bad, info) = summary(&reports);
    let fil = reports.iter().find(|r| r.law == "FIL").unwrap();
    let pass = bad.is_empty() && secs < 60.0 && fil.effective_samples >= 100;
    outcome(pass, format!("{info}, {secs:.1}s, failures {bad:?}"))
}

fn v(s: &str) -> ExtNum {
    s.parse().unwrap()
}

fn probe(law: &str) -> (ExtNum, ExtNum) {
    let law = find_law(law).unwrap();
    let flexmeadow::axioms::LawKind::Identity { lhs, rhs } = law.kind else {
        panic!("identity expected")
    };
    let m = ExternalModel::new();
    let env: Env<ExtNum> = vec![
        ("x".into(), v("0 ; L")),
        ("y".into(), v("1")),
        ("z".into(), v("-1")),
    ];
    (eval(&m, &lhs, &env).unwrap(), eval(&m, &rhs, &env).unwrap())
}

fn c2() -> Outcome {
    let r = check(&ExternalModel::new(), &find_law("FI8").unwrap(), &Strategy::random(10_000, 42));
    let found = matches!(r.status, Status::Counterexample(_));
    let (l, rr) = probe("FI8");
    let probe_ok = l == v("0") && rr == v("0 ; L") && l.neutrix().is_zero();
    outcome(
        found && probe_ok,
        format!("counterexample after {} samples: {:?}; probe gives {l} vs {rr}", r.samples, r.status),
    )
}

fn c3() -> Outcome {
    let m = ExternalModel::new();
    let r = check(&m, &find_law("distrib-classical").unwrap(), &Strategy::random(10_000, 42));
    let found = matches!(r.status, Status::Counterexample(_));
    let (l, rr) = probe("distrib-classical");
    let probe_ok = l == v("0") && rr == v("0 ; L");
    let sub = check(&m, &find_law("distrib-sub").unwrap(), &Strategy::random(10_000, 42));
    outcome(
        found && probe_ok && sub.passed(),
        format!(
            "classical fails after {} samples, probe {l} vs {rr}, containment {:?} on {}",
            r.samples, sub.status, sub.samples
        ),
    )
}

fn c4() -> Outcome {
    let m = FiniteInvolutive::new(5).unwrap();
    let start = Instant::now();
    let mut all = catalog("involutive").unwrap();
    all.extend(catalog("flexible").unwrap());
    let reports = check_laws(&m, &all, &Strategy::Exhaustive);
    let secs = start.elapsed().as_secs_f64();
    let (bad, info) = summary(&reports);
    let max = reports.iter().map(|r| r.samples).max().unwrap_or(0);
    outcome(
        bad.is_empty() && secs < 1.0 && max <= 125,
        format!("{info}, at most {max} assignments per law, {secs:.3}s, failures {bad:?}"),
    )
}

fn c5() -> Outcome {
    let m = FiniteCommon::new(3).unwrap();
    let reports = check_laws(&m, &catalog("common").unwrap(), &Strategy::Exhaustive);
    let (bad, info) = summary(&reports);
    let m14 = reports.iter().find(|r| r.law == "M14").unwrap().samples;
    outcome(bad.is_empty() && m14 == 4, format!("{info}, M14 over {m14} assignments, failures {bad:?}"))
}

fn c6() -> Outcome {
    let m = RhatCommon::new();
    let cfg = GenConfig::default();
    let drawn: Vec<ExtNum> = (0..10_000).map(|i| m.sample(&mut sample_rng(7, i), &cfg)).collect();
    let forced = [m.zero(), m.one(), RhatCommon::full()]
        .iter()
        .all(|s| drawn.iter().any(|d| d == s));
    let reports = check_laws(&m, &catalog("common").unwrap(), &Strategy::random(10_000, 7));
    let (bad, info) = summary(&reports);
    outcome(bad.is_empty() && forced, format!("{info}, forced cases drawn {forced}, failures {bad:?}"))
}

fn ext_sample(seed: u64, i: u64) -> ExtNum {
    ExternalModel::new().sample(&mut sample_rng(seed, i), &GenConfig::default())
}

fn nonzero_precise(seed: u64, i: u64) -> FieldElem {
    (0..)
        .map(|k| ext_sample(seed, i * 64 + k).precise().clone())
        .find(|a| !a.is_zero())
        .unwrap()
}

/// A unit `c·(1 + e^4·t)` of valuation zero.
fn unit(rng_seed: u64, i: u64) -> FieldElem {
    let c = nonzero_precise(rng_seed, i);
    let c = FieldElem::from_rational(c.numerator().leading().unwrap().coeff.clone());
    let t = ext_sample(rng_seed + 1, i).precise().clone();
    let bump = &FieldElem::eps_pow(Exp::integer(4)) * &t;
    &c * &(&FieldElem::one() + &bump)
}

fn c7() -> Outcome {
    let mut failures = Vec::new();
    for i in 0..1000 {
        let n = ext_sample(70, i).neutrix().clone();
        let (r, idem) = n.decompose();
        if !idem.is_idempotent() || idem.scale(&r) != n {
            failures.push(format!("decompose {n}"));
        }
    }
    let mut pairs_checked = 0;
    for i in 0..1000 {
        let idem = match i % 4 {
            0 => Neutrix::Zero,
            1 => Neutrix::Full,
            2 => Neutrix::infinitesimal(),
            _ => Neutrix::limited(),
        };
        let r = nonzero_precise(71, i);
        let s = if idem.is_zero() || idem.is_full() {
            nonzero_precise(72, i)
        } else {
            &r * &unit(73, i)
        };
        if idem.scale(&r) != idem.scale(&s) {
            failures.push(format!("pair precondition {r} {s}"));
            continue;
        }
        pairs_checked += 1;
        let ri = idem.scale(&r.inv().unwrap());
        let si = idem.scale(&s.inv().unwrap());
        if ri != si || idem.scale(&r).inv() != ri {
            failures.push(format!("inverse differs for r={r}, s={s}, I={idem}"));
        }
    }
    outcome(
        failures.is_empty() && pairs_checked == 1000,
        format!("1000 decompositions, {pairs_checked} pairs, failures {:?}", &failures[..failures.len().min(3)]),
    )
}

fn c8() -> Outcome {
    let m = ExternalModel::new();
    let forced: Vec<ExtNum> = [
        "0", "0 ; o", "0 ; L", "0 ; full", "0 ; cut(1,closed)", "0 ; cut(-2,open)", "0 ; cut(1/3,closed)",
        "0 ; cut(-5/2,open)",
    ]
    .iter()
    .map(|s| v(s))
    .collect();
    let mut failures = Vec::new();
    let mut neutrix_cases = 0;
    for i in 0..10_000u64 {
        let x = if i % 10 == 0 {
            forced[(i / 10) as usize % forced.len()].clone()
        } else {
            ext_sample(8, i)
        };
        if x.is_neutrix() {
            neutrix_cases += 1;
        }
        let xi = m.inv(&x).unwrap();
        let back = m.inv(&xi).unwrap();
        let reg = m.mul(&x, &m.mul(&x, &xi).unwrap()).unwrap();
        if back != x || reg != x {
            failures.push(x.to_string());
        }
    }
    outcome(
        failures.is_empty(),
        format!("10000 values, {neutrix_cases} neutrices, failures {:?}", &failures[..failures.len().min(3)]),
    )
}

/// `x·B ⊆ A`, with `x·N(B)` formed as the product of the principal cut
/// `{y : v(y) >= v(x)}` with `N(B)` under `rule`.
fn product_inside(x: &FieldElem, b: &ExtNum, a: &ExtNum, rule: BoundaryRule) -> bool {
    let spread = match x.valuation().finite() {
        None => Neutrix::Zero,
        Some(q) => Neutrix::cut(q.clone(), Boundary::Closed).mul_with(b.neutrix(), rule),
    };
    ExtNum::new(x * b.precise(), spread).is_subset(a)
}

/// Membership probes against the quotient. Returns (probes, mismatches,
/// probes per case).
fn membership(rule: BoundaryRule) -> (usize, Vec<String>, [usize; 5]) {
    let mut probes = 0;
    let mut wrong = Vec::new();
    let mut cases = [0usize; 5];
    let mut k = 0u64;
    while probes < 1000 {
        let (a, b) = quotient_case(k);
        let q = a.quotient(&b);
        for x in candidates(&q, &a, &b, k) {
            if probes == 1000 {
                break;
            }
            probes += 1;
            cases[(k % 5) as usize] += 1;
            let direct = (&ExtNum::exact(x.clone()) * &b).is_subset(&a);
            let via_rule = product_inside(&x, &b, &a, rule);
            if q.contains(&x) != via_rule || (rule == BoundaryRule::BothClosed && direct != via_rule) {
                wrong.push(format!("x={x} in {a} / {b} = {q}"));
            }
        }
        k += 1;
    }
    (probes, wrong, cases)
}

/// Dividend and divisor for each quotient case in turn.
fn quotient_case(i: u64) -> (ExtNum, ExtNum) {
    let a = ext_sample(90, i);
    let b = ext_sample(91, i);
    match i % 5 {
        0 | 1 => {
            let b = if b.is_zeroless() { b } else { ExtNum::new(nonzero_precise(92, i), b.neutrix().clone()) };
            let b = if b.is_zeroless() { b } else { ExtNum::exact(nonzero_precise(92, i)) };
            (a, b)
        }
        2 => (a, b.neutrix_part()),
        3 => (a.neutrix_part(), b.neutrix_part()),
        _ => (a, ExtNum::zero()),
    }
}

fn candidates(q: &Quotient, a: &ExtNum, b: &ExtNum, i: u64) -> Vec<FieldElem> {
    let mut xs = vec![ext_sample(93, i).precise().clone(), FieldElem::zero()];
    if let Ok(binv) = b.precise().inv() {
        xs.push(a.precise() * &binv);
    }
    if let Some(set) = q.as_set() {
        let c = set.precise().clone();
        xs.push(c.clone());
        if let Neutrix::Cut { at, .. } = set.neutrix() {
            for d in [Rational::new(0.into(), 1.into()), Rational::new(1.into(), 6.into()), Rational::new((-1).into(), 6.into())] {
                let m = FieldElem::eps_pow(Exp::new(at.value() + &d));
                xs.push(&c + &m);
            }
        }
    }
    xs
}

fn c9() -> Outcome {
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    let mut i = 0u64;
    while pairs < 1000 {
        let (a, b) = quotient_case(i);
        i += 1;
        if !b.is_zeroless() {
            continue;
        }
        pairs += 1;
        let q = a.quotient(&b);
        let product = &a * &b.inv();
        if q != Quotient::Set(product.clone()) {
            mismatches.push(format!("{a} / {b}: {q} vs {product}"));
        }
    }
    let (probes, wrong, cases) = membership(BoundaryRule::BothClosed);
    let empty_case = v("1").quotient(&v("0 ; o")) == Quotient::Empty;
    let pass = mismatches.is_empty() && wrong.is_empty() && empty_case;
    outcome(
        pass,
        format!(
            "quotient = A*B^-1 on {} of 1000 zeroless pairs (e.g. {:?}); membership wrong on {} of {probes} probes, per case {cases:?}; 1/o empty {empty_case}",
            1000 - mismatches.len(),
            mismatches.first(),
            wrong.len(),
        ),
    )
}

fn c10() -> Outcome {
    let reports = check_laws(&ExternalModel::new(), &catalog("derived").unwrap(), &Strategy::random(10_000, 42));
    let (bad, info) = summary(&reports);
    outcome(bad.is_empty(), format!("{info}, failures {bad:?}"))
}

fn c11() -> Outcome {
    let broken = ExternalModel::with_rule(BoundaryRule::EitherClosed);
    let mut ids: Vec<&str> = FLEXIBLE_ACCEPTANCE.to_vec();
    ids.extend(["distrib-sub", "vN-regular-mul"]);
    let mut all = laws(&ids);
    all.extend(catalog("derived").unwrap());
    let reports = check_laws(&broken, &all, &Strategy::random(10_000, 42));
    let mut caught: Vec<String> = reports
        .iter()
        .filter(|r| matches!(r.status, Status::Counterexample(_)))
        .map(|r| format!("{}@{}", r.law, r.samples))
        .collect();
    let (probes, wrong, _) = membership(BoundaryRule::EitherClosed);
    if !wrong.is_empty() {
        caught.push(format!("quotient membership ({} of {probes} probes)", wrong.len()));
    }
    outcome(!caught.is_empty(), format!("broken product caught by {caught:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("flexible involutive axioms on external numbers", c1),
        ("printed FI8 has a counterexample", c2),
        ("classical distributivity fails, containment holds", c3),
        ("finite involutive model ffp:5", c4),
        ("finite common model ffp-common:3", c5),
        ("rhat common model", c6),
        ("decomposition and inverse well defined", c7),
        ("inverse involution and regularity", c8),
        ("quotient consistency", c9),
        ("derived laws", c10),
        ("mutation sanity", c11),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {tag} {name} ({:.2}s): {}", n + 1, start.elapsed().as_secs_f64(), o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
