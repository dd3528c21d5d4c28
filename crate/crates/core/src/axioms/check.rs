use thiserror::Error;

use super::catalog::{catalog, UnknownCatalog};
use super::eval::{eval, Env, EvalError};
use super::law::{Builtin, Guard, Law, LawKind};
use super::term::Term;
use crate::carrier::{sample_rng, CarrierError, GenConfig, MeadowCarrier, ModelId};

/// A guarded law only passes a random run if at least this many samples
/// satisfied its guard.
pub const MIN_EFFECTIVE_SAMPLES: u64 = 100;

#[derive(Debug, Clone, PartialEq)]
pub enum Strategy {
    Random { samples: u64, seed: u64, gen: GenConfig },
    /// Every assignment of the drawn variables over a finite carrier.
    Exhaustive,
}

impl Strategy {
    pub fn random(samples: u64, seed: u64) -> Strategy {
        Strategy::Random {
            samples,
            seed,
            gen: GenConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Drawn variables followed by witnesses, as printed values.
    pub bindings: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("only {effective} samples satisfied the guard, {required} required")]
    InsufficientSamples { effective: u64, required: u64 },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("model {0} is not finite and cannot be checked exhaustively")]
    NotEnumerable(ModelId),
    #[error("model {0} has no set inclusion")]
    InclusionUnsupported(ModelId),
}

impl From<CarrierError> for CheckError {
    fn from(e: CarrierError) -> Self {
        CheckError::Eval(EvalError::Carrier(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Counterexample(Counterexample),
    Error(CheckError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub model: ModelId,
    pub law: String,
    pub catalog: String,
    pub strategy: Strategy,
    /// Assignments tried, up to and including a failing one.
    pub samples: u64,
    /// Tried assignments that satisfied the guard.
    pub effective_samples: u64,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

enum Outcome {
    Skipped,
    Holds,
    Fails { lhs: String, rhs: String },
}

enum Stop {
    Fail(Counterexample),
    Error(CheckError),
}

#[derive(Default)]
struct Tally {
    tried: u64,
    effective: u64,
    stop: Option<Stop>,
}

fn both<M: MeadowCarrier>(
    m: &M,
    lhs: &Term,
    rhs: &Term,
    env: &Env<M::Value>,
) -> Result<(M::Value, M::Value), CheckError> {
    Ok((eval(m, lhs, env)?, eval(m, rhs, env)?))
}

fn compare<M: MeadowCarrier>(m: &M, lhs: &Term, rhs: &Term, env: &Env<M::Value>) -> Result<Outcome, CheckError> {
    let (l, r) = both(m, lhs, rhs, env)?;
    Ok(if m.eq(&l, &r) {
        Outcome::Holds
    } else {
        Outcome::Fails {
            lhs: m.format(&l),
            rhs: m.format(&r),
        }
    })
}

fn judge<M: MeadowCarrier>(m: &M, law: &Law, env: &mut Env<M::Value>) -> Result<Outcome, CheckError> {
    for (w, t) in &law.witnesses {
        let v = eval(m, t, env)?;
        env.push((w.clone(), v));
    }
    let var = |v: &str| eval(m, &Term::var(v), env);
    match &law.kind {
        LawKind::Identity { lhs, rhs } => compare(m, lhs, rhs, env),
        LawKind::Conditional { guard, lhs, rhs } => {
            let open = match guard {
                Guard::Zeroless(v) => m.is_zeroless(&var(v)?)?,
                Guard::Nonzero(v) => !m.eq(&var(v)?, &m.zero()),
                Guard::Equal(a, b) => {
                    let (a, b) = both(m, a, b, env)?;
                    m.eq(&a, &b)
                }
            };
            if open {
                compare(m, lhs, rhs, env)
            } else {
                Ok(Outcome::Skipped)
            }
        }
        LawKind::Disjunction(eqs) => {
            let mut ls = Vec::new();
            let mut rs = Vec::new();
            for (lhs, rhs) in eqs {
                let (l, r) = both(m, lhs, rhs, env)?;
                if m.eq(&l, &r) {
                    return Ok(Outcome::Holds);
                }
                ls.push(m.format(&l));
                rs.push(m.format(&r));
            }
            Ok(Outcome::Fails {
                lhs: ls.join(" | "),
                rhs: rs.join(" | "),
            })
        }
        LawKind::Inclusion { sub, sup } => {
            let (l, r) = both(m, sub, sup, env)?;
            match m.subset(&l, &r) {
                None => Err(CheckError::InclusionUnsupported(m.id())),
                Some(true) => Ok(Outcome::Holds),
                Some(false) => Ok(Outcome::Fails {
                    lhs: m.format(&l),
                    rhs: m.format(&r),
                }),
            }
        }
        LawKind::Builtin(Builtin::FlexibleInverse) => {
            let x = var("x")?;
            if !m.is_zeroless(&x)? {
                return Ok(Outcome::Skipped);
            }
            if m.flexible_inverse(&x)? {
                return Ok(Outcome::Holds);
            }
            let z = m.mul(&x, &m.inv(&x)?)?;
            let target = m.add(&m.one(), &m.nfun(&z)?)?;
            Ok(Outcome::Fails {
                lhs: m.format(&z),
                rhs: m.format(&target),
            })
        }
    }
}

fn scan_range<M, F>(m: &M, law: &Law, lo: u64, hi: u64, env_of: &F) -> Tally
where
    M: MeadowCarrier,
    F: Fn(u64) -> Env<M::Value> + Sync,
{
    let mut t = Tally::default();
    for i in lo..hi {
        t.tried += 1;
        let mut env = env_of(i);
        match judge(m, law, &mut env) {
            Ok(Outcome::Skipped) => {}
            Ok(Outcome::Holds) => t.effective += 1,
            Ok(Outcome::Fails { lhs, rhs }) => {
                t.effective += 1;
                let bindings = env.iter().map(|(n, v)| (n.clone(), m.format(v))).collect();
                t.stop = Some(Stop::Fail(Counterexample { bindings, lhs, rhs }));
                break;
            }
            Err(e) => {
                t.stop = Some(Stop::Error(e));
                break;
            }
        }
    }
    t
}

const CHUNK: u64 = 256;
const WAVE: u64 = 32;

/// Runs indices `0..total` in waves of chunks and stops at the failure with
/// the lowest index. The result does not depend on scheduling.
fn scan<M, F>(m: &M, law: &Law, total: u64, env_of: F) -> Tally
where
    M: MeadowCarrier,
    F: Fn(u64) -> Env<M::Value> + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    let run = |c: u64| scan_range(m, law, c * CHUNK, ((c + 1) * CHUNK).min(total), &env_of);
    let mut acc = Tally::default();
    let mut c = 0;
    while c < chunks {
        let hi = (c + WAVE).min(chunks);
        #[cfg(feature = "parallel")]
        let tallies: Vec<Tally> = {
            use rayon::prelude::*;
            (c..hi).into_par_iter().map(run).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let tallies: Vec<Tally> = (c..hi).map(run).collect();
        for t in tallies {
            acc.tried += t.tried;
            acc.effective += t.effective;
            if t.stop.is_some() {
                acc.stop = t.stop;
                return acc;
            }
        }
        c = hi;
    }
    acc
}

/// Checks one law in one model.
pub fn check<M: MeadowCarrier>(m: &M, law: &Law, strategy: &Strategy) -> Report {
    let report = |samples, effective_samples, status| Report {
        model: m.id(),
        law: law.id.clone(),
        catalog: law.catalog.clone(),
        strategy: strategy.clone(),
        samples,
        effective_samples,
        status,
    };
    let tally = match strategy {
        Strategy::Random { samples, seed, gen } => scan(m, law, *samples, |i| {
            let mut rng = sample_rng(*seed, i);
            law.vars.iter().map(|v| (v.clone(), m.sample(&mut rng, gen))).collect()
        }),
        Strategy::Exhaustive => {
            let Some(all) = m.enumerate() else {
                return report(0, 0, Status::Error(CheckError::NotEnumerable(m.id())));
            };
            let k = law.vars.len() as u32;
            let n = all.len() as u64;
            scan(m, law, n.pow(k), |mut i| {
                let mut digits = vec![0; law.vars.len()];
                for d in digits.iter_mut().rev() {
                    *d = (i % n) as usize;
                    i /= n;
                }
                law.vars
                    .iter()
                    .zip(digits)
                    .map(|(v, d)| (v.clone(), all[d].clone()))
                    .collect()
            })
        }
    };
    let status = match tally.stop {
        Some(Stop::Fail(c)) => Status::Counterexample(c),
        Some(Stop::Error(e)) => Status::Error(e),
        None => {
            let random = matches!(strategy, Strategy::Random { .. });
            if random && law.is_guarded() && tally.effective < MIN_EFFECTIVE_SAMPLES {
                Status::Error(CheckError::InsufficientSamples {
                    effective: tally.effective,
                    required: MIN_EFFECTIVE_SAMPLES,
                })
            } else {
                Status::Pass
            }
        }
    };
    report(tally.tried, tally.effective, status)
}

pub fn check_laws<M: MeadowCarrier>(m: &M, laws: &[Law], strategy: &Strategy) -> Vec<Report> {
    laws.iter().map(|l| check(m, l, strategy)).collect()
}

/// Checks every law of the named catalogs, in catalog order. Repeated
/// names are checked once.
pub fn check_suite<M: MeadowCarrier>(
    m: &M,
    catalogs: &[&str],
    strategy: &Strategy,
) -> Result<Vec<Report>, UnknownCatalog> {
    let mut names: Vec<&str> = Vec::new();
    for c in catalogs {
        if !names.contains(c) {
            names.push(c);
        }
    }
    let mut laws = Vec::new();
    for c in names {
        laws.extend(catalog(c)?);
    }
    Ok(check_laws(m, &laws, strategy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::catalog::find_law;
    use crate::axioms::law::parse_law;
    use crate::carrier::{ExternalModel, FiniteCommon, FiniteInvolutive, RationalInvolutive};

    #[test]
    fn exhaustive_counts_assignments() {
        let m = FiniteCommon::new(3).unwrap();
        let r = check(&m, &find_law("M14").unwrap(), &Strategy::Exhaustive);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.samples, 4);
        let f = FiniteInvolutive::new(5).unwrap();
        let r = check(&f, &find_law("I1").unwrap(), &Strategy::Exhaustive);
        assert_eq!((r.samples, r.status), (125, Status::Pass));
    }

    #[test]
    fn exhaustive_needs_a_finite_model() {
        let r = check(&RationalInvolutive::new(), &find_law("I1").unwrap(), &Strategy::Exhaustive);
        assert!(matches!(r.status, Status::Error(CheckError::NotEnumerable(_))));
    }

    #[test]
    fn finds_the_field_inverse_failure() {
        let law = parse_law("inv : x*x^-1 = 1", "file").unwrap();
        let f = FiniteInvolutive::new(5).unwrap();
        let r = check(&f, &law, &Strategy::Exhaustive);
        match r.status {
            Status::Counterexample(c) => {
                assert_eq!(c.bindings, vec![("x".to_string(), "0".to_string())]);
                assert_eq!((c.lhs.as_str(), c.rhs.as_str()), ("0", "1"));
            }
            s => panic!("{s:?}"),
        }
        assert_eq!(r.samples, 1);
    }

    #[test]
    fn guard_filters_samples() {
        let law = parse_law("inv : nonzero(x) => x*x^-1 = 1", "file").unwrap();
        let f = FiniteInvolutive::new(5).unwrap();
        let r = check(&f, &law, &Strategy::Exhaustive);
        assert_eq!((r.samples, r.effective_samples, r.status), (5, 4, Status::Pass));
    }

    #[test]
    fn too_few_guarded_samples_is_an_error() {
        let law = parse_law("inv : nonzero(x) => x*x^-1 = 1", "file").unwrap();
        let r = check(&RationalInvolutive::new(), &law, &Strategy::random(50, 0));
        assert!(matches!(
            r.status,
            Status::Error(CheckError::InsufficientSamples { required: 100, .. })
        ));
    }

    #[test]
    fn err_in_an_involutive_model() {
        let r = check(&RationalInvolutive::new(), &find_law("M14").unwrap(), &Strategy::random(10, 0));
        assert!(matches!(r.status, Status::Error(CheckError::Eval(EvalError::ErrUnsupported(_)))));
    }

    #[test]
    fn inclusion_needs_sets() {
        let r = check(
            &RationalInvolutive::new(),
            &find_law("distrib-sub").unwrap(),
            &Strategy::random(10, 0),
        );
        assert!(matches!(r.status, Status::Error(CheckError::InclusionUnsupported(_))));
    }

    #[test]
    fn random_runs_are_deterministic() {
        let m = ExternalModel::new();
        let law = find_law("distrib-classical").unwrap();
        let a = check(&m, &law, &Strategy::random(10_000, 5));
        let b = check(&m, &law, &Strategy::random(10_000, 5));
        assert_eq!(a, b);
        assert!(matches!(a.status, Status::Counterexample(_)));
    }

    #[test]
    fn suites_keep_catalog_order() {
        let f = FiniteInvolutive::new(3).unwrap();
        let rs = check_suite(&f, &["involutive", "flexible", "involutive"], &Strategy::Exhaustive).unwrap();
        assert_eq!(rs.len(), 20);
        assert_eq!(rs[0].law, "I1");
        assert_eq!(rs[10].law, "FI1");
        assert!(rs.iter().all(Report::passed));
        assert!(check_suite(&f, &["bogus"], &Strategy::Exhaustive).is_err());
    }
}
