use rand::Rng;

use super::{CarrierError, GenConfig, MeadowCarrier, ModelId, SampleRng};
use crate::external::ExtNum;
use crate::neutrix::{Boundary, BoundaryRule, Neutrix};
use crate::valcore::{Exp, FieldElem, Monomial, PSeries, Rational};

/// The external numbers with the total inverse and `N(x)` the neutrix part.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExternalModel {
    rule: BoundaryRule,
}

impl ExternalModel {
    pub fn new() -> Self {
        ExternalModel::default()
    }

    /// A model whose neutrix products follow `rule`. Anything other than the
    /// default is a deliberately broken model for fault injection.
    pub fn with_rule(rule: BoundaryRule) -> Self {
        ExternalModel { rule }
    }

    pub fn rule(&self) -> BoundaryRule {
        self.rule
    }
}

fn small_exp(rng: &mut SampleRng, cfg: &GenConfig) -> Exp {
    let n = rng.random_range(-cfg.max_exp_num..=cfg.max_exp_num);
    let d = rng.random_range(1..=cfg.max_den.max(1));
    Exp::ratio(n, d)
}

fn small_coeff(rng: &mut SampleRng, cfg: &GenConfig) -> Rational {
    let n = rng.random_range(-cfg.coeff_bound..=cfg.coeff_bound);
    let d = rng.random_range(1..=cfg.max_den.max(1));
    Rational::new(n.into(), d.into())
}

/// A random precise part: a sum of up to `max_terms` small monomials.
pub(crate) fn sample_field(rng: &mut SampleRng, cfg: &GenConfig) -> FieldElem {
    let count = rng.random_range(1..=cfg.max_terms.max(1));
    let terms: Vec<Monomial> = (0..count)
        .map(|_| {
            let c = small_coeff(rng, cfg);
            Monomial::new(c, small_exp(rng, cfg))
        })
        .collect();
    FieldElem::from_series(PSeries::from_terms(terms))
}

/// Neutrix kind uniform over zero, full and a cut at a small exponent.
pub(crate) fn sample_neutrix(rng: &mut SampleRng, cfg: &GenConfig) -> Neutrix {
    match rng.random_range(0..3) {
        0 => Neutrix::Zero,
        1 => Neutrix::Full,
        _ => {
            let boundary = if rng.random_bool(0.5) {
                Boundary::Open
            } else {
                Boundary::Closed
            };
            Neutrix::cut(small_exp(rng, cfg), boundary)
        }
    }
}

/// `0`, `1`, the infinitesimals, the limited numbers and the whole field.
pub fn external_specials() -> [ExtNum; 5] {
    [
        ExtNum::zero(),
        ExtNum::one(),
        ExtNum::from_neutrix(Neutrix::infinitesimal()),
        ExtNum::from_neutrix(Neutrix::limited()),
        ExtNum::from_neutrix(Neutrix::Full),
    ]
}

pub(crate) fn sample_ext(rng: &mut SampleRng, cfg: &GenConfig) -> ExtNum {
    if rng.random_bool(cfg.special_rate.clamp(0.0, 1.0)) {
        let specials = external_specials();
        let i = rng.random_range(0..specials.len());
        return specials[i].clone();
    }
    let a = sample_field(rng, cfg);
    ExtNum::new(a, sample_neutrix(rng, cfg))
}

impl MeadowCarrier for ExternalModel {
    type Value = ExtNum;

    fn id(&self) -> ModelId {
        ModelId::External
    }

    fn zero(&self) -> ExtNum {
        ExtNum::zero()
    }

    fn one(&self) -> ExtNum {
        ExtNum::one()
    }

    fn add(&self, x: &ExtNum, y: &ExtNum) -> Result<ExtNum, CarrierError> {
        Ok(x + y)
    }

    fn mul(&self, x: &ExtNum, y: &ExtNum) -> Result<ExtNum, CarrierError> {
        Ok(x.mul_with(y, self.rule))
    }

    fn neg(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        Ok(-x)
    }

    fn inv(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        Ok(x.inv())
    }

    fn nfun(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        Ok(x.neutrix_part())
    }

    fn eq(&self, x: &ExtNum, y: &ExtNum) -> bool {
        x == y
    }

    fn subset(&self, x: &ExtNum, y: &ExtNum) -> Option<bool> {
        Some(x.is_subset(y))
    }

    fn is_zeroless(&self, x: &ExtNum) -> Result<bool, CarrierError> {
        Ok(x.is_zeroless())
    }

    fn flexible_inverse(&self, x: &ExtNum) -> Result<bool, CarrierError> {
        if self.rule == BoundaryRule::BothClosed {
            return Ok(x.satisfies_flexible_inverse());
        }
        // The broken product has to be seen by the law as well.
        if !x.is_zeroless() {
            return Ok(true);
        }
        let z = self.mul(x, &x.inv())?;
        let e = z.neutrix();
        Ok(!e.is_full() && e.contains(&(z.precise() - &FieldElem::one())) && z.is_zeroless())
    }

    fn sample(&self, rng: &mut SampleRng, cfg: &GenConfig) -> ExtNum {
        sample_ext(rng, cfg)
    }

    fn format(&self, x: &ExtNum) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<ExtNum, CarrierError> {
        s.parse().map_err(|e| CarrierError::Parse(format!("{e}")))
    }
}
