use rand::Rng;

use super::{CarrierError, GenConfig, MeadowCarrier, ModelId, SampleRng};
use crate::external::ExtNum;
use crate::neutrix::Neutrix;
use crate::valcore::{Exp, FieldElem, Rational, Valuation};

/// Rationals blurred by the infinitesimals, `r̂ = r + ⊘`, plus the whole
/// field as error element and inverse of `0̂`.
///
/// Operations are those of the external numbers, restricted to the carrier.
/// `N(x)` is `0·x`, which is `0̂` on every `r̂` and the whole field on the
/// error element.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RhatCommon;

impl RhatCommon {
    pub fn new() -> Self {
        RhatCommon
    }

    /// `r̂`.
    pub fn hat(r: Rational) -> ExtNum {
        ExtNum::new(FieldElem::from_rational(r), Neutrix::infinitesimal())
    }

    pub fn full() -> ExtNum {
        ExtNum::from_neutrix(Neutrix::Full)
    }

    /// Brings a value into the normal form `(r, ⊘)` or `(0, full)`, or
    /// reports that it lies outside the carrier.
    pub fn normalize(x: &ExtNum) -> Result<ExtNum, CarrierError> {
        let out = || CarrierError::OutOfCarrier(x.to_string());
        match x.neutrix() {
            Neutrix::Full => Ok(Self::full()),
            n if *n == Neutrix::infinitesimal() => {
                let a = x.precise();
                match a.valuation() {
                    Valuation::Finite(q) if q < Exp::zero() => Err(out()),
                    _ => {
                        let r = a.series_expand(&Exp::zero()).coefficient(&Exp::zero());
                        Ok(Self::hat(r))
                    }
                }
            }
            _ => Err(out()),
        }
    }

    fn standard_part(x: &ExtNum) -> Option<Rational> {
        if x.neutrix().is_full() {
            None
        } else {
            x.precise().as_series().map(|s| s.coefficient(&Exp::zero()))
        }
    }
}

impl MeadowCarrier for RhatCommon {
    type Value = ExtNum;

    fn id(&self) -> ModelId {
        ModelId::RhatCommon
    }

    fn zero(&self) -> ExtNum {
        Self::hat(Rational::from_integer(0.into()))
    }

    fn one(&self) -> ExtNum {
        Self::hat(Rational::from_integer(1.into()))
    }

    fn err(&self) -> Option<ExtNum> {
        Some(Self::full())
    }

    fn add(&self, x: &ExtNum, y: &ExtNum) -> Result<ExtNum, CarrierError> {
        Self::normalize(&(&Self::normalize(x)? + &Self::normalize(y)?))
    }

    fn mul(&self, x: &ExtNum, y: &ExtNum) -> Result<ExtNum, CarrierError> {
        Self::normalize(&(&Self::normalize(x)? * &Self::normalize(y)?))
    }

    fn neg(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        Self::normalize(&-&Self::normalize(x)?)
    }

    fn inv(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        let x = Self::normalize(x)?;
        if x.is_zeroless() {
            Self::normalize(&x.inv())
        } else {
            Ok(Self::full())
        }
    }

    fn nfun(&self, x: &ExtNum) -> Result<ExtNum, CarrierError> {
        self.mul(&self.zero(), x)
    }

    fn eq(&self, x: &ExtNum, y: &ExtNum) -> bool {
        x == y
    }

    fn subset(&self, x: &ExtNum, y: &ExtNum) -> Option<bool> {
        Some(x.is_subset(y))
    }

    fn sample(&self, rng: &mut SampleRng, cfg: &GenConfig) -> ExtNum {
        if rng.random_bool(cfg.special_rate.clamp(0.0, 1.0)) {
            return match rng.random_range(0..3) {
                0 => self.zero(),
                1 => self.one(),
                _ => Self::full(),
            };
        }
        let b = cfg.rational_bound.max(1);
        let n = rng.random_range(-b..=b);
        let d = rng.random_range(1..=b);
        Self::hat(Rational::new(n.into(), d.into()))
    }

    fn format(&self, x: &ExtNum) -> String {
        x.to_string()
    }

    /// Accepts `a ; o`, `0 ; full`, or a bare rational `r` meaning `r̂`.
    fn parse(&self, s: &str) -> Result<ExtNum, CarrierError> {
        let x: ExtNum = s.parse().map_err(|e| CarrierError::Parse(format!("{e}")))?;
        if x.neutrix().is_zero() {
            match Self::standard_part(&x) {
                Some(r) if FieldElem::from_rational(r.clone()) == *x.precise() => {
                    return Ok(Self::hat(r));
                }
                _ => return Err(CarrierError::OutOfCarrier(x.to_string())),
            }
        }
        Self::normalize(&x)
    }
}
