use num_traits::{One, Zero};
use rand::Rng;

use super::{CarrierError, GenConfig, MeadowCarrier, ModelId, SampleRng};
use crate::literal::parse_rational;
use crate::valcore::Rational;

/// The rationals with `0⁻¹ = 0` and `N ≡ 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalInvolutive;

impl RationalInvolutive {
    pub fn new() -> Self {
        RationalInvolutive
    }
}

impl MeadowCarrier for RationalInvolutive {
    type Value = Rational;

    fn id(&self) -> ModelId {
        ModelId::RatInvolutive
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, x: &Rational, y: &Rational) -> Result<Rational, CarrierError> {
        Ok(x + y)
    }

    fn mul(&self, x: &Rational, y: &Rational) -> Result<Rational, CarrierError> {
        Ok(x * y)
    }

    fn neg(&self, x: &Rational) -> Result<Rational, CarrierError> {
        Ok(-x)
    }

    fn inv(&self, x: &Rational) -> Result<Rational, CarrierError> {
        Ok(if x.is_zero() { Rational::zero() } else { x.recip() })
    }

    fn nfun(&self, _x: &Rational) -> Result<Rational, CarrierError> {
        Ok(Rational::zero())
    }

    fn eq(&self, x: &Rational, y: &Rational) -> bool {
        x == y
    }

    fn sample(&self, rng: &mut SampleRng, cfg: &GenConfig) -> Rational {
        if rng.random_bool(cfg.special_rate.clamp(0.0, 1.0)) {
            return if rng.random_bool(0.5) { self.zero() } else { self.one() };
        }
        let b = cfg.rational_bound.max(1);
        Rational::new(rng.random_range(-b..=b).into(), rng.random_range(1..=b).into())
    }

    fn format(&self, x: &Rational) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<Rational, CarrierError> {
        parse_rational(s).map_err(|e| CarrierError::Parse(format!("{e}")))
    }
}
