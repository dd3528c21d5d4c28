//! Models of the meadow signature `{0, 1, err, +, ·, −, ⁻¹, N}`.
//!
//! Every model implements [`MeadowCarrier`], which is all the axiom checker
//! needs: constants, total operations, an equivalence, a sampler and, for
//! finite models, an enumeration of the carrier.

mod external;
mod finite;
mod rational;
mod rhat;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use thiserror::Error;

pub use external::{external_specials, ExternalModel};
pub use finite::{CommonElem, FiniteCommon, FiniteInvolutive};
pub use rational::RationalInvolutive;
pub use rhat::RhatCommon;

/// Generator used for every random draw; one stream per sample index.
pub type SampleRng = rand_chacha::ChaCha8Rng;

/// The generator for sample `index` of a run seeded with `seed`. Draws of
/// different samples are independent of evaluation order.
pub fn sample_rng(seed: u64, index: u64) -> SampleRng {
    let mut rng = SampleRng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("modulus {0} is not a prime at most 97")]
    InvalidModulus(u64),
    #[error("value {0} is outside the carrier")]
    OutOfCarrier(String),
    #[error("model {0} has no error element")]
    ErrUnsupported(String),
    #[error("cannot parse value: {0}")]
    Parse(String),
    #[error("unknown model '{0}'")]
    UnknownModel(String),
}

/// Bounds for random values.
#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    /// Exponent numerators are drawn from `-max_exp_num..=max_exp_num`.
    pub max_exp_num: i64,
    /// Exponent and coefficient denominators are drawn from `1..=max_den`.
    pub max_den: i64,
    /// Coefficient numerators are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
    /// Largest number of terms in a random precise part.
    pub max_terms: usize,
    /// Probability of replacing a draw with one of the model's special
    /// values.
    pub special_rate: f64,
    /// Numerator and denominator bound for rational models.
    pub rational_bound: i64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_exp_num: 3,
            max_den: 3,
            coeff_bound: 10,
            max_terms: 2,
            special_rate: 0.1,
            rational_bound: 100,
        }
    }
}

/// An algebra over the meadow signature.
pub trait MeadowCarrier: Sync {
    type Value: Clone + fmt::Debug + Send + Sync;

    fn id(&self) -> ModelId;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;

    /// The absorbing error element of a common meadow.
    fn err(&self) -> Option<Self::Value> {
        None
    }

    fn add(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, CarrierError>;
    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, CarrierError>;
    fn neg(&self, x: &Self::Value) -> Result<Self::Value, CarrierError>;
    fn inv(&self, x: &Self::Value) -> Result<Self::Value, CarrierError>;
    /// `N(x)`, the generalized zero attached to `x`.
    fn nfun(&self, x: &Self::Value) -> Result<Self::Value, CarrierError>;

    fn eq(&self, x: &Self::Value, y: &Self::Value) -> bool;

    /// Set inclusion, for models whose values are sets.
    fn subset(&self, _x: &Self::Value, _y: &Self::Value) -> Option<bool> {
        None
    }

    /// `x ≠ N(x)`.
    fn is_zeroless(&self, x: &Self::Value) -> Result<bool, CarrierError> {
        Ok(!self.eq(x, &self.nfun(x)?))
    }

    /// Flexible inverse law at `x`: when `x ≠ N(x)`, `x·x⁻¹` is `1` plus a
    /// generalized zero and is not itself a generalized zero.
    fn flexible_inverse(&self, x: &Self::Value) -> Result<bool, CarrierError> {
        if !self.is_zeroless(x)? {
            return Ok(true);
        }
        let z = self.mul(x, &self.inv(x)?)?;
        let one_plus_e = self.add(&self.one(), &self.nfun(&z)?)?;
        Ok(self.eq(&z, &one_plus_e) && self.is_zeroless(&one_plus_e)?)
    }

    fn sample(&self, rng: &mut SampleRng, cfg: &GenConfig) -> Self::Value;

    /// Every element exactly once, for finite carriers.
    fn enumerate(&self) -> Option<Vec<Self::Value>> {
        None
    }

    fn format(&self, x: &Self::Value) -> String;
    fn parse(&self, s: &str) -> Result<Self::Value, CarrierError>;
}

/// Names of the available models, as used on the command line:
/// `external`, `ffp:<p>`, `ffp-common:<p>`, `rhat-common`, `rat-involutive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelId {
    External,
    FfpInvolutive(u64),
    FfpCommon(u64),
    RhatCommon,
    RatInvolutive,
}

impl ModelId {
    pub fn is_finite(&self) -> bool {
        matches!(self, ModelId::FfpInvolutive(_) | ModelId::FfpCommon(_))
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::External => f.write_str("external"),
            ModelId::FfpInvolutive(p) => write!(f, "ffp:{p}"),
            ModelId::FfpCommon(p) => write!(f, "ffp-common:{p}"),
            ModelId::RhatCommon => f.write_str("rhat-common"),
            ModelId::RatInvolutive => f.write_str("rat-involutive"),
        }
    }
}

pub(crate) fn check_modulus(p: u64) -> Result<u64, CarrierError> {
    let prime = (2..=97).contains(&p) && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(p)
    } else {
        Err(CarrierError::InvalidModulus(p))
    }
}

impl FromStr for ModelId {
    type Err = CarrierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let modulus = |p: &str| {
            p.parse::<u64>()
                .map_err(|_| CarrierError::UnknownModel(s.to_string()))
                .and_then(check_modulus)
        };
        match s {
            "external" => Ok(ModelId::External),
            "rhat-common" => Ok(ModelId::RhatCommon),
            "rat-involutive" => Ok(ModelId::RatInvolutive),
            _ => {
                if let Some(p) = s.strip_prefix("ffp-common:") {
                    Ok(ModelId::FfpCommon(modulus(p)?))
                } else if let Some(p) = s.strip_prefix("ffp:") {
                    Ok(ModelId::FfpInvolutive(modulus(p)?))
                } else {
                    Err(CarrierError::UnknownModel(s.to_string()))
                }
            }
        }
    }
}

/// Generic code to run against whichever model a [`ModelId`] names.
pub trait ModelVisitor {
    type Output;
    fn visit<M: MeadowCarrier>(self, model: &M) -> Self::Output;
}

/// Instantiates the model named by `id` and hands it to `visitor`.
pub fn visit_model<V: ModelVisitor>(id: ModelId, visitor: V) -> Result<V::Output, CarrierError> {
    Ok(match id {
        ModelId::External => visitor.visit(&ExternalModel::new()),
        ModelId::FfpInvolutive(p) => visitor.visit(&FiniteInvolutive::new(p)?),
        ModelId::FfpCommon(p) => visitor.visit(&FiniteCommon::new(p)?),
        ModelId::RhatCommon => visitor.visit(&RhatCommon::new()),
        ModelId::RatInvolutive => visitor.visit(&RationalInvolutive::new()),
    })
}
