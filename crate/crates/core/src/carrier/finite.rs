use std::fmt;

use rand::Rng;

use super::{check_modulus, CarrierError, GenConfig, MeadowCarrier, ModelId, SampleRng};

fn parse_residue(s: &str, p: u64) -> Result<u64, CarrierError> {
    let n: i64 = s
        .trim()
        .parse()
        .map_err(|_| CarrierError::Parse(format!("'{s}' is not an integer")))?;
    Ok(n.rem_euclid(p as i64) as u64)
}

/// Multiplicative inverse in `F_p` by Fermat, with `0 ↦ 0`.
fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if x.is_multiple_of(p) {
        0
    } else {
        acc
    }
}

/// `F_p` with `0⁻¹ = 0` and `N(x) = 0` for every `x`.
///
/// Each residue stands for the external number `a + ⊘` over a field with
/// residue field `F_p`; those classes operate exactly like the residues, so
/// the residues are used directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteInvolutive {
    p: u64,
}

impl FiniteInvolutive {
    pub fn new(p: u64) -> Result<Self, CarrierError> {
        Ok(FiniteInvolutive { p: check_modulus(p)? })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl MeadowCarrier for FiniteInvolutive {
    type Value = u64;

    fn id(&self) -> ModelId {
        ModelId::FfpInvolutive(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, x: &u64, y: &u64) -> Result<u64, CarrierError> {
        Ok((x + y) % self.p)
    }

    fn mul(&self, x: &u64, y: &u64) -> Result<u64, CarrierError> {
        Ok(x * y % self.p)
    }

    fn neg(&self, x: &u64) -> Result<u64, CarrierError> {
        Ok((self.p - x % self.p) % self.p)
    }

    fn inv(&self, x: &u64) -> Result<u64, CarrierError> {
        Ok(inv_mod(*x, self.p))
    }

    fn nfun(&self, _x: &u64) -> Result<u64, CarrierError> {
        Ok(0)
    }

    fn eq(&self, x: &u64, y: &u64) -> bool {
        x == y
    }

    fn sample(&self, rng: &mut SampleRng, _cfg: &GenConfig) -> u64 {
        rng.random_range(0..self.p)
    }

    fn enumerate(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn format(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64, CarrierError> {
        parse_residue(s, self.p)
    }
}

/// Element of `F_p ∪ {E}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommonElem {
    Elem(u64),
    Error,
}

impl fmt::Display for CommonElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommonElem::Elem(n) => write!(f, "{n}"),
            CommonElem::Error => f.write_str("E"),
        }
    }
}

/// `F_p` extended with an absorbing error element `E = 0⁻¹`.
///
/// The common meadow signature has no `N`; here `N(x)` is taken to be
/// `0·x`, which is `0` on residues and `E` on `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteCommon {
    field: FiniteInvolutive,
}

impl FiniteCommon {
    pub fn new(p: u64) -> Result<Self, CarrierError> {
        Ok(FiniteCommon {
            field: FiniteInvolutive::new(p)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.field.p
    }

    fn lift(
        &self,
        x: &CommonElem,
        y: &CommonElem,
        f: impl Fn(&u64, &u64) -> Result<u64, CarrierError>,
    ) -> Result<CommonElem, CarrierError> {
        match (x, y) {
            (CommonElem::Elem(a), CommonElem::Elem(b)) => Ok(CommonElem::Elem(f(a, b)?)),
            _ => Ok(CommonElem::Error),
        }
    }
}

impl MeadowCarrier for FiniteCommon {
    type Value = CommonElem;

    fn id(&self) -> ModelId {
        ModelId::FfpCommon(self.field.p)
    }

    fn zero(&self) -> CommonElem {
        CommonElem::Elem(0)
    }

    fn one(&self) -> CommonElem {
        CommonElem::Elem(1)
    }

    fn err(&self) -> Option<CommonElem> {
        Some(CommonElem::Error)
    }

    fn add(&self, x: &CommonElem, y: &CommonElem) -> Result<CommonElem, CarrierError> {
        self.lift(x, y, |a, b| self.field.add(a, b))
    }

    fn mul(&self, x: &CommonElem, y: &CommonElem) -> Result<CommonElem, CarrierError> {
        self.lift(x, y, |a, b| self.field.mul(a, b))
    }

    fn neg(&self, x: &CommonElem) -> Result<CommonElem, CarrierError> {
        match x {
            CommonElem::Elem(a) => Ok(CommonElem::Elem(self.field.neg(a)?)),
            CommonElem::Error => Ok(CommonElem::Error),
        }
    }

    fn inv(&self, x: &CommonElem) -> Result<CommonElem, CarrierError> {
        match x {
            CommonElem::Elem(0) | CommonElem::Error => Ok(CommonElem::Error),
            CommonElem::Elem(a) => Ok(CommonElem::Elem(self.field.inv(a)?)),
        }
    }

    fn nfun(&self, x: &CommonElem) -> Result<CommonElem, CarrierError> {
        self.mul(&self.zero(), x)
    }

    fn eq(&self, x: &CommonElem, y: &CommonElem) -> bool {
        x == y
    }

    fn sample(&self, rng: &mut SampleRng, _cfg: &GenConfig) -> CommonElem {
        let k = rng.random_range(0..=self.field.p);
        if k == self.field.p {
            CommonElem::Error
        } else {
            CommonElem::Elem(k)
        }
    }

    fn enumerate(&self) -> Option<Vec<CommonElem>> {
        let mut all: Vec<CommonElem> = (0..self.field.p).map(CommonElem::Elem).collect();
        all.push(CommonElem::Error);
        Some(all)
    }

    fn format(&self, x: &CommonElem) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<CommonElem, CarrierError> {
        if s.trim() == "E" {
            Ok(CommonElem::Error)
        } else {
            Ok(CommonElem::Elem(parse_residue(s, self.field.p)?))
        }
    }
}
