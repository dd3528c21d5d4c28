use thiserror::Error;

use super::term::Term;
use crate::carrier::{CarrierError, MeadowCarrier, ModelId};

/// Variable assignment, in binding order.
pub type Env<V> = Vec<(String, V)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable '{0}'")]
    UnboundVariable(String),
    #[error("model {0} has no error element")]
    ErrUnsupported(ModelId),
    #[error(transparent)]
    Carrier(#[from] CarrierError),
}

pub fn lookup<'a, V>(env: &'a Env<V>, name: &str) -> Option<&'a V> {
    env.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v)
}

/// Interprets `t` in `m` under `env`.
pub fn eval<M: MeadowCarrier>(m: &M, t: &Term, env: &Env<M::Value>) -> Result<M::Value, EvalError> {
    Ok(match t {
        Term::Var(v) => lookup(env, v)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        Term::Zero => m.zero(),
        Term::One => m.one(),
        Term::Err => m.err().ok_or(EvalError::ErrUnsupported(m.id()))?,
        Term::Add(a, b) => m.add(&eval(m, a, env)?, &eval(m, b, env)?)?,
        Term::Mul(a, b) => m.mul(&eval(m, a, env)?, &eval(m, b, env)?)?,
        Term::Neg(a) => m.neg(&eval(m, a, env)?)?,
        Term::Inv(a) => m.inv(&eval(m, a, env)?)?,
        Term::NOf(a) => m.nfun(&eval(m, a, env)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{ExternalModel, FiniteCommon, RationalInvolutive};

    #[test]
    fn evaluates_in_models() {
        let ext = ExternalModel::new();
        let t: Term = "(1 + N(x)*x^-1)*x".parse().unwrap();
        let x = ext.parse("0 ; L").unwrap();
        let v = eval(&ext, &t, &vec![("x".into(), x.clone())]).unwrap();
        assert!(MeadowCarrier::eq(&ext, &v, &x));

        let q = RationalInvolutive::new();
        let z = eval(&q, &"0^-1".parse().unwrap(), &Env::new()).unwrap();
        assert_eq!(q.format(&z), "0");

        let c = FiniteCommon::new(3).unwrap();
        assert_eq!(c.format(&eval(&c, &Term::Err, &Env::new()).unwrap()), "E");
    }

    #[test]
    fn evaluation_errors() {
        let q = RationalInvolutive::new();
        assert_eq!(
            eval(&q, &Term::Err, &Env::new()),
            Err(EvalError::ErrUnsupported(ModelId::RatInvolutive))
        );
        assert_eq!(
            eval(&q, &Term::var("y"), &Env::new()),
            Err(EvalError::UnboundVariable("y".into()))
        );
    }
}
