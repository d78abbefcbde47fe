//! Evaluation of polynomials at exact rational points.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{MultiPoly, HALF_Q};
use crate::error::{Error, Result};

/// Rational values for named variables. A value for `q` also serves the
/// half-power variable as long as only even powers of it occur.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPoint {
    values: BTreeMap<String, BigRational>,
}

impl RationalPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: BigRational) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn with_int(self, name: &str, value: i64) -> Self {
        self.with(name, BigRational::from_integer(value.into()))
    }

    pub fn get(&self, name: &str) -> Option<&BigRational> {
        self.values.get(name)
    }
}

pub fn pow_rational(x: &BigRational, k: i32) -> Result<BigRational> {
    if k < 0 && x.is_zero() {
        return Err(Error::EvaluationPole(format!("0^{k}")));
    }
    Ok(num_traits::pow::Pow::pow(x, k))
}

impl MultiPoly {
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<BigRational> {
        let names = self.vars().names();
        let mut total = BigRational::zero();
        for (e, c) in self.terms() {
            let mut term = BigRational::from_integer(c.clone());
            for (name, &k) in names.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                let factor = if let Some(x) = pt.get(name) {
                    pow_rational(x, k)
                } else if name == HALF_Q {
                    let x = pt.get("q").ok_or_else(|| {
                        Error::InvalidInput("point assigns neither q nor its square root".into())
                    })?;
                    if k % 2 != 0 {
                        return Err(Error::InvalidInput(format!(
                            "q^({k}/2) cannot be evaluated from a value of q"
                        )));
                    }
                    pow_rational(x, k / 2)
                } else {
                    return Err(Error::InvalidInput(format!("point does not assign {name}")));
                }
                .map_err(|_| Error::EvaluationPole(format!("{name}^{k} at {name}=0")))?;
                term *= factor;
            }
            total += term;
        }
        Ok(total)
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Vars;

    #[test]
    fn evaluates_q_plus_t() {
        let vars = Vars::avt();
        let p = &MultiPoly::var_pow(&vars, HALF_Q, 2) + &MultiPoly::var(&vars, "t");
        let pt = RationalPoint::new().with_int("q", 3).with_int("t", 2);
        assert_eq!(p.evaluate(&pt).unwrap(), rational(5, 1));
    }

    #[test]
    fn pole_at_zero() {
        let vars = Vars::avt();
        let p = MultiPoly::var_pow(&vars, HALF_Q, -2);
        let pt = RationalPoint::new().with_int("q", 0);
        assert!(matches!(p.evaluate(&pt), Err(Error::EvaluationPole(_))));
    }

    #[test]
    fn odd_half_power_needs_root() {
        let vars = Vars::avt();
        let p = MultiPoly::var_pow(&vars, HALF_Q, 1);
        assert!(p.evaluate(&RationalPoint::new().with_int("q", 4)).is_err());
        assert_eq!(
            p.evaluate(&RationalPoint::new().with_int(HALF_Q, 2)).unwrap(),
            rational(2, 1)
        );
    }
}
