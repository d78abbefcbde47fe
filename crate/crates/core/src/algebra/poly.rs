//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors, so iteration
//! order is lexicographic ascending in the ring's variable order. That order is
//! also the canonical printing order.
//!
//! The variable named [`HALF_Q`] is the square root of `q`: it is printed as a
//! power of `q` with the exponent halved.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Internal name of `q^{1/2}`.
pub const HALF_Q: &str = "v";

/// An ordered list of variable names shared between polynomials of one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// The ring `(a, v, t)` with `q = v^2` used for all knot and q,t data.
    pub fn avt() -> Self {
        static AVT: OnceLock<Vars> = OnceLock::new();
        AVT.get_or_init(|| Vars::new(["a", HALF_Q, "t"])).clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn expect_index(&self, name: &str) -> usize {
        self.index_of(name)
            .unwrap_or_else(|| panic!("variable {name} is not in the ring {:?}", self.0))
    }
}

/// Exponent vector, one entry per ring variable. Negative entries are allowed.
pub type Exponent = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Exponent, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exp: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent length must match the ring");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable `name` to the first power. Panics if `name` is not in the ring.
    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::var_pow(vars, name, 1)
    }

    pub fn var_pow(vars: &Vars, name: &str, e: i32) -> Self {
        let mut exp = vec![0; vars.len()];
        exp[vars.expect_index(name)] = e;
        Self::monomial(vars, exp, 1)
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Smallest and largest exponent of variable `idx` over all terms.
    pub fn degree_bounds(&self, idx: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[idx]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn degree_bounds_of(&self, name: &str) -> Option<(i32, i32)> {
        self.degree_bounds(self.vars.expect_index(name))
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exp: Exponent, c: BigInt) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        if self.vars != other.vars {
            panic!(
                "{}",
                Error::VariableMismatch {
                    left: self.vars.names().to_vec(),
                    right: other.vars.names().to_vec(),
                }
            );
        }
    }

    /// Exact quotient in the Laurent ring.
    ///
    /// Division proceeds by lex-leading terms. Every quotient exponent must lie
    /// in the box `[min(num) - min(den), max(num) - max(den)]` per variable, which
    /// bounds the loop when the division is not exact.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check_ring(den);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let nv = self.vars.len();
        let mut lo = vec![0; nv];
        let mut hi = vec![0; nv];
        for i in 0..nv {
            let (nl, nh) = self.degree_bounds(i).unwrap();
            let (dl, dh) = den.degree_bounds(i).unwrap();
            lo[i] = nl - dl;
            hi[i] = nh - dh;
            if lo[i] > hi[i] {
                return Err(Error::NotDivisible(format!(
                    "degree range of {} is incompatible",
                    self.vars.names()[i]
                )));
            }
        }
        let (lead_exp, lead_coeff) = den.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((re, rc)) = rem.leading_term() {
            let e = sub_exp(re, &lead_exp);
            if e.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Err(Error::NotDivisible(format!("remainder {rem} does not reduce")));
            }
            let (c, r) = rc.div_rem(&lead_coeff);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {rc} is not a multiple of {lead_coeff}"
                )));
            }
            for (de, dc) in den.terms.iter() {
                rem.add_term(add_exp(&e, de), -(&c * dc));
            }
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    /// Applies an exponent map term by term into the ring `vars`.
    pub fn map_exponents<F>(&self, vars: &Vars, f: F) -> Self
    where
        F: Fn(&[i32]) -> Exponent,
    {
        Self::from_terms(vars, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Substitutes an integer for one variable, keeping the ring. Negative
    /// exponents are only allowed when the value is a unit.
    pub fn specialize(&self, name: &str, value: &BigInt) -> Result<Self> {
        let idx = self.vars.expect_index(name);
        let unit = value.abs().is_one();
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[idx];
            let factor = if k >= 0 {
                num_traits::pow(value.clone(), k as usize)
            } else if unit {
                num_traits::pow(value.clone(), k.unsigned_abs() as usize)
            } else if value.is_zero() {
                return Err(Error::EvaluationPole(format!("{name}^{k} at {name}=0")));
            } else {
                return Err(Error::InvalidInput(format!(
                    "{name}^{k} at {name}={value} is not integral"
                )));
            };
            let mut ne = e.clone();
            ne[idx] = 0;
            out.add_term(ne, c * factor);
        }
        Ok(out)
    }

    /// Terms whose exponent in `name` equals `k`, with that exponent cleared.
    pub fn coefficient_of(&self, name: &str, k: i32) -> Self {
        let idx = self.vars.expect_index(name);
        Self::from_terms(
            &self.vars,
            self.terms.iter().filter(|(e, _)| e[idx] == k).map(|(e, c)| {
                let mut ne = e.clone();
                ne[idx] = 0;
                (ne, c.clone())
            }),
        )
    }

    /// Drops every term whose exponent in `name` exceeds `max`.
    pub fn truncate_above(&self, name: &str, max: i32) -> Self {
        let idx = self.vars.expect_index(name);
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[idx] <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `name -> -name` (negates odd powers).
    pub fn negate_variable(&self, name: &str) -> Self {
        let idx = self.vars.expect_index(name);
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), if e[idx] % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Power series of `self / den` in the variable `name`, through exponent
    /// `max` inclusive. The lowest `name`-coefficient of `den` must be `+-1`.
    pub fn series_quotient(&self, den: &Self, name: &str, max: i32) -> Result<Self> {
        self.check_ring(den);
        let idx = self.vars.expect_index(name);
        let Some((d0, _)) = den.degree_bounds(idx) else {
            return Err(Error::DivisionByZero);
        };
        let lead = den.coefficient_of(name, d0);
        let unit = match (lead.num_terms(), lead.terms().next()) {
            (1, Some((e, c))) if e.iter().all(|&x| x == 0) && c.abs().is_one() => c.clone(),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "lowest {name}-coefficient of the denominator is not a unit: {lead}"
                )))
            }
        };
        let mut rem = self.clone();
        let mut out = Self::zero(&self.vars);
        while let Some((lo, _)) = rem.degree_bounds(idx) {
            let k = lo - d0;
            if k > max {
                break;
            }
            let mut shift = vec![0; self.vars.len()];
            shift[idx] = k;
            let c = rem.coefficient_of(name, lo).scale(&unit).shift(&shift);
            rem -= &(&c * den);
            out += &c;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut unit = BTreeMap::new();
        let names = self
            .vars
            .names()
            .iter()
            .map(|n| {
                if n == HALF_Q {
                    unit.insert("q".to_string(), "1/2".to_string());
                    "q".to_string()
                } else {
                    n.clone()
                }
            })
            .collect();
        let doc = PolyJson {
            vars: names,
            exponent_unit: unit,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp: e.clone(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: PolyJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let names: Vec<String> = doc
            .vars
            .iter()
            .map(|n| match doc.exponent_unit.get(n).map(String::as_str) {
                Some("1/2") if n == "q" => HALF_Q.to_string(),
                _ => n.clone(),
            })
            .collect();
        let vars = Vars::new(names);
        let mut p = Self::zero(&vars);
        for t in doc.terms {
            if t.exp.len() != vars.len() {
                return Err(Error::Parse("exponent length mismatch".into()));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {}", t.coeff)))?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }

    fn fmt_monomial(&self, e: &[i32]) -> String {
        let mut parts = Vec::new();
        for (name, &k) in self.vars.names().iter().zip(e) {
            if k == 0 {
                continue;
            }
            if name == HALF_Q {
                if k % 2 == 0 {
                    parts.push(fmt_power("q", k / 2));
                } else {
                    parts.push(format!("q^({k}/2)"));
                }
            } else {
                parts.push(fmt_power(name, k));
            }
        }
        parts.join("*")
    }
}

fn fmt_power(name: &str, k: i32) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{name}^{k}")
    }
}

pub(crate) fn add_exp(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_exp(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    exponent_unit: BTreeMap<String, String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: Vec<i32>,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mono = self.fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        self.check_ring(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &'a MultiPoly) {
        self.check_ring(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i32) -> MultiPoly {
        MultiPoly::var_pow(&Vars::avt(), HALF_Q, 2 * k)
    }

    fn one() -> MultiPoly {
        MultiPoly::one(&Vars::avt())
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&one() + &q(1)) * &(&one() - &q(1));
        assert_eq!(p, &one() - &q(2));
        assert_eq!(&p * &one(), p);
    }

    #[test]
    fn exact_division_examples() {
        let num = &one() - &q(4);
        let den = &one() - &q(2);
        assert_eq!(num.exact_div(&den).unwrap(), &one() + &q(2));

        let bad = (&one() - &q(2)).exact_div(&(&one() - &q(3)));
        assert!(matches!(bad, Err(Error::NotDivisible(_))));

        let s = &one() + &q(1);
        let num = &(&s * &s) - &s;
        assert_eq!(num.exact_div(&s).unwrap(), q(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(one().exact_div(&MultiPoly::zero(&Vars::avt())), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_division() {
        let vars = Vars::avt();
        let num = &q(-3) - &q(5);
        let den = &MultiPoly::var_pow(&vars, HALF_Q, -2) - &q(0);
        let quot = num.exact_div(&den).unwrap();
        assert_eq!(&quot * &den, num);
    }

    #[test]
    fn canonical_text() {
        let vars = Vars::avt();
        let a2q2 = MultiPoly::monomial(&vars, vec![2, 4, 0], 1);
        let p = &(&one() + &q(4)) - &a2q2;
        assert_eq!(p.to_string(), "1 + q^4 - a^2*q^2");
        let half = MultiPoly::monomial(&vars, vec![0, 3, 1], -2);
        assert_eq!(half.to_string(), "-2*q^(3/2)*t");
        assert_eq!(MultiPoly::zero(&vars).to_string(), "0");
        assert_eq!(MultiPoly::var_pow(&vars, "t", -1).to_string(), "t^-1");
    }

    #[test]
    fn geometric_series() {
        let den = &one() - &q(2);
        let s = one().series_quotient(&den, HALF_Q, 9).unwrap();
        assert_eq!(s, &(&one() + &q(2)) + &q(4));
        let back = (&s * &den).truncate_above(HALF_Q, 9);
        assert_eq!(back, one());
    }

    #[test]
    fn json_exposes_half_unit() {
        let p = &q(2) + &MultiPoly::var(&Vars::avt(), "t");
        let j = p.to_json();
        assert_eq!(j["vars"], serde_json::json!(["a", "q", "t"]));
        assert_eq!(j["exponent_unit"]["q"], "1/2");
        assert_eq!(MultiPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn specialize_and_coefficients() {
        let vars = Vars::avt();
        let p = &MultiPoly::monomial(&vars, vec![2, 2, 3], 3) + &MultiPoly::monomial(&vars, vec![0, -2, 1], 1);
        let at1 = p.specialize(HALF_Q, &BigInt::one()).unwrap();
        assert_eq!(at1.coeff(&[2, 0, 3]), BigInt::from(3));
        assert!(p.specialize(HALF_Q, &BigInt::zero()).is_err());
        assert_eq!(p.coefficient_of("a", 2), MultiPoly::monomial(&vars, vec![0, 2, 3], 3));
        assert_eq!(p.negate_variable("t").coeff(&[0, -2, 1]), BigInt::from(-1));
    }
}
