//! Odd derivations `d_N` and the operators `alpha_1 = e_1^{-1} d_3`,
//! `alpha_2 = e_1^{-2} d_3`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::element::{Degree, Mono, SuperElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operator {
    D(i32),
    Alpha(u32),
}

impl Operator {
    /// Tri-degree shift.
    pub fn shift(self) -> Degree {
        match self {
            Operator::D(n) if n > 0 => (-2, 2 * n, -1),
            Operator::D(0) => (-2, 0, -3),
            Operator::D(n) => (-2, 2 * n, -1 + 2 * n),
            Operator::Alpha(p) => (-2, 6 - 4 * p as i32, -1 - 2 * p as i32),
        }
    }

    /// Image of `xi_k` as `(e-exponents, coefficient)` terms.
    fn image(self, k: usize, rank: usize) -> Result<Vec<(Vec<u32>, i64)>> {
        if k == 0 || k > rank {
            return Err(Error::UndefinedGenerator(k));
        }
        let e = |pows: &[(usize, u32)]| {
            let mut v = vec![0u32; rank];
            for &(i, p) in pows {
                v[i - 1] += p;
            }
            v
        };
        Ok(match self {
            Operator::D(n) if n < 0 => {
                if k as i32 == -n {
                    vec![(e(&[]), 1)]
                } else {
                    vec![]
                }
            }
            Operator::D(0) => {
                if k == 1 {
                    vec![]
                } else {
                    vec![(e(&[(k - 1, 1)]), 1)]
                }
            }
            Operator::D(1) => vec![(e(&[(k, 1)]), 1)],
            Operator::D(2) => match k {
                1 => vec![],
                2 => vec![(e(&[(1, 2)]), 1)],
                3 => vec![(e(&[(1, 1), (2, 1)]), 1)],
                _ => return Err(Error::UndefinedGenerator(k)),
            },
            Operator::D(3) | Operator::Alpha(_) => match k {
                1 | 2 => vec![],
                3 => vec![(e(&[(1, 3)]), 1)],
                _ => return Err(Error::UndefinedGenerator(k)),
            },
            Operator::D(_) => return Err(Error::UndefinedGenerator(k)),
        })
    }

    /// Graded Leibniz rule: on `e^a xi_{i_1} ... xi_{i_r}` the `s`-th odd
    /// factor contributes `(-1)^{s-1} e^a d(xi_{i_s}) xi_{rest}`.
    pub fn apply(self, x: &SuperElement) -> Result<SuperElement> {
        let rank = x.rank();
        if let Operator::Alpha(p) = self {
            if p != 1 && p != 2 {
                return Err(Error::InvalidInput(format!("alpha_{p} is not defined")));
            }
        }
        let mut out = SuperElement::zero(rank);
        for (m, c) in x.terms() {
            for (s, k) in m.xi_indices().into_iter().enumerate() {
                let image = self.image(k, rank)?;
                let rest = m.xi & !(1 << (k - 1));
                for (pows, ic) in image {
                    let e: Vec<u32> = m.e.iter().zip(&pows).map(|(a, b)| a + b).collect();
                    let mut coeff = c * BigRational::from_integer(ic.into());
                    if s % 2 == 1 {
                        coeff = -coeff;
                    }
                    out.add_term(Mono { xi: rest, e }, coeff);
                }
            }
        }
        if let Operator::Alpha(p) = self {
            out = divide_e1(&out, p)?;
        }
        Ok(out)
    }

    pub fn name(self) -> String {
        match self {
            Operator::D(n) => format!("d{n}"),
            Operator::Alpha(p) => format!("a{p}"),
        }
    }
}

fn divide_e1(x: &SuperElement, p: u32) -> Result<SuperElement> {
    let mut out = SuperElement::zero(x.rank());
    for (m, c) in x.terms() {
        if m.e.first().copied().unwrap_or(0) < p {
            return Err(Error::NotDivisible(format!("{x} is not a multiple of e1^{p}")));
        }
        let mut m = m.clone();
        m.e[0] -= p;
        out.add_term(m, c.clone());
    }
    Ok(out)
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Operator {
    type Err = Error;

    /// Accepts `d2`, `d-3`, `d_{-3}`, `d_0`, `a1`, `alpha2`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
        if let Some(n) = t.strip_prefix('d') {
            return n.parse().map(Operator::D).map_err(|_| Error::Parse(format!("bad operator {s:?}")));
        }
        let p = t.strip_prefix("alpha").or_else(|| t.strip_prefix('a'));
        if let Some(p) = p {
            if let Ok(p @ 1..=2) = p.parse() {
                return Ok(Operator::Alpha(p));
            }
        }
        Err(Error::Parse(format!("bad operator {s:?}")))
    }
}

/// A composite of operators, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorWord(pub Vec<Operator>);

impl OperatorWord {
    pub fn apply(&self, x: &SuperElement) -> Result<SuperElement> {
        self.0.iter().rev().try_fold(x.clone(), |acc, op| op.apply(&acc))
    }

    pub fn shift(&self) -> Degree {
        self.0
            .iter()
            .fold((0, 0, 0), |acc, op| super::element::add_degree(acc, op.shift()))
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// Space-separated operators, e.g. `d1 d-2 d-3`; `1` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(OperatorWord(Vec::new()));
        }
        s.split_whitespace().map(str::parse).collect::<Result<_>>().map(OperatorWord)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.0.iter().map(|o| o.name()).collect();
        write!(f, "{}", names.join(" "))
    }
}

/// `d_N` for `-(n-1) <= N <= 3`, restricted to what is defined for `n` strands.
pub fn differentials_for(n: usize) -> Vec<Operator> {
    let r = n as i32 - 1;
    let top = if n <= 4 { 3 } else { 1 };
    (-r..=top).map(Operator::D).collect()
}
