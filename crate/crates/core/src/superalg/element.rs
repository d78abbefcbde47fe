//! Elements of the free supercommutative algebra on even `e_1..e_r` and odd
//! `xi_1..xi_r`, with tri-grading `deg e_k = (0, 2k+2, 2k)`,
//! `deg xi_k = (2, 2k, 2k+1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::linalg::SparseVec;
use crate::error::{Error, Result};

/// Tri-degree `(a, q, t)`.
pub type Degree = (i32, i32, i32);

pub fn add_degree(x: Degree, y: Degree) -> Degree {
    (x.0 + y.0, x.1 + y.1, x.2 + y.2)
}

pub fn sub_degree(x: Degree, y: Degree) -> Degree {
    (x.0 - y.0, x.1 - y.1, x.2 - y.2)
}

/// `e^alpha` times `xi_{i_1} ... xi_{i_s}` with `i_1 < ... < i_s`; bit `k-1`
/// of `xi` marks `xi_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub xi: u32,
    pub e: Vec<u32>,
}

impl Mono {
    pub fn one(rank: usize) -> Self {
        Mono { xi: 0, e: vec![0; rank] }
    }

    pub fn degree(&self) -> Degree {
        let mut d = (0, 0, 0);
        for (i, &c) in self.e.iter().enumerate() {
            let k = i as i32 + 1;
            d = add_degree(d, (0, (2 * k + 2) * c as i32, 2 * k * c as i32));
        }
        for k in self.xi_indices() {
            let k = k as i32;
            d = add_degree(d, (2, 2 * k, 2 * k + 1));
        }
        d
    }

    /// Odd generators present, ascending.
    pub fn xi_indices(&self) -> Vec<usize> {
        (0..32).filter(|b| self.xi >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn level(&self) -> usize {
        self.xi.count_ones() as usize
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.e.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("e{}", i + 1)),
                c => parts.push(format!("e{}^{c}", i + 1)),
            }
        }
        for k in self.xi_indices() {
            parts.push(format!("xi{k}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sign of reordering `xi_A xi_B` into ascending order; `None` if they share a generator.
fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    Some(inversions % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperElement {
    rank: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl SuperElement {
    pub fn zero(rank: usize) -> Self {
        SuperElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Mono::one(rank), BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let rank = m.e.len();
        let mut out = Self::zero(rank);
        out.add_term(m, c);
        out
    }

    /// `e_k`; `e_0` is zero.
    pub fn e(rank: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(Self::zero(rank));
        }
        if k > rank {
            return Err(Error::InvalidInput(format!("e_{k} is not in an algebra of rank {rank}")));
        }
        let mut m = Mono::one(rank);
        m.e[k - 1] = 1;
        Ok(Self::monomial(m, BigRational::one()))
    }

    pub fn xi(rank: usize, k: usize) -> Result<Self> {
        if k == 0 || k > rank {
            return Err(Error::UndefinedGenerator(k));
        }
        let mut m = Mono::one(rank);
        m.xi = 1 << (k - 1);
        Ok(Self::monomial(m, BigRational::one()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        debug_assert_eq!(m.e.len(), self.rank);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let Some(neg) = merge_sign(ma.xi, mb.xi) else { continue };
                let e = ma.e.iter().zip(&mb.e).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                out.add_term(Mono { xi: ma.xi | mb.xi, e }, if neg { -c } else { c });
            }
        }
        out
    }

    /// The common tri-degree, `None` for zero, `NotHomogeneous` otherwise.
    pub fn degree(&self) -> Result<Option<Degree>> {
        let mut it = self.terms.keys().map(Mono::degree);
        let Some(first) = it.next() else { return Ok(None) };
        if it.any(|d| d != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(first))
    }

    /// `c` with `self = c * other`, if it exists and is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        let (m, c) = other.terms.iter().next()?;
        let r = self.terms.get(m)? / c;
        (self.terms.len() == other.terms.len() && other.scale(&r) == *self).then_some(r)
    }

    pub fn as_vector(&self) -> SparseVec<Mono> {
        self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect()
    }

    /// Parses sums like `e1^2*xi1*xi3 - 2*e1*e2*xi1*xi2`. Factors are `eK`,
    /// `eK^P`, `xiK`, or an integer; odd factors are multiplied in the order written.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut out = Self::zero(rank);
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let mut term = Self::one(rank);
            for f in body.split('*') {
                let factor = if let Some(k) = f.strip_prefix("xi") {
                    let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad factor {f}")))?;
                    Self::xi(rank, k)?
                } else if let Some(rest) = f.strip_prefix('e') {
                    let (k, p) = match rest.split_once('^') {
                        Some((k, p)) => (k, p),
                        None => (rest, "1"),
                    };
                    let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad factor {f}")))?;
                    let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad power in {f}")))?;
                    let base = Self::e(rank, k)?;
                    (0..p).fold(Self::one(rank), |acc, _| acc.mul(&base))
                } else {
                    let c: BigInt = f.parse().map_err(|_| Error::Parse(format!("bad factor {f}")))?;
                    Self::one(rank).scale(&BigRational::from_integer(c))
                };
                term = term.mul(&factor);
            }
            if neg {
                term = term.scale(&-BigRational::one());
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mono = m.to_string();
            if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mono == "1" {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommuting_generators() {
        let x1 = SuperElement::xi(3, 1).unwrap();
        let x2 = SuperElement::xi(3, 2).unwrap();
        assert_eq!(x1.mul(&x2), x2.mul(&x1).scale(&-BigRational::one()));
        assert!(x1.mul(&x1).is_zero());
        let e1 = SuperElement::e(3, 1).unwrap();
        assert_eq!(e1.mul(&x1), x1.mul(&e1));
        assert!(SuperElement::e(3, 0).unwrap().is_zero());
        assert_eq!(SuperElement::xi(3, 4), Err(Error::UndefinedGenerator(4)));
    }

    #[test]
    fn gradings() {
        let v = SuperElement::parse(3, "xi1*xi2*xi3").unwrap();
        assert_eq!(v.degree().unwrap(), Some((6, 12, 15)));
        let x = SuperElement::parse(3, "e1*xi2*xi3 - e2*xi1*xi3 + e3*xi1*xi2").unwrap();
        assert_eq!(x.degree().unwrap(), Some((4, 14, 14)));
        let mixed = SuperElement::parse(3, "e1 + xi1").unwrap();
        assert_eq!(mixed.degree(), Err(Error::NotHomogeneous));
    }

    #[test]
    fn parse_and_print() {
        let x = SuperElement::parse(3, "xi2*xi1").unwrap();
        assert_eq!(x.to_string(), "-xi1*xi2");
        let y = SuperElement::parse(3, "2*e1^2*xi3 - e1*e2*xi2").unwrap();
        assert_eq!(y.num_terms(), 2);
        assert_eq!(SuperElement::parse(3, &y.to_string()).unwrap(), y);
        assert!(SuperElement::parse(3, "e1*zz").is_err());
        let z = y.scale(&BigRational::from_integer(BigInt::from(-3)));
        assert_eq!(z.ratio_to(&y), Some(BigRational::from_integer(BigInt::from(-3))));
    }
}
