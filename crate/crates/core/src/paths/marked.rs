use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{enumerate_dyck, DyckPath};
use crate::algebra::counting::{binomial, factorial};
use crate::error::{Error, Result};

/// A Dyck path with some external corners marked. A corner is identified by
/// the word index of its east step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedDyckPath {
    pub path: DyckPath,
    pub marks: Vec<usize>,
}

impl MarkedDyckPath {
    pub fn new(path: DyckPath, marks: Vec<usize>) -> Result<Self> {
        let corners = path.external_corners();
        if let Some(bad) = marks.iter().find(|i| !corners.contains(i)) {
            return Err(Error::InvalidInput(format!("index {bad} is not an external corner of {path}")));
        }
        Ok(MarkedDyckPath { path, marks })
    }

    pub fn k(&self) -> usize {
        self.marks.len()
    }
}

impl fmt::Display for MarkedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.path, self.marks.iter().join(","))
    }
}

/// Every path in the `m x n` rectangle with every `k`-subset of its corners.
pub fn enumerate_marked(m: usize, n: usize, k: usize) -> Vec<MarkedDyckPath> {
    enumerate_dyck(m, n)
        .into_iter()
        .flat_map(|p| {
            let corners = p.external_corners();
            corners
                .into_iter()
                .combinations(k)
                .map(move |marks| MarkedDyckPath { path: p.clone(), marks })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn require_coprime(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::InvalidInput(format!("{m} and {n} must be coprime and positive")));
    }
    Ok(())
}

/// `(m+n-k-1)! / (m n (n-k-1)! (m-k-1)! k!)`, zero when `k >= min(m, n)`.
pub fn marked_count(m: usize, n: usize, k: usize) -> Result<BigInt> {
    require_coprime(m, n)?;
    if k >= m.min(n) {
        return Ok(BigInt::zero());
    }
    let num = factorial((m + n - k - 1) as u64);
    let den = BigInt::from(m * n)
        * factorial((n - k - 1) as u64)
        * factorial((m - k - 1) as u64)
        * factorial(k as u64);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `C(m-1, k) C(n-1, k) / (k+1)`.
pub fn narayana(m: usize, n: usize, k: usize) -> Result<BigInt> {
    require_coprime(m, n)?;
    Ok(binomial(m as i64 - 1, k as i64) * binomial(n as i64 - 1, k as i64) / (k + 1))
}
