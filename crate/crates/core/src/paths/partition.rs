use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} has a zero part")));
        }
        Ok(Partition(parts))
    }

    /// Sorts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `mu_i` for 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn width(&self) -> u32 {
        self.part(1)
    }

    pub fn height(&self) -> usize {
        self.len()
    }

    pub fn conjugate(&self) -> Self {
        Partition(
            (1..=self.width())
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Cells `(i, j)`, 0-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> u32 {
        self.0[i] - j as u32 - 1
    }

    pub fn leg(&self, i: usize, j: usize) -> u32 {
        self.0.iter().filter(|&&p| p as usize > j).count() as u32 - i as u32 - 1
    }

    pub fn co_arm(&self, _i: usize, j: usize) -> u32 {
        j as u32
    }

    pub fn co_leg(&self, i: usize, _j: usize) -> u32 {
        i as u32
    }

    /// `n(mu) = sum of legs = sum (i-1) mu_i`.
    pub fn n_mu(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// `n(mu') = sum of arms`.
    pub fn n_mu_conj(&self) -> u32 {
        self.conjugate().n_mu()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_hooks() {
        let mu: Partition = "4,2,2".parse().unwrap();
        assert_eq!(mu.conjugate(), Partition::new(vec![3, 3, 1, 1]).unwrap());
        assert_eq!(mu.conjugate().conjugate(), mu);
        assert_eq!(mu.arm(0, 0), 3);
        assert_eq!(mu.leg(0, 0), 2);
        assert_eq!(mu.leg(0, 3), 0);
        assert_eq!(mu.n_mu(), 6);
        let legs: u32 = mu.cells().map(|(i, j)| mu.leg(i, j)).sum();
        let arms: u32 = mu.cells().map(|(i, j)| mu.arm(i, j)).sum();
        assert_eq!(legs, mu.n_mu());
        assert_eq!(arms, mu.n_mu_conj());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }
}
