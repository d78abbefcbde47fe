//! Incremental row echelon form over the rationals for sparse vectors.
//!
//! Vectors are maps from an ordered key type (usually a monomial) to a
//! nonzero rational. Each stored row is normalized so that its smallest key,
//! the pivot, has coefficient 1, and no stored row contains another row's
//! pivot at a key it is reduced against.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseVec<K> = BTreeMap<K, BigRational>;

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot of the stored rows.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            let lower = match &cursor {
                Some(k) => Bound::Excluded(k.clone()),
                None => Bound::Unbounded,
            };
            let next = v
                .range((lower, Bound::Unbounded))
                .find(|(k, _)| self.pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { break };
            for (rk, rc) in &self.rows[self.pivots[&k]] {
                let entry = v.entry(rk.clone()).or_insert_with(BigRational::zero);
                *entry -= &c * rc;
                if entry.is_zero() {
                    v.remove(rk);
                }
            }
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for c in r.values_mut() {
                *c *= &inv;
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<'a, K, I>(vectors: I) -> usize
where
    K: Ord + Clone + 'a,
    I: IntoIterator<Item = &'a SparseVec<K>>,
{
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|&(k, c)| (k, BigRational::from_integer(c.into())))
            .collect()
    }

    // Dense Gaussian elimination over f64-free fractions, used as an oracle.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][col].is_zero() {
                    let f = &m[i][col] / &m[rank][col];
                    let pivot = m[rank].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let mut e = Echelon::new();
        assert!(e.insert(&vec_of(&[(0, 1), (1, 2)])));
        assert!(e.insert(&vec_of(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&vec_of(&[(0, 2), (1, 6), (2, 2)])));
        assert!(e.contains(&vec_of(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.contains(&vec_of(&[(2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(!e.insert(&SparseVec::new()));
    }

    #[test]
    fn matches_dense_oracle() {
        let rows = vec![
            vec![2, -1, 0, 3, 1],
            vec![4, -2, 0, 6, 2],
            vec![0, 0, 5, 1, 1],
            vec![2, -1, 5, 4, 2],
            vec![1, 1, 1, 1, 1],
        ];
        let sparse: Vec<SparseVec<u32>> = rows
            .iter()
            .map(|r| vec_of(&r.iter().enumerate().map(|(i, &c)| (i as u32, c)).collect::<Vec<_>>()))
            .collect();
        assert_eq!(rank(&sparse), dense_rank(&rows));
        assert_eq!(rank(&sparse), 3);
    }
}
