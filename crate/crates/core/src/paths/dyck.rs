use std::fmt;

use super::{parse_word, word_string, Partition, Step};
use crate::error::{Error, Result};

/// A lattice path from `(0,0)` to `(m,n)` with `m` east and `n` north steps that
/// stays weakly above the diagonal: `y*m >= x*n` at every lattice point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    m: usize,
    n: usize,
    word: Vec<Step>,
}

/// Bounce heights and the horizontal bands of the diagram cut at them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slicing {
    pub bounce_points: Vec<u32>,
    pub slices: Vec<Partition>,
    /// Side of the square each slice lives in.
    pub squares: Vec<u32>,
}

fn above(x: usize, y: usize, m: usize, n: usize) -> bool {
    y * m >= x * n
}

impl DyckPath {
    pub fn from_steps(m: usize, n: usize, word: Vec<Step>) -> Result<Self> {
        let (mut x, mut y) = (0, 0);
        for s in &word {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => return Err(Error::InvalidInput("Dyck paths have no D steps".into())),
            }
            if x > m || y > n || !above(x, y, m, n) {
                return Err(Error::InvalidInput(format!(
                    "{} leaves the {m}x{n} region above the diagonal",
                    word_string(&word)
                )));
            }
        }
        if x != m || y != n {
            return Err(Error::InvalidInput(format!("path does not end at ({m},{n})")));
        }
        Ok(DyckPath { m, n, word })
    }

    pub fn from_word(m: usize, n: usize, word: &str) -> Result<Self> {
        Self::from_steps(m, n, parse_word(word)?)
    }

    /// The path whose north-west diagram is `mu`.
    pub fn from_partition(m: usize, n: usize, mu: &Partition) -> Result<Self> {
        if mu.len() > n {
            return Err(Error::InvalidInput(format!("{mu} has more than {n} rows")));
        }
        let mut word = Vec::with_capacity(m + n);
        let mut x = 0usize;
        for row in 0..n {
            let target = mu.part(n - row) as usize;
            while x < target {
                word.push(Step::E);
                x += 1;
            }
            word.push(Step::N);
        }
        while x < m {
            word.push(Step::E);
            x += 1;
        }
        Self::from_steps(m, n, word)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.word
    }

    pub fn word(&self) -> String {
        word_string(&self.word)
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    /// x-coordinate of the north step in each row, bottom row first.
    fn row_offsets(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.n);
        let mut x = 0;
        for s in &self.word {
            match s {
                Step::N => out.push(x),
                _ => x += 1,
            }
        }
        out
    }

    /// Young diagram north-west of the path: `mu_i` is the offset of row `n - i`.
    pub fn partition(&self) -> Partition {
        let mut parts: Vec<u32> = self.row_offsets();
        parts.reverse();
        parts.retain(|&p| p > 0);
        Partition::new(parts).expect("row offsets are monotone")
    }

    pub fn area(&self) -> u32 {
        self.row_offsets().iter().sum()
    }

    /// Bounce points `j_1 > j_2 > ... > j_r >= 1`, from `j_{s+1} = mu_{n - j_s + 1}`.
    pub fn bounce_points(&self) -> Vec<u32> {
        assert!(self.is_square(), "bounce is defined in a square");
        bounce_points_of(&self.partition(), self.n as u32)
    }

    pub fn bounce(&self) -> u32 {
        self.bounce_points().iter().sum()
    }

    pub fn is_stable(&self) -> bool {
        let mu = self.partition();
        (mu.width() as usize + mu.height()) < self.n
    }

    pub fn slicing(&self) -> Slicing {
        let mu = self.partition();
        let n = self.n as u32;
        let points = bounce_points_of(&mu, n);
        let mut slices = Vec::new();
        let mut squares = Vec::new();
        let mut prev = n;
        for &j in points.iter().chain(std::iter::once(&0)) {
            let rows: Vec<u32> = ((n - prev + 1)..=(n - j)).map(|i| mu.part(i as usize)).collect();
            let slice = Partition::from_unsorted(rows);
            if !slice.is_empty() {
                slices.push(slice);
                squares.push(prev);
            }
            prev = j;
        }
        Slicing {
            bounce_points: points,
            slices,
            squares,
        }
    }

    /// Indices `i` with `word[i] = E` and `word[i+1] = N`.
    pub fn external_corners(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::E && w[1] == Step::N)
            .map(|(i, _)| i)
            .collect()
    }
}

pub(crate) fn bounce_points_of(mu: &Partition, n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut j = n;
    loop {
        let next = mu.part((n - j + 1) as usize);
        if next == 0 {
            break;
        }
        out.push(next);
        j = next;
    }
    out
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// All Dyck paths in the `m x n` rectangle, north steps tried first.
pub fn enumerate_dyck(m: usize, n: usize) -> Vec<DyckPath> {
    fn rec(m: usize, n: usize, x: usize, y: usize, word: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if x == m && y == n {
            out.push(DyckPath { m, n, word: word.clone() });
            return;
        }
        if y < n {
            word.push(Step::N);
            rec(m, n, x, y + 1, word, out);
            word.pop();
        }
        if x < m && above(x + 1, y, m, n) {
            word.push(Step::E);
            rec(m, n, x + 1, y, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, 0, 0, &mut Vec::with_capacity(m + n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::counting::{binomial, catalan};
    use itertools::Itertools;
    use num_bigint::BigInt;

    fn square(word: &str) -> DyckPath {
        let n = word.len() / 2;
        DyckPath::from_word(n, n, word).unwrap()
    }

    // Unit-step billiard: from (n, n) move west until standing on top of a
    // north edge of the path, then south to the diagonal, and repeat.
    fn ball_simulation(p: &DyckPath) -> Vec<u32> {
        let n = p.n();
        let mut north_edges = std::collections::HashSet::new();
        let (mut x, mut y) = (0usize, 0usize);
        for s in p.steps() {
            match s {
                Step::N => {
                    north_edges.insert((x, y));
                    y += 1;
                }
                _ => x += 1,
            }
        }
        let mut touches = Vec::new();
        let (mut x, mut y) = (n, n);
        while y > 0 {
            while !north_edges.contains(&(x, y - 1)) {
                x -= 1;
            }
            while y > x {
                y -= 1;
            }
            if y > 0 {
                touches.push(y as u32);
            }
        }
        touches
    }

    fn words_brute(m: usize, n: usize) -> Vec<String> {
        (0..m + n)
            .combinations(n)
            .map(|ns| (0..m + n).map(|i| if ns.contains(&i) { 'N' } else { 'E' }).collect::<String>())
            .filter(|w| DyckPath::from_word(m, n, w).is_ok())
            .collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_dyck(2, 2).len(), 2);
        assert_eq!(enumerate_dyck(3, 3).len(), 5);
        let words: Vec<String> = enumerate_dyck(3, 2).iter().map(DyckPath::word).collect();
        assert_eq!(words, vec!["NNEEE", "NENEE"]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 1..=6 {
            for n in 1..=6 {
                let mut a: Vec<String> = enumerate_dyck(m, n).iter().map(DyckPath::word).collect();
                let mut b = words_brute(m, n);
                a.sort();
                b.sort();
                assert_eq!(a, b, "{m}x{n}");
            }
        }
    }

    #[test]
    fn counts() {
        for n in 1..=8 {
            assert_eq!(BigInt::from(enumerate_dyck(n, n).len()), catalan(n as u64));
        }
        for m in 1..=8usize {
            for n in 1..=8usize {
                if num_integer::gcd(m, n) != 1 {
                    continue;
                }
                let expect = binomial((m + n) as i64, n as i64) / (m + n);
                assert_eq!(BigInt::from(enumerate_dyck(m, n).len()), expect);
            }
        }
    }

    #[test]
    fn area_examples() {
        assert_eq!(square("NNEE").area(), 0);
        assert_eq!(square("NENE").area(), 1);
        assert_eq!(square("NENENE").area(), 3);
    }

    #[test]
    fn bounce_examples() {
        assert_eq!(square("NNEE").bounce(), 0);
        assert_eq!(square("NENE").bounce(), 1);
        let mu = Partition::new(vec![4, 2, 2]).unwrap();
        let p = DyckPath::from_partition(5, 5, &mu).unwrap();
        assert_eq!(p.bounce_points(), vec![4, 2]);
        assert_eq!(p.bounce(), 6);
        assert_eq!(p.area(), 8);
    }

    #[test]
    fn recurrence_matches_ball() {
        for n in 1..=7 {
            for p in enumerate_dyck(n, n) {
                assert_eq!(p.bounce_points(), ball_simulation(&p), "{p}");
            }
        }
    }

    #[test]
    fn partition_round_trip() {
        for m in 1..=7 {
            for n in 1..=7 {
                for p in enumerate_dyck(m, n) {
                    let back = DyckPath::from_partition(m, n, &p.partition()).unwrap();
                    assert_eq!(back, p);
                    assert_eq!(p.area(), p.partition().size());
                }
            }
        }
    }

    #[test]
    fn square_partitions_fit_staircase() {
        for n in 1..=7 {
            for p in enumerate_dyck(n, n) {
                let mu = p.partition();
                for i in 1..=n {
                    assert!(mu.part(i) as usize <= n - i);
                }
            }
        }
    }

    #[test]
    fn slicing_examples() {
        let cut = |parts: Vec<u32>| {
            let mu = Partition::new(parts).unwrap();
            DyckPath::from_partition(5, 5, &mu).unwrap().slicing().slices
        };
        let p = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(cut(vec![4, 2, 2]), vec![p(vec![4]), p(vec![2, 2])]);
        assert_eq!(cut(vec![3, 2, 2, 1]), vec![p(vec![3, 2]), p(vec![2]), p(vec![1])]);
        assert!(cut(vec![]).is_empty());
    }

    #[test]
    fn slicing_invariants() {
        for n in 1..=6 {
            for p in enumerate_dyck(n, n) {
                let s = p.slicing();
                let total: u32 = s.slices.iter().map(Partition::size).sum();
                assert_eq!(total, p.area());
                assert_eq!(s.slices.len(), s.bounce_points.len());
                let mut bsum = 0;
                for ((slice, &j), &side) in s.slices.iter().zip(&s.bounce_points).zip(&s.squares) {
                    assert_eq!(slice.width(), j);
                    let sp = DyckPath::from_partition(side as usize, side as usize, slice).unwrap();
                    assert_eq!(sp.bounce(), slice.width());
                    bsum += sp.bounce();
                }
                assert_eq!(bsum, p.bounce());
            }
        }
    }

    #[test]
    fn stable_paths_bounce_equals_width() {
        assert!(DyckPath::from_partition(3, 3, &Partition::new(vec![1]).unwrap()).unwrap().is_stable());
        assert!(!DyckPath::from_partition(3, 3, &Partition::new(vec![2, 1]).unwrap()).unwrap().is_stable());
        for n in 1..=6 {
            for p in enumerate_dyck(n, n).into_iter().filter(DyckPath::is_stable) {
                assert_eq!(p.bounce(), p.partition().width());
            }
        }
    }

    #[test]
    fn rejects_paths_below_diagonal() {
        assert!(DyckPath::from_word(2, 2, "ENNE").is_err());
        assert!(DyckPath::from_word(2, 2, "NNE").is_err());
        assert!(DyckPath::from_word(2, 2, "NDE").is_err());
    }
}
