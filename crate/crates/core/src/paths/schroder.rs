use std::fmt;

use super::dyck::bounce_points_of;
use super::{parse_word, word_string, DyckPath, Step};
use crate::error::{Error, Result};

/// N/E/D path from `(0,0)` to `(n,n)` weakly above `y = x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroderPath {
    n: usize,
    word: Vec<Step>,
}

impl SchroderPath {
    pub fn from_word(n: usize, word: &str) -> Result<Self> {
        let word = parse_word(word)?;
        let (mut x, mut y) = (0, 0);
        for s in &word {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1
                }
            }
            if x > y || y > n {
                return Err(Error::InvalidInput(format!(
                    "{} leaves the region above the diagonal",
                    word_string(&word)
                )));
            }
        }
        if x != n || y != n {
            return Err(Error::InvalidInput(format!("path does not end at ({n},{n})")));
        }
        Ok(SchroderPath { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.word.iter().filter(|&&s| s == Step::D).count()
    }

    pub fn steps(&self) -> &[Step] {
        &self.word
    }

    pub fn word(&self) -> String {
        word_string(&self.word)
    }

    /// Whether some D step starts on the diagonal `y = x`.
    pub fn has_diagonal_d(&self) -> bool {
        let (mut x, mut y) = (0, 0);
        for s in &self.word {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    if x == y {
                        return true;
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        false
    }

    /// Twice the area between the path and the north-west boundary.
    pub fn area2(&self) -> u32 {
        let mut x = 0;
        let mut area2 = 0;
        for s in &self.word {
            match s {
                Step::N => area2 += 2 * x,
                Step::E => x += 1,
                Step::D => {
                    area2 += 2 * x + 1;
                    x += 1;
                }
            }
        }
        area2
    }

    /// The Dyck path in the `(n-k)` square obtained by deleting D steps.
    pub fn t_path(&self) -> DyckPath {
        let m = self.n - self.k();
        let word = self.word.iter().copied().filter(|&s| s != Step::D).collect();
        DyckPath::from_steps(m, m, word).expect("deleting D steps keeps the path above the diagonal")
    }

    /// `bounce(T(pi))` plus, for each D step, the number of peak lines of the
    /// bounce path of `T(pi)` east of it. The peak lines sit at `x = n-k` and at
    /// each bounce point; a D step at height `Y` of `T(pi)` sees those with `x > Y`.
    pub fn bounce(&self) -> u32 {
        let t = self.t_path();
        let m = t.n() as u32;
        let points = bounce_points_of(&t.partition(), m);
        let mut total: u32 = points.iter().sum();
        let mut y_t = 0u32;
        for s in &self.word {
            match s {
                Step::N => y_t += 1,
                Step::E => {}
                Step::D => {
                    total += std::iter::once(&m).chain(&points).filter(|&&j| j > y_t).count() as u32;
                }
            }
        }
        total
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// Schröder paths of size `n` with exactly `k` D steps, optionally excluding
/// those with a D step on the diagonal. Steps are tried in the order N, E, D.
pub fn enumerate_schroder(n: usize, k: usize, exclude_diagonal_d: bool) -> Vec<SchroderPath> {
    struct Ctx {
        n: usize,
        k: usize,
        exclude: bool,
        word: Vec<Step>,
        out: Vec<SchroderPath>,
    }
    fn rec(c: &mut Ctx, x: usize, y: usize, d: usize) {
        if x == c.n && y == c.n {
            if d == c.k {
                c.out.push(SchroderPath { n: c.n, word: c.word.clone() });
            }
            return;
        }
        if y < c.n {
            c.word.push(Step::N);
            rec(c, x, y + 1, d);
            c.word.pop();
        }
        if x < y {
            c.word.push(Step::E);
            rec(c, x + 1, y, d);
            c.word.pop();
        }
        if y < c.n && d < c.k && !(c.exclude && x == y) {
            c.word.push(Step::D);
            rec(c, x + 1, y + 1, d + 1);
            c.word.pop();
        }
    }
    if k > n {
        return Vec::new();
    }
    let mut c = Ctx {
        n,
        k,
        exclude: exclude_diagonal_d,
        word: Vec::new(),
        out: Vec::new(),
    };
    rec(&mut c, 0, 0, 0);
    c.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::counting::factorial;
    use crate::paths::enumerate_dyck;
    use num_bigint::BigInt;

    fn large(n: u64, k: u64) -> BigInt {
        factorial(2 * n - k) / (factorial(n - k + 1) * factorial(n - k) * factorial(k))
    }

    fn little(n: u64, k: u64) -> BigInt {
        if k >= n {
            return BigInt::from(0);
        }
        factorial(2 * n - k) / (BigInt::from(n * (n + 1)) * factorial(k) * factorial(n - k) * factorial(n - k - 1))
    }

    #[test]
    fn single_diagonal_step() {
        let ps = enumerate_schroder(1, 1, false);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].word(), "D");
        assert_eq!(ps[0].area2(), 1);
        assert_eq!(ps[0].bounce(), 0);
        assert!(ps[0].has_diagonal_d());
        assert!(enumerate_schroder(1, 1, true).is_empty());
    }

    #[test]
    fn little_four_two() {
        assert_eq!(enumerate_schroder(4, 2, true).len(), 9);
    }

    #[test]
    fn counts_match_factorial_formulas() {
        for n in 1..=6u64 {
            for k in 0..=n {
                let all = enumerate_schroder(n as usize, k as usize, false);
                assert_eq!(BigInt::from(all.len()), large(n, k), "S n={n} k={k}");
                let lit = enumerate_schroder(n as usize, k as usize, true);
                assert_eq!(BigInt::from(lit.len()), little(n, k), "R n={n} k={k}");
                assert_eq!(lit.len(), all.iter().filter(|p| !p.has_diagonal_d()).count());
                assert!(all.iter().all(|p| p.k() == k as usize));
            }
        }
    }

    #[test]
    fn k_zero_reduces_to_dyck() {
        for n in 1..=6 {
            let s = enumerate_schroder(n, 0, false);
            let d = enumerate_dyck(n, n);
            assert_eq!(s.len(), d.len());
            for (sp, dp) in s.iter().zip(&d) {
                assert_eq!(sp.word(), dp.word());
                assert_eq!(sp.area2(), 2 * dp.area());
                assert_eq!(sp.bounce(), dp.bounce());
            }
        }
    }

    #[test]
    fn word_validation() {
        assert!(SchroderPath::from_word(2, "NDE").is_ok());
        assert!(SchroderPath::from_word(2, "EDN").is_err());
        assert!(SchroderPath::from_word(2, "ND").is_err());
    }
}
