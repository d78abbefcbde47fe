//! q-integers, q-factorials and q-binomials as polynomials in `(a, v, t)`.

use num_bigint::BigInt;

use super::poly::{MultiPoly, Vars, HALF_Q};
use crate::error::{Error, Result};

/// Which power of `q` the bracket is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBase {
    /// `[k]_q = 1 + q + ... + q^{k-1}`
    Q,
    /// `[k]_{q^2} = 1 + q^2 + ... + q^{2(k-1)}`
    QSquared,
}

impl QBase {
    /// Exponent of `v` corresponding to one power of the base.
    pub fn v_step(self) -> i32 {
        match self {
            QBase::Q => 2,
            QBase::QSquared => 4,
        }
    }
}

/// `x^k` where `x` is the base variable.
pub fn base_power(base: QBase, k: i32) -> MultiPoly {
    MultiPoly::var_pow(&Vars::avt(), HALF_Q, base.v_step() * k)
}

pub fn q_integer(k: u32, base: QBase) -> MultiPoly {
    let vars = Vars::avt();
    MultiPoly::from_terms(
        &vars,
        (0..k as i32).map(|i| (vec![0, base.v_step() * i, 0], BigInt::from(1))),
    )
}

pub fn q_factorial(k: u32, base: QBase) -> MultiPoly {
    (1..=k).fold(MultiPoly::one(&Vars::avt()), |acc, i| &acc * &q_integer(i, base))
}

/// Gaussian binomial via `[n,k] = [n-1,k-1] + x^k [n-1,k]`. Zero when `k > n`.
pub fn q_binomial(n: u32, k: u32, base: QBase) -> MultiPoly {
    let vars = Vars::avt();
    if k > n {
        return MultiPoly::zero(&vars);
    }
    let mut row = vec![MultiPoly::one(&vars)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut entry = MultiPoly::zero(&vars);
            if j >= 1 {
                entry += &row[j as usize - 1];
            }
            if j < m {
                entry += &(&base_power(base, j as i32) * &row[j as usize]);
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `[n]! / ([p_1]! ... [p_r]!)`; the parts must sum to `n`.
pub fn q_multinomial(n: u32, parts: &[u32], base: QBase) -> Result<MultiPoly> {
    if parts.iter().sum::<u32>() != n {
        return Err(Error::InvalidInput(format!(
            "multinomial parts {parts:?} do not sum to {n}"
        )));
    }
    let den = parts
        .iter()
        .fold(MultiPoly::one(&Vars::avt()), |acc, &p| &acc * &q_factorial(p, base));
    q_factorial(n, base).exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(k: i32) -> MultiPoly {
        base_power(QBase::Q, k)
    }

    #[test]
    fn small_brackets() {
        assert_eq!(q_integer(3, QBase::Q), &(&q(0) + &q(1)) + &q(2));
        assert_eq!(q_integer(0, QBase::Q), MultiPoly::zero(&Vars::avt()));
        assert_eq!(q_integer(2, QBase::QSquared), &q(0) + &q(2));
    }

    #[test]
    fn binomial_four_two() {
        let expect = [1, 1, 2, 1, 1];
        let b = q_binomial(4, 2, QBase::Q);
        for (i, c) in expect.iter().enumerate() {
            assert_eq!(b.coeff(&[0, 2 * i as i32, 0]), BigInt::from(*c));
        }
        assert_eq!(b.num_terms(), 5);
        assert!(q_binomial(2, 3, QBase::Q).is_zero());
    }

    // Subset-sum oracle: sum over k-subsets of {0..n-1} of q^{sum - k(k-1)/2}.
    #[test]
    fn binomial_matches_subset_sums() {
        let vars = Vars::avt();
        for n in 0..=8u32 {
            for k in 0..=n {
                let mut p = MultiPoly::zero(&vars);
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() != k {
                        continue;
                    }
                    let s: i32 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as i32).sum();
                    let e = s - (k * k.saturating_sub(1) / 2) as i32;
                    p.add_term(vec![0, 2 * e, 0], BigInt::one());
                }
                assert_eq!(q_binomial(n, k, QBase::Q), p, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn multinomial_is_exact() {
        let m = q_multinomial(4, &[2, 2], QBase::Q).unwrap();
        assert_eq!(m, q_binomial(4, 2, QBase::Q));
        assert!(q_multinomial(4, &[1, 2], QBase::Q).is_err());
    }
}
