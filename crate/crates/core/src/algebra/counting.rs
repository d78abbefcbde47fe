//! Integer factorials and binomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        let cats: Vec<BigInt> = (0..8).map(catalan).collect();
        let expect: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(cats, expect);
    }
}
