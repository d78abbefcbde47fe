//! HOMFLY polynomials of torus knots: the Jones sum and the closed form for
//! its `a`-coefficients, in base `q^2` brackets throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::counting::binomial;
use crate::algebra::qcalc::base_power;
use crate::algebra::{q_binomial, q_factorial, q_integer, MultiPoly, QBase, Vars, HALF_Q};
use crate::error::{Error, Result};
use crate::paths::marked_count;

const B: QBase = QBase::QSquared;

/// A torus knot `T(n, m)` with `gcd(n, m) = 1`, stored with `n <= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    n: usize,
    m: usize,
}

impl TorusKnot {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 || num_integer::gcd(n, m) != 1 {
            return Err(Error::InvalidInput(format!("T({n},{m}) needs coprime positive parameters")));
        }
        Ok(TorusKnot { n: n.min(m), m: n.max(m) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomflyPoly {
    /// `P`, with the `(a q^{-1})^{(n-1)(m-1)}` prefactor restored.
    pub p: MultiPoly,
    /// The rescaled `P_s`.
    pub p_s: MultiPoly,
}

fn a2(k: i32) -> MultiPoly {
    MultiPoly::monomial(&Vars::avt(), vec![2 * k, 0, 0], 1)
}

fn one() -> MultiPoly {
    MultiPoly::one(&Vars::avt())
}

/// `P_s` from the Jones sum over one common denominator
/// `(1 - q^{2n}) prod_{j<n} (1 - q^{2j})`.
pub fn homfly_jones(k: TorusKnot) -> Result<HomflyPoly> {
    let (n, m) = (k.n as i32, k.m as i32);
    let one_minus = |e: i32| &one() - &base_power(B, e);
    let mut den = one_minus(n);
    for j in 1..n {
        den = &den * &one_minus(j);
    }
    let mut num = MultiPoly::zero(&Vars::avt());
    for b in 0..n {
        // (a^2 q^{2i} - 1)/(q^{2i} - 1) = (1 - a^2 q^{2i})/(1 - q^{2i}); the
        // leftover denominators combine with prod_{j<n} into binom(n-1, b).
        let mut term = &one_minus(1) * &base_power(B, m * (n - 1 - b));
        for i in 1..=b {
            term = &term * &(&one() - &(&a2(1) * &base_power(B, i)));
        }
        for j in 1..n - b {
            term = &term * &(&a2(1) - &base_power(B, j));
        }
        term = &term * &q_binomial((n - 1) as u32, b as u32, B);
        num += &term;
    }
    let p_s = num.exact_div(&den)?;
    let e = (n - 1) * (m - 1);
    let p = p_s.shift(&[e, -2 * e, 0]);
    Ok(HomflyPoly { p, p_s })
}

/// Closed form for the `a^{2j}` coefficient of `P_s(T(n,m))`:
/// `(-1)^j q^{j(j+1)} [m+n-j-1]! / ([n][m][j]![m-j-1]![n-j-1]!)`.
/// Symmetric in `n` and `m`; zero when `j >= min(n, m)`.
pub fn homfly_coefficient(n: usize, m: usize, j: usize) -> Result<MultiPoly> {
    if j >= n.min(m) {
        return Ok(MultiPoly::zero(&Vars::avt()));
    }
    let (n32, m32, j32) = (n as u32, m as u32, j as u32);
    let den = [
        q_integer(n32, B),
        q_integer(m32, B),
        q_factorial(j32, B),
        q_factorial(m32 - j32 - 1, B),
        q_factorial(n32 - j32 - 1, B),
    ]
    .iter()
    .fold(one(), |acc, f| &acc * f);
    let quot = q_factorial(m32 + n32 - j32 - 1, B).exact_div(&den)?;
    let sign = if j.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let jj = j as i32;
    Ok(quot.shift(&[0, 2 * jj * (jj + 1), 0]).scale(&sign))
}

/// `P_s` assembled from the closed-form coefficients.
pub fn homfly_from_coefficients(k: TorusKnot) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(&Vars::avt());
    for j in 0..k.n {
        out += &(&a2(j as i32) * &homfly_coefficient(k.n, k.m, j)?);
    }
    Ok(out)
}

/// Level `j` of `P_s`: its `a^{2j}` coefficient.
pub fn level(p_s: &MultiPoly, j: usize) -> MultiPoly {
    p_s.coefficient_of("a", 2 * j as i32)
}

/// Substitutes `a = q^N`.
pub fn sl_n_specialization(p: &MultiPoly, big_n: i32) -> MultiPoly {
    p.map_exponents(p.vars(), |e| vec![0, e[1] + 2 * big_n * e[0], e[2]])
}

/// The limit `m -> infinity` of `P_s(T(n,m))` as numerator and denominator:
/// `prod_{k<n} (1 - a^2 q^{2k})` over `prod_{k<n} (1 - q^{2k+2})`.
pub fn stable_homfly(n: usize) -> (MultiPoly, MultiPoly) {
    let mut num = one();
    let mut den = one();
    for k in 1..n as i32 {
        num = &num * &(&one() - &(&a2(1) * &base_power(B, k)));
        den = &den * &(&one() - &base_power(B, k + 1));
    }
    (num, den)
}

/// Series of the stable limit through `q^{max_q}`.
pub fn stable_homfly_series(n: usize, max_q: i32) -> Result<MultiPoly> {
    let (num, den) = stable_homfly(n);
    num.series_quotient(&den, HALF_Q, 2 * max_q)
}

/// One identity instance: a difference that should vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub knot: (usize, usize),
    pub level: usize,
    pub difference: MultiPoly,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

fn int_poly(x: BigInt) -> MultiPoly {
    MultiPoly::constant(&Vars::avt(), x)
}

fn at_q1(p: &MultiPoly) -> BigInt {
    p.specialize(HALF_Q, &BigInt::one())
        .expect("q = 1 is a unit")
        .coeff(&[0, 0, 0])
}

/// Every coefficient identity of the torus-knot family over coprime
/// `1 <= n < m`, `n <= n_max`, `m <= m_max`, in a fixed order.
pub fn homfly_identity_checks(n_max: usize, m_max: usize) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let mut push = |name, knot, level, difference| {
        out.push(IdentityCheck { name, knot, level, difference });
    };
    for n in 1..=n_max {
        for m in n + 1..=m_max {
            if num_integer::gcd(n, m) != 1 {
                continue;
            }
            let k = TorusKnot::new(n, m)?;
            let jones = homfly_jones(k)?.p_s;
            let coeffs: Vec<MultiPoly> = (0..n).map(|j| homfly_coefficient(n, m, j)).collect::<Result<_>>()?;

            let beyond = jones.terms().filter(|(e, _)| e[0] < 0 || e[0] % 2 != 0 || e[0] >= 2 * n as i32);
            let stray = MultiPoly::from_terms(jones.vars(), beyond.map(|(e, c)| (e.clone(), c.clone())));
            push("expansion-levels", (n, m), 0, stray);

            for (j, c) in coeffs.iter().enumerate() {
                push("closed-form", (n, m), j, &level(&jones, j) - c);
                push("symmetry", (n, m), j, c - &homfly_coefficient(m, n, j)?);
                let count = marked_count(m, n, j)?;
                push("marked-count", (n, m), j, int_poly(at_q1(c).abs() - count));
            }

            let (nn, mm) = (n as u32, m as u32);
            let bracket = q_integer(nn, B);
            let top_sign = if (n - 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let top = q_binomial(mm - 1, nn - 1, B).shift(&[0, 2 * (n * (n - 1)) as i32, 0])
                .scale(&top_sign)
                .exact_div(&bracket)?;
            push("top", (n, m), n - 1, &coeffs[n - 1] - &top);
            let low = q_binomial(mm + nn - 1, nn - 1, B).exact_div(&bracket)?;
            push("low", (n, m), 0, &coeffs[0] - &low);

            let n_top_q1 = binomial(m as i64 - 1, n as i64 - 1) * &top_sign;
            push("top-q1", (n, m), n - 1, int_poly(at_q1(&coeffs[n - 1]) * n - n_top_q1));
            let n_low_q1 = binomial((m + n) as i64 - 1, n as i64 - 1);
            push("low-q1", (n, m), 0, int_poly(at_q1(&coeffs[0]) * n - n_low_q1));

            let via_n = homfly_coefficient(n, m + n, n - 1)?
                .shift(&[0, -2 * (n * (n - 1)) as i32, 0])
                .scale(&top_sign);
            push("blow-up-n", (n, m), 0, &coeffs[0] - &via_n);
            let m_sign = if (m - 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let via_m = homfly_coefficient(m, m + n, m - 1)?
                .shift(&[0, -2 * (m * (m - 1)) as i32, 0])
                .scale(&m_sign);
            push("blow-up-m", (n, m), 0, &coeffs[0] - &via_m);

            if m == n + 1 {
                for (kk, c) in coeffs.iter().enumerate() {
                    let k32 = kk as u32;
                    let sign = if kk % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    let rhs = (&q_binomial(nn - 1, k32, B) * &q_binomial(2 * nn - k32, nn + 1, B))
                        .exact_div(&q_integer(nn - k32, B))?
                        .shift(&[0, 2 * (kk * (kk + 1)) as i32, 0])
                        .scale(&sign);
                    push("n-plus-one", (n, m), kk, c - &rhs);
                    let little = crate::paths::enumerate_schroder(n, kk, true).len();
                    push("little-schroder", (n, m), kk, int_poly(at_q1(c).abs() - BigInt::from(little)));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i32, i32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(&Vars::avt(), terms.iter().map(|&(a, v, c)| (vec![a, v, 0], BigInt::from(c))))
    }

    #[test]
    fn unknot_and_trefoil() {
        for m in 1..6 {
            assert_eq!(homfly_jones(TorusKnot::new(1, m).unwrap()).unwrap().p_s, one());
        }
        let t23 = homfly_jones(TorusKnot::new(2, 3).unwrap()).unwrap();
        assert_eq!(t23.p_s.to_string(), "1 + q^4 - a^2*q^2");
        assert_eq!(t23.p, poly(&[(2, -4, 1), (2, 4, 1), (4, 0, -1)]));
        let t25 = homfly_jones(TorusKnot::new(2, 5).unwrap()).unwrap().p_s;
        assert_eq!(t25, poly(&[(0, 0, 1), (0, 8, 1), (0, 16, 1), (2, 4, -1), (2, 12, -1)]));
    }

    #[test]
    fn knot_normalization() {
        assert_eq!(TorusKnot::new(3, 2).unwrap(), TorusKnot::new(2, 3).unwrap());
        assert!(TorusKnot::new(2, 4).is_err());
        assert!(TorusKnot::new(0, 1).is_err());
    }

    #[test]
    fn trefoil_coefficients() {
        assert_eq!(homfly_coefficient(2, 3, 0).unwrap(), poly(&[(0, 0, 1), (0, 8, 1)]));
        assert_eq!(homfly_coefficient(2, 3, 1).unwrap(), poly(&[(0, 4, -1)]));
        assert!(homfly_coefficient(2, 3, 2).unwrap().is_zero());
    }

    #[test]
    fn coefficients_match_jones_sum() {
        for (n, m) in [(2, 5), (3, 4), (3, 5), (4, 5), (5, 7)] {
            let k = TorusKnot::new(n, m).unwrap();
            assert_eq!(homfly_jones(k).unwrap().p_s, homfly_from_coefficients(k).unwrap(), "T({n},{m})");
        }
    }

    #[test]
    fn identities_small_range() {
        let checks = homfly_identity_checks(4, 7).unwrap();
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.holds(), "{} at T{:?} level {}: {}", c.name, c.knot, c.level, c.difference);
        }
    }

    #[test]
    fn four_five_level_one_at_q1() {
        let c = homfly_coefficient(4, 5, 1).unwrap();
        assert_eq!(at_q1(&c), BigInt::from(-21));
        assert_eq!(at_q1(&homfly_coefficient(3, 4, 0).unwrap()), BigInt::from(5));
    }

    #[test]
    fn stable_limit() {
        let (num, den) = stable_homfly(2);
        assert_eq!(num, poly(&[(0, 0, 1), (2, 4, -1)]));
        assert_eq!(den, poly(&[(0, 0, 1), (0, 8, -1)]));
        assert_eq!(stable_homfly(1), (one(), one()));
        let series = stable_homfly_series(2, 18).unwrap();
        let t2_21 = homfly_jones(TorusKnot::new(2, 21).unwrap()).unwrap().p_s;
        assert_eq!(t2_21.truncate_above(HALF_Q, 36), series);
    }

    #[test]
    fn sl2_specialization() {
        let t23 = homfly_jones(TorusKnot::new(2, 3).unwrap()).unwrap().p_s;
        assert_eq!(sl_n_specialization(&t23, 2), poly(&[(0, 0, 1), (0, 8, 1), (0, 12, -1)]));
    }
}
