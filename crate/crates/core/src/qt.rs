//! q,t-Catalan and q,t-Schröder polynomials, the Garsia-Haiman sum at
//! rational points, and the marked-path polynomials `Q_{n,m}(a,t)`.
//!
//! Polynomials live in the `(a, v, t)` ring with `q = v^2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::counting::binomial;
use crate::algebra::eval::pow_rational;
use crate::algebra::{q_binomial, q_factorial, q_integer, MultiPoly, QBase, Vars};
use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, enumerate_marked, enumerate_schroder, Partition};

fn c2(n: usize) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32
}

fn mono(a: i32, v: i32, t: i32) -> MultiPoly {
    MultiPoly::monomial(&Vars::avt(), vec![a, v, t], 1)
}

/// `C_n(q,t) = sum over Dyck paths of q^{C(n,2) - area} t^{bounce}`.
pub fn catalan_qt(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&Vars::avt());
    for path in enumerate_dyck(n, n) {
        let e = vec![0, 2 * (c2(n) - path.area() as i32), path.bounce() as i32];
        p.add_term(e, BigInt::one());
    }
    p
}

/// `sum over Dyck paths of q^{area} t^{bounce}`.
pub fn area_bounce_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&Vars::avt());
    for path in enumerate_dyck(n, n) {
        p.add_term(vec![0, 2 * path.area() as i32, path.bounce() as i32], BigInt::one());
    }
    p
}

/// Carlitz-Riordan recursion `C_n = sum_k q^k C_k C_{n-1-k}`, `C_0 = 1`.
pub fn carlitz_riordan(n: usize) -> MultiPoly {
    let vars = Vars::avt();
    let mut c = vec![MultiPoly::one(&vars)];
    for m in 1..=n {
        let mut next = MultiPoly::zero(&vars);
        for k in 0..m {
            next += &(&mono(0, 2 * k as i32, 0) * &(&c[k] * &c[m - 1 - k]));
        }
        c.push(next);
    }
    c.swap_remove(n)
}

/// `sum over Dyck paths of q^{C(n,2) - area}`: area counted between the path
/// and the diagonal, which is the statistic the Carlitz-Riordan recursion tracks.
pub fn coarea_generating_function(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&Vars::avt());
    for path in enumerate_dyck(n, n) {
        p.add_term(vec![0, 2 * (c2(n) - path.area() as i32), 0], BigInt::one());
    }
    p
}

/// Exchanges `q` and `t`. Fails on odd powers of `q^{1/2}`.
pub fn swap_q_t(p: &MultiPoly) -> Result<MultiPoly> {
    if p.terms().any(|(e, _)| e[1] % 2 != 0) {
        return Err(Error::InvalidInput("cannot swap q and t with half-integer q powers".into()));
    }
    Ok(p.map_exponents(p.vars(), |e| vec![e[0], 2 * e[2], e[1] / 2]))
}

/// Substitutes `t -> q^{-1}`.
fn t_to_q_inverse(p: &MultiPoly) -> MultiPoly {
    p.map_exponents(p.vars(), |e| vec![e[0], e[1] - 2 * e[2], 0])
}

/// `q^{C(n,2)} C_n(q^{-1}, q) - binom(2n, n)_q / [n+1]_q`; zero when the identity holds.
pub fn catalan_square_difference(n: usize) -> Result<MultiPoly> {
    let c = catalan_qt(n);
    let lhs = c.map_exponents(c.vars(), |e| vec![e[0], 2 * c2(n) - e[1] + 2 * e[2], 0]);
    let rhs = q_binomial(2 * n as u32, n as u32, QBase::Q).exact_div(&q_integer(n as u32 + 1, QBase::Q))?;
    Ok(&lhs - &rhs)
}

pub fn catalan_square_spec_check(n: usize) -> Result<bool> {
    Ok(catalan_square_difference(n)?.is_zero())
}

/// Garsia-Haiman sum for `C_n(t, q)` evaluated at `(t0, q0)`.
pub fn catalan_gh_eval(n: usize, t0: &BigRational, q0: &BigRational) -> Result<BigRational> {
    let mono_at = |ti: i64, qi: i64| -> Result<BigRational> {
        Ok(pow_rational(t0, ti as i32)? * pow_rational(q0, qi as i32)?)
    };
    let one = BigRational::one();
    let mut total = BigRational::zero();
    for mu in Partition::all_of_size(n as u32) {
        let pole = |what: String| Error::EvaluationPole(format!("partition {mu}: {what}"));
        let mut num = mono_at(mu.n_mu() as i64, mu.n_mu_conj() as i64).map_err(|e| pole(e.to_string()))?;
        num *= (&one - t0) * (&one - q0);
        let mut sum = BigRational::zero();
        let mut den = BigRational::one();
        for (i, j) in mu.cells() {
            let (l, a) = (mu.leg(i, j) as i64, mu.arm(i, j) as i64);
            let (lp, ap) = (mu.co_leg(i, j) as i64, mu.co_arm(i, j) as i64);
            let w = mono_at(lp, ap).map_err(|e| pole(e.to_string()))?;
            if (i, j) != (0, 0) {
                num *= &one - &w;
            }
            sum += w;
            let f1 = &one - mono_at(1 + l, -a).map_err(|e| pole(e.to_string()))?;
            let f2 = &one - mono_at(-l, 1 + a).map_err(|e| pole(e.to_string()))?;
            if f1.is_zero() {
                return Err(pole(format!("1 - t^{} q^{} vanishes at cell ({i},{j})", 1 + l, -a)));
            }
            if f2.is_zero() {
                return Err(pole(format!("1 - t^{} q^{} vanishes at cell ({i},{j})", -l, 1 + a)));
            }
            den *= f1 * f2;
        }
        total += num * sum / den;
    }
    Ok(total)
}

/// A random rational `p/r` with `0 < |p| <= height`, `1 <= r <= height`, not `+-1`.
pub fn random_rational<R: Rng>(rng: &mut R, height: i64) -> BigRational {
    loop {
        let p = rng.gen_range(-height..=height);
        let r = rng.gen_range(1..=height);
        let x = BigRational::new(p.into(), r.into());
        if !x.is_zero() && x != BigRational::one() && x != -BigRational::one() {
            return x;
        }
    }
}

/// `S_{n,k}(q,t)` (or `R_{n,k}` when `little`): sum of `q^{C(n,2) + k/2 - area} t^{bounce}`.
pub fn schroder_qt(n: usize, k: usize, little: bool) -> MultiPoly {
    let mut p = MultiPoly::zero(&Vars::avt());
    for path in enumerate_schroder(n, k, little) {
        let v = 2 * c2(n) + k as i32 - path.area2() as i32;
        p.add_term(vec![0, v, path.bounce() as i32], BigInt::one());
    }
    p
}

/// `q^{C(n,2) - C(k,2)} S_{n,k}(q, q^{-1}) - [2n-k]! / ([n-k+1]! [n-k]! [k]!)`.
pub fn schroder_specialization_difference(n: usize, k: usize) -> Result<MultiPoly> {
    let s = t_to_q_inverse(&schroder_qt(n, k, false)).shift(&[0, 2 * (c2(n) - c2(k)), 0]);
    let (n32, k32) = (n as u32, k as u32);
    let den = &(&q_factorial(n32 - k32 + 1, QBase::Q) * &q_factorial(n32 - k32, QBase::Q))
        * &q_factorial(k32, QBase::Q);
    let rhs = q_factorial(2 * n32 - k32, QBase::Q).exact_div(&den)?;
    Ok(&s - &rhs)
}

/// Little Schröder analogue for `0 <= k < n`:
/// `q^{C(n,2) - C(k,2)} R_{n,k}(q, q^{-1}) - [2n-k]! / ([n][n+1][n-k-1]! [n-k]! [k]!)`.
pub fn little_schroder_specialization_difference(n: usize, k: usize) -> Result<MultiPoly> {
    if k >= n {
        return Err(Error::InvalidInput(format!("need k < n, got n={n} k={k}")));
    }
    let r = t_to_q_inverse(&schroder_qt(n, k, true)).shift(&[0, 2 * (c2(n) - c2(k)), 0]);
    let (n32, k32) = (n as u32, k as u32);
    let den = [
        q_integer(n32, QBase::Q),
        q_integer(n32 + 1, QBase::Q),
        q_factorial(n32 - k32 - 1, QBase::Q),
        q_factorial(n32 - k32, QBase::Q),
        q_factorial(k32, QBase::Q),
    ]
    .iter()
    .fold(MultiPoly::one(&Vars::avt()), |acc, f| &acc * f);
    let rhs = q_factorial(2 * n32 - k32, QBase::Q).exact_div(&den)?;
    Ok(&r - &rhs)
}

/// `Q_{n,m}(a,t) = sum_k sum over marked paths with k marks of a^{2k} t^{k + 2 area}`,
/// over the rectangle with `m` east and `n` north steps.
pub fn q_limit_poly(n: usize, m: usize) -> Result<MultiPoly> {
    if num_integer::gcd(n, m) != 1 {
        return Err(Error::InvalidInput(format!("{n} and {m} are not coprime")));
    }
    let mut p = MultiPoly::zero(&Vars::avt());
    for k in 0..n.min(m).max(1) {
        for mp in enumerate_marked(m, n, k) {
            let e = vec![2 * k as i32, 0, k as i32 + 2 * mp.path.area() as i32];
            p.add_term(e, BigInt::one());
        }
    }
    Ok(p)
}

/// Catalan number as a sanity value for coefficient sums.
pub fn catalan_number(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::eval::rational;
    use crate::algebra::{RationalPoint, HALF_Q};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly(terms: &[(i32, i32, i32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            &Vars::avt(),
            terms.iter().map(|&(a, v, t, c)| (vec![a, v, t], BigInt::from(c))),
        )
    }

    #[test]
    fn small_catalans() {
        assert_eq!(catalan_qt(1), poly(&[(0, 0, 0, 1)]));
        assert_eq!(catalan_qt(2), poly(&[(0, 2, 0, 1), (0, 0, 1, 1)]));
        let c3 = poly(&[(0, 6, 0, 1), (0, 4, 1, 1), (0, 2, 1, 1), (0, 2, 2, 1), (0, 0, 3, 1)]);
        assert_eq!(catalan_qt(3), c3);
    }

    #[test]
    fn coefficient_sums_and_symmetry() {
        for n in 1..=6 {
            let c = catalan_qt(n);
            assert_eq!(c.coefficient_sum(), catalan_number(n));
            assert_eq!(swap_q_t(&c).unwrap(), c, "n={n}");
        }
    }

    #[test]
    fn carlitz_riordan_matches_area() {
        assert_eq!(carlitz_riordan(0), poly(&[(0, 0, 0, 1)]));
        assert_eq!(carlitz_riordan(2), poly(&[(0, 0, 0, 1), (0, 2, 0, 1)]));
        assert_eq!(
            carlitz_riordan(3),
            poly(&[(0, 0, 0, 1), (0, 2, 0, 2), (0, 4, 0, 1), (0, 6, 0, 1)])
        );
        for n in 1..=8 {
            assert_eq!(carlitz_riordan(n), coarea_generating_function(n));
            // C_n at q = 1, as a polynomial in t, is the same series with q renamed to t.
            let at_q1 = catalan_qt(n).specialize(HALF_Q, &BigInt::one()).unwrap();
            assert_eq!(swap_q_t(&at_q1).unwrap(), carlitz_riordan(n));
        }
    }

    #[test]
    fn square_specialization() {
        for n in 1..=6 {
            assert!(catalan_square_spec_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn gh_at_fixed_points() {
        let v = catalan_gh_eval(2, &rational(2, 1), &rational(3, 1)).unwrap();
        assert_eq!(v, rational(5, 1));
        let v = catalan_gh_eval(1, &rational(7, 3), &rational(-2, 5)).unwrap();
        assert_eq!(v, rational(1, 1));
    }

    #[test]
    fn gh_matches_path_sum_at_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            let c = catalan_qt(n);
            let mut done = 0;
            while done < 5 {
                let (t0, q0) = (random_rational(&mut rng, 9), random_rational(&mut rng, 9));
                let Ok(gh) = catalan_gh_eval(n, &t0, &q0) else { continue };
                let pt = RationalPoint::new().with("q", q0).with("t", t0);
                assert_eq!(gh, c.evaluate(&pt).unwrap(), "n={n}");
                done += 1;
            }
        }
    }

    #[test]
    fn gh_reports_poles() {
        // q = 1 makes 1 - t^{-l} q^{1+a} vanish on the single cell of (1).
        let err = catalan_gh_eval(1, &rational(2, 1), &rational(1, 1)).unwrap_err();
        assert!(matches!(err, Error::EvaluationPole(_)));
    }

    #[test]
    fn schroder_specializes_to_multinomial() {
        for n in 1..=5 {
            for k in 0..=n {
                assert!(schroder_specialization_difference(n, k).unwrap().is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn schroder_two_one() {
        let s = schroder_qt(2, 1, false);
        assert_eq!(s.coefficient_sum(), BigInt::from(3));
        assert!(schroder_specialization_difference(2, 1).unwrap().is_zero());
        assert_eq!(schroder_qt(4, 2, true).coefficient_sum(), BigInt::from(9));
    }

    #[test]
    fn q_limit_examples() {
        assert_eq!(q_limit_poly(2, 3).unwrap(), poly(&[(0, 0, 0, 1), (0, 0, 2, 1), (2, 0, 3, 1)]));
        assert_eq!(q_limit_poly(1, 4).unwrap(), poly(&[(0, 0, 0, 1)]));
        assert!(q_limit_poly(2, 4).is_err());
    }
}
