use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qtcat::algebra::counting::binomial;
use qtcat::algebra::{q_binomial, MultiPoly, QBase, Vars, HALF_Q};
use qtcat::superalg::{Mono, Operator, SuperElement};

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((-3i32..4, -4i32..5, -2i32..3), -9i64..10), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(&Vars::avt(), terms.into_iter().map(|((a, v, t), c)| (vec![a, v, t], BigInt::from(c))))
    })
}

fn element_strategy() -> impl Strategy<Value = SuperElement> {
    prop::collection::vec(((0u32..3, 0u32..2, 0u32..2), 0u32..8, -5i64..6), 0..5).prop_map(|terms| {
        let mut x = SuperElement::zero(3);
        for ((e1, e2, e3), xi, c) in terms {
            let m = Mono { xi, e: vec![e1, e2, e3] };
            x.add_term(m, BigRational::from_integer(c.into()));
        }
        x
    })
}

fn parity_part(x: &SuperElement, odd: bool) -> SuperElement {
    let mut out = SuperElement::zero(x.rank());
    for (m, c) in x.terms() {
        if (m.level() % 2 == 1) == odd {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

const OPS: [Operator; 9] = [
    Operator::D(-3),
    Operator::D(-2),
    Operator::D(-1),
    Operator::D(0),
    Operator::D(1),
    Operator::D(2),
    Operator::D(3),
    Operator::Alpha(1),
    Operator::Alpha(2),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&Vars::avt()), a.clone());
    }

    #[test]
    fn divide_after_multiply(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in poly_strategy()) {
        let j = a.to_json();
        prop_assert_eq!(MultiPoly::from_json(&j).unwrap(), a.clone());
        let text = serde_json::to_string(&j).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MultiPoly::from_json(&back).unwrap(), a);
    }

    // prod_{i<n} (1 + q^i z) = sum_k q^{C(k,2)} binom(n,k)_q z^k, with z = a.
    #[test]
    fn q_binomial_theorem(n in 0u32..=8) {
        let vars = Vars::avt();
        let mut lhs = MultiPoly::one(&vars);
        for i in 0..n as i32 {
            lhs = &lhs * &(&MultiPoly::one(&vars) + &MultiPoly::monomial(&vars, vec![1, 2 * i, 0], 1));
        }
        for k in 0..=n {
            let c2 = (k * k.saturating_sub(1) / 2) as i32;
            let rhs = q_binomial(n, k, QBase::Q).shift(&[0, 2 * c2, 0]);
            prop_assert_eq!(lhs.coefficient_of("a", k as i32), rhs);
        }
    }

    #[test]
    fn q_binomial_at_one(n in 0u32..=12, k in 0u32..=12) {
        prop_assume!(k <= n);
        for base in [QBase::Q, QBase::QSquared] {
            let at1 = q_binomial(n, k, base).specialize(HALF_Q, &BigInt::from(1)).unwrap();
            prop_assert_eq!(at1.coeff(&[0, 0, 0]), binomial(n as i64, k as i64));
        }
    }

    #[test]
    fn supercommutativity(x in element_strategy(), y in element_strategy()) {
        for (px, py) in [(false, false), (false, true), (true, false), (true, true)] {
            let (a, b) = (parity_part(&x, px), parity_part(&y, py));
            let sign = if px && py { -1 } else { 1 };
            prop_assert_eq!(a.mul(&b), b.mul(&a).scale(&BigRational::from_integer(sign.into())));
        }
    }

    #[test]
    fn leibniz_rule(x in element_strategy(), y in element_strategy()) {
        for d in OPS.into_iter().take(7) {
            for odd in [false, true] {
                let a = parity_part(&x, odd);
                let sign = BigRational::from_integer(if odd { -1 } else { 1 }.into());
                let lhs = d.apply(&a.mul(&y)).unwrap();
                let rhs = d.apply(&a).unwrap().mul(&y).add(&a.mul(&d.apply(&y).unwrap()).scale(&sign));
                prop_assert_eq!(lhs, rhs, "{}", d);
            }
        }
    }

    #[test]
    fn differentials_anticommute(x in element_strategy()) {
        for d in OPS {
            for e in OPS {
                let Ok(dx) = d.apply(&x) else { continue };
                let Ok(ex) = e.apply(&x) else { continue };
                let (Ok(edx), Ok(dex)) = (e.apply(&dx), d.apply(&ex)) else { continue };
                prop_assert!(edx.add(&dex).is_zero(), "{} {}", d, e);
            }
        }
    }

    #[test]
    fn derivations_shift_degree(x in element_strategy()) {
        for d in OPS {
            let Ok(dx) = d.apply(&x) else { continue };
            for (m, _) in dx.terms() {
                // Every output monomial has a preimage monomial one shift away.
                let back = qtcat::superalg::element::sub_degree(m.degree(), d.shift());
                prop_assert!(x.terms().any(|(n, _)| n.degree() == back));
            }
        }
    }
}
