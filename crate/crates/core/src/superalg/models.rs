//! Finite models of torus knot homology inside the free superalgebra:
//! `T(2,2k+1)`, `T(3,k)` and `T(4,5)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::complex::{euler_characteristic_of, homology, khovanov_regrade, poincare_of, GradedSpace};
use super::derivation::{Operator, OperatorWord};
use super::element::{Degree, SuperElement};
use crate::algebra::{Echelon, MultiPoly, Vars, HALF_Q};
use crate::error::{Error, Result};
use crate::homfly::{IdentityCheck, TorusKnot};
use crate::paths::{enumerate_dyck, enumerate_marked, enumerate_schroder};
use crate::symfun::{l_space, SpanSpace, SymRing};

/// `(level, element, word, (a, q, t))` for the 45 basis elements of the
/// `T(4,5)` model. Words act on `xi1*xi2*xi3`, rightmost operator first.
pub const FOUR_FIVE_TABLE: &[(usize, &str, &str, Degree)] = &[
    (3, "xi1*xi2*xi3", "1", (6, 12, 15)),
    (2, "xi1*xi2", "d-3", (4, 6, 8)),
    (2, "xi1*xi3", "d-2", (4, 8, 10)),
    (2, "xi2*xi3", "d-1", (4, 10, 12)),
    (2, "e1*xi1*xi2", "a2", (4, 10, 10)),
    (2, "e1*xi1*xi3 - e2*xi1*xi2", "d0", (4, 12, 12)),
    (2, "e1*xi2*xi3 - e2*xi1*xi3 + e3*xi1*xi2", "d1", (4, 14, 14)),
    (2, "e1^2*xi1*xi2", "a1", (4, 14, 12)),
    (2, "e1^2*xi1*xi3 - e1*e2*xi1*xi2", "d2", (4, 16, 14)),
    (2, "e1^3*xi1*xi2", "d3", (4, 18, 14)),
    (1, "xi1", "d-2 d-3", (2, 2, 3)),
    (1, "xi2", "d-1 d-3", (2, 4, 5)),
    (1, "xi3", "d-1 d-2", (2, 6, 7)),
    (1, "e1*xi1", "d0 d-3", (2, 6, 5)),
    (1, "e1*xi2 - e2*xi1", "d1 d-3", (2, 8, 7)),
    (1, "e1*xi3 - e3*xi1", "d1 d-2", (2, 10, 9)),
    (1, "e1*xi3 - e2*xi2", "d0 d-1", (2, 10, 9)),
    (1, "e1^2*xi1", "d2 d-3", (2, 10, 7)),
    (1, "e1^3*xi1", "d2 a2", (2, 14, 9)),
    (1, "e1^4*xi1", "d2 a1", (2, 18, 11)),
    (1, "e1^5*xi1", "d2 d3", (2, 22, 13)),
    (1, "e1*xi2", "d-1 a2", (2, 8, 7)),
    (1, "e1^2*xi2", "d-1 a1", (2, 12, 9)),
    (1, "e1^3*xi2", "d-1 d3", (2, 16, 11)),
    (1, "e1^2*xi2 - e1*e2*xi1", "d1 a2", (2, 12, 9)),
    (1, "e1^3*xi2 - e1^2*e2*xi1", "d1 a1", (2, 16, 11)),
    (1, "e1^2*xi3 - e1*e2*xi2", "d2 d-1", (2, 14, 11)),
    (1, "e2*xi3 - e3*xi2", "d1 d-1", (2, 12, 11)),
    (1, "e1^4*xi2 - e1^3*e2*xi1", "d1 d3", (2, 20, 13)),
    (1, "e2^2*xi1 - e1*e3*xi1 - e1*e2*xi2 + e1^2*xi3", "d1 d0", (2, 14, 11)),
    (1, "e1*e2^2*xi1 - e1^2*e3*xi1 - e1^2*e2*xi2 + e1^3*xi3", "d1 d2", (2, 18, 13)),
    (0, "1", "d-1 d-2 d-3", (0, 0, 0)),
    (0, "e1", "d1 d-2 d-3", (0, 4, 2)),
    (0, "e2", "d1 d-1 d-3", (0, 6, 4)),
    (0, "e3", "d1 d-1 d-2", (0, 8, 6)),
    (0, "e1^2", "d1 d0 d-3", (0, 8, 4)),
    (0, "e1^3", "d1 d2 d-3", (0, 12, 6)),
    (0, "e1^4", "d1 d2 a2", (0, 16, 8)),
    (0, "e1^5", "d1 d2 a1", (0, 20, 10)),
    (0, "e1^6", "d1 d2 d3", (0, 24, 12)),
    (0, "e1*e2", "d1 d-1 a2", (0, 10, 6)),
    (0, "e1*e3 - e2^2", "d1 d0 d-1", (0, 12, 8)),
    (0, "e1^2*e3 - e1*e2^2", "d1 d2 d-1", (0, 16, 10)),
    (0, "e1^2*e2", "d1 d-1 a1", (0, 14, 8)),
    (0, "e1^3*e2", "d1 d-1 d3", (0, 18, 10)),
];

/// Level-one elements of the `T(3,4)` model; the `T(3,k)` level one is
/// spanned by their products with the top-level even monomials.
const THREE_FOUR_LEVEL_ONE: [&str; 5] = ["xi1", "xi2", "e1*xi1", "e1*xi2 - e2*xi1", "e1^2*xi1"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelRow {
    pub level: usize,
    pub element: SuperElement,
    pub word: Option<OperatorWord>,
    pub degree: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriGradedModel {
    knot: TorusKnot,
    rank: usize,
    rows: Vec<ModelRow>,
}

impl TriGradedModel {
    fn from_elements(knot: TorusKnot, rank: usize, elements: Vec<SuperElement>) -> Result<Self> {
        let mut rows = Vec::with_capacity(elements.len());
        for (i, element) in elements.into_iter().enumerate() {
            let degree = element.degree().ok().flatten().ok_or_else(|| Error::Construction {
                row: i,
                reason: format!("{element} is zero or not tri-homogeneous"),
            })?;
            let level = (degree.0 / 2) as usize;
            rows.push(ModelRow { level, element, word: None, degree });
        }
        let model = TriGradedModel { knot, rank, rows };
        model.space().check_independent()?;
        Ok(model)
    }

    pub fn knot(&self) -> TorusKnot {
        self.knot
    }

    /// Number of even (and of odd) generators of the ambient algebra.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[ModelRow] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn level(&self, j: usize) -> impl Iterator<Item = &ModelRow> + '_ {
        self.rows.iter().filter(move |r| r.level == j)
    }

    pub fn level_dims(&self) -> Vec<usize> {
        let top = self.rows.iter().map(|r| r.level).max().unwrap_or(0);
        (0..=top).map(|j| self.level(j).count()).collect()
    }

    pub fn space(&self) -> GradedSpace {
        let mut s = GradedSpace::new(self.rank);
        for r in &self.rows {
            s.push(r.element.clone()).expect("rows are homogeneous");
        }
        s
    }

    pub fn poincare(&self) -> MultiPoly {
        let mut dims = BTreeMap::new();
        for r in &self.rows {
            *dims.entry(r.degree).or_insert(0) += 1;
        }
        poincare_of(&dims)
    }

    /// Poincaré polynomial at `t = -1`.
    pub fn euler_characteristic(&self) -> MultiPoly {
        euler_characteristic_of(&self.poincare())
    }

    /// Homology of `d` restricted to the model, which must be `d`-stable.
    pub fn homology(&self, d: Operator) -> Result<BTreeMap<Degree, usize>> {
        homology(&self.space(), d, |_| true, true)
    }

    /// Homology of `d_2` collapsed to `(q, t)` by `a -> q^2`.
    pub fn khovanov_poincare(&self) -> Result<MultiPoly> {
        if self.knot.n() > 4 {
            return Err(Error::InvalidInput("d2 is only defined for at most 4 strands".into()));
        }
        Ok(khovanov_regrade(&poincare_of(&self.homology(Operator::D(2))?)))
    }

    /// Level-`j` part of the Poincaré polynomial, without the `a` power.
    pub fn level_poincare(&self, j: usize) -> MultiPoly {
        self.poincare().coefficient_of("a", 2 * j as i32)
    }
}

fn parse(rank: usize, s: &str) -> SuperElement {
    SuperElement::parse(rank, s).expect("built-in element strings parse")
}

fn e_monomial(rank: usize, pows: &[u32]) -> SuperElement {
    let s: Vec<String> = pows
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, p)| format!("e{}^{p}", i + 1))
        .collect();
    if s.is_empty() {
        SuperElement::one(rank)
    } else {
        parse(rank, &s.join("*"))
    }
}

/// `T(2, 2k+1)`: `e1^i` for `i <= k` and `e1^i xi1` for `i < k`.
pub fn two_strand_model(k: usize) -> Result<TriGradedModel> {
    let knot = TorusKnot::new(2, 2 * k + 1)?;
    let mut els: Vec<SuperElement> = (0..=k).map(|i| e_monomial(1, &[i as u32])).collect();
    let xi = parse(1, "xi1");
    els.extend((0..k).map(|i| e_monomial(1, &[i as u32]).mul(&xi)));
    TriGradedModel::from_elements(knot, 1, els)
}

/// `e1^i e2^j` with `i + 3j <= bound`, ordered by `(j, i)`.
fn three_strand_monomials(bound: i64) -> Vec<SuperElement> {
    let mut out = Vec::new();
    let mut j = 0;
    while 3 * j <= bound {
        for i in 0..=(bound - 3 * j) {
            out.push(e_monomial(2, &[i as u32, j as u32]));
        }
        j += 1;
    }
    out
}

/// `T(3, k)` for `k` prime to 3. Level 0 is `e1^i e2^j` with
/// `i + 3j <= k - 1`, level 2 is `e1^i e2^j xi1 xi2` with `i + 3j <= k - 4`,
/// and level 1 is spanned by the top even monomials times the `T(3,4)` level one.
pub fn three_strand_model(k: usize) -> Result<TriGradedModel> {
    let knot = TorusKnot::new(3, k)?;
    let kk = k as i64;
    let mut els = three_strand_monomials(kk - 1);
    match k {
        1 => {}
        2 => els.push(parse(2, "xi1")),
        _ => {
            let top = three_strand_monomials(kk - 4);
            let mut spans: BTreeMap<Degree, Echelon<_>> = BTreeMap::new();
            for t in &top {
                for p in THREE_FOUR_LEVEL_ONE {
                    let x = t.mul(&parse(2, p));
                    let d = x.degree()?.expect("nonzero product");
                    if spans.entry(d).or_default().insert(&x.as_vector()) {
                        els.push(x);
                    }
                }
            }
            let xx = parse(2, "xi1*xi2");
            els.extend(top.iter().map(|t| t.mul(&xx)));
        }
    }
    TriGradedModel::from_elements(knot, 2, els)
}

/// `T(4,5)`, generated by applying each table word to `xi1*xi2*xi3` and
/// checked against the tabulated element and grading.
pub fn four_five_model() -> Result<TriGradedModel> {
    let top = parse(3, "xi1*xi2*xi3");
    let mut rows = Vec::with_capacity(FOUR_FIVE_TABLE.len());
    for (row, &(level, element, word, degree)) in FOUR_FIVE_TABLE.iter().enumerate() {
        let fail = |reason: String| Error::Construction { row, reason };
        let word: OperatorWord = word.parse()?;
        let expected = parse(3, element);
        let got = word.apply(&top)?;
        if got.is_zero() {
            return Err(fail(format!("{word} gives 0, expected {expected}")));
        }
        if got.ratio_to(&expected).is_none() {
            return Err(fail(format!("{word} gives {got}, expected a multiple of {expected}")));
        }
        let d = got.degree()?.expect("nonzero");
        if d != degree || 2 * level as i32 != d.0 {
            return Err(fail(format!("{word} has grading {d:?}, table says {degree:?}")));
        }
        rows.push(ModelRow { level, element: expected, word: Some(word), degree });
    }
    let model = TriGradedModel { knot: TorusKnot::new(4, 5)?, rank: 3, rows };
    model.space().check_independent()?;
    Ok(model)
}

/// The model for any supported torus knot: `T(1,m)`, `T(2,m)`, `T(3,m)`, `T(4,5)`.
pub fn build_model(knot: TorusKnot) -> Result<TriGradedModel> {
    match (knot.n(), knot.m()) {
        (1, _) => TriGradedModel::from_elements(knot, 0, vec![SuperElement::one(0)]),
        (2, m) => two_strand_model((m - 1) / 2),
        (3, m) => three_strand_model(m),
        (4, 5) => four_five_model(),
        (n, m) => Err(Error::InvalidInput(format!("no model is available for T({n},{m})"))),
    }
}

fn mono(a: i32, q: i32, t: i32) -> MultiPoly {
    MultiPoly::monomial(&Vars::avt(), vec![a, 2 * q, t], 1)
}

/// Closed form for the `T(2,2k+1)` Poincaré polynomial.
pub fn two_strand_formula(k: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&Vars::avt());
    for i in 0..=k as i32 {
        p += &mono(0, 4 * i, 2 * i);
    }
    for i in 0..k as i32 {
        p += &mono(2, 4 * i + 2, 2 * i + 3);
    }
    p
}

/// Closed form for the `T(3,k)` Poincaré polynomial.
pub fn three_strand_formula(k: usize) -> MultiPoly {
    let k = k as i32;
    let mut p = mono(0, 0, 0);
    let pairs = |bound: i32| {
        (0..)
            .take_while(move |j| 3 * j <= bound)
            .flat_map(move |j| (0..=bound - 3 * j).map(move |i| (i, j)))
    };
    for (i, j) in pairs(k - 1).filter(|&p| p != (0, 0)) {
        let base = mono(0, 4 * i + 6 * j, 2 * i + 4 * j);
        p += &(&base * &(&mono(0, 0, 0) + &mono(2, -2, 1)));
    }
    for (i, j) in pairs(k - 4) {
        let base = mono(4, 6 + 4 * i + 6 * j, 8 + 2 * i + 4 * j);
        p += &(&base * &(&mono(0, 0, 0) + &mono(-2, 2, -1)));
    }
    p
}

/// Model-versus-path comparisons for one model, named as in the report:
/// `schroder-levels` and `dyck-level-zero` for `T(n, n+1)`, `marked-levels`
/// per level at `q = 1`, and `q-limit` for the whole `a`-expansion at `q = 1`.
pub fn conjecture_checks(model: &TriGradedModel) -> Result<Vec<IdentityCheck>> {
    let (n, m) = (model.knot.n(), model.knot.m());
    let vars = Vars::avt();
    let mut out = Vec::new();
    let levels = n;
    if m == n + 1 {
        for k in 0..levels {
            let mut rhs = MultiPoly::zero(&vars);
            for path in enumerate_schroder(n, k, true) {
                let (a2, b) = (path.area2() as i32, path.bounce() as i32);
                rhs.add_term(vec![0, 2 * (k as i32 + a2 + 2 * b), 2 * k as i32 + a2], BigInt::one());
            }
            out.push(IdentityCheck {
                name: "schroder-levels",
                knot: (n, m),
                level: k,
                difference: &model.level_poincare(k) - &rhs,
            });
        }
        let mut rhs = MultiPoly::zero(&vars);
        for path in enumerate_dyck(n, n) {
            let (s, b) = (path.area() as i32, path.bounce() as i32);
            rhs.add_term(vec![0, 4 * (s + b), 2 * s], BigInt::one());
        }
        out.push(IdentityCheck {
            name: "dyck-level-zero",
            knot: (n, m),
            level: 0,
            difference: &model.level_poincare(0) - &rhs,
        });
    }
    let at_q1 = |p: &MultiPoly| p.specialize(HALF_Q, &BigInt::one()).expect("q = 1 is a unit");
    for k in 0..levels {
        let mut rhs = MultiPoly::zero(&vars);
        for mp in enumerate_marked(m, n, k) {
            rhs.add_term(vec![0, 0, k as i32 + 2 * mp.path.area() as i32], BigInt::one());
        }
        out.push(IdentityCheck {
            name: "marked-levels",
            knot: (n, m),
            level: k,
            difference: &at_q1(&model.level_poincare(k)) - &rhs,
        });
    }
    out.push(IdentityCheck {
        name: "q-limit",
        knot: (n, m),
        level: 0,
        difference: &at_q1(&model.poincare()) - &crate::qt::q_limit_poly(n, m)?,
    });
    Ok(out)
}

/// Whether the level-zero part of the model spans the associated graded of
/// `L_n` for the filtration by number of factors (the `b`-maximal parts).
pub fn level_zero_matches_l_space(model: &TriGradedModel) -> Result<bool> {
    let n = model.knot.n();
    let ring = SymRing::for_size(n);
    let mut gens = Vec::new();
    for row in model.level(0) {
        let mut p = ring.zero();
        for (mono, c) in row.element.terms() {
            if !c.denom().is_one() || mono.e.len() > ring.rank() {
                return Err(Error::InvalidInput(format!("{} is not an integral e-polynomial", row.element)));
            }
            let mut exp: Vec<i32> = mono.e.iter().map(|&x| x as i32).collect();
            exp.resize(ring.rank(), 0);
            p = p.add(&ring.from_exponents(exp, c.numer().clone()));
        }
        if !p.is_zero() {
            gens.push(p);
        }
    }
    let ours = SpanSpace::new(gens)?;
    ours.same_span(&l_space(&ring, n)?.initial_forms()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homfly::homfly_jones;

    fn knot(n: usize, m: usize) -> TorusKnot {
        TorusKnot::new(n, m).unwrap()
    }

    #[test]
    fn trefoil_model() {
        let m = build_model(knot(2, 3)).unwrap();
        let els: Vec<String> = m.rows().iter().map(|r| r.element.to_string()).collect();
        assert_eq!(els, ["1", "e1", "xi1"]);
        assert_eq!(m.poincare(), two_strand_formula(1));
    }

    #[test]
    fn poincare_formulas() {
        for k in 0..=6 {
            assert_eq!(two_strand_model(k).unwrap().poincare(), two_strand_formula(k), "k={k}");
        }
        for k in [1, 2, 4, 5, 7, 8] {
            assert_eq!(three_strand_model(k).unwrap().poincare(), three_strand_formula(k), "k={k}");
        }
    }

    #[test]
    fn euler_characteristics() {
        for (n, m) in [(1, 4), (2, 3), (2, 7), (3, 4), (3, 5), (3, 8), (4, 5)] {
            let model = build_model(knot(n, m)).unwrap();
            assert_eq!(model.euler_characteristic(), homfly_jones(knot(n, m)).unwrap().p_s, "T({n},{m})");
        }
    }

    #[test]
    fn four_five_table() {
        let m = four_five_model().unwrap();
        assert_eq!(m.dim(), 45);
        assert_eq!(m.level_dims(), vec![14, 21, 9, 1]);
        assert_eq!(m.rows()[0].degree, (6, 12, 15));
    }

    #[test]
    fn d1_homology_is_one_dimensional() {
        for (n, m) in [(3, 4), (3, 5), (3, 7), (4, 5)] {
            let h = build_model(knot(n, m)).unwrap().homology(Operator::D(1)).unwrap();
            assert_eq!(h, BTreeMap::from([((0, 0, 0), 1)]), "T({n},{m})");
        }
    }

    #[test]
    fn khovanov() {
        let p34 = build_model(knot(3, 4)).unwrap().khovanov_poincare().unwrap();
        let expect = [(0, 0), (4, 2), (6, 4), (6, 3), (10, 5)];
        assert_eq!(p34, expect.iter().map(|&(q, t)| mono(0, q, t)).fold(MultiPoly::zero(&Vars::avt()), |a, b| &a + &b));
        for k in 1..=4 {
            let model = two_strand_model(k).unwrap();
            assert_eq!(model.khovanov_poincare().unwrap(), khovanov_regrade(&model.poincare()));
        }
    }

    #[test]
    fn three_strand_level_zero_is_a_tensor_product() {
        for k in [4, 5, 7, 8, 10] {
            let model = three_strand_model(k).unwrap();
            let base = ["1", "e1", "e1^2", "e1^3", "e2"].map(|s| parse(2, s));
            let mut span = Echelon::new();
            for t in three_strand_monomials(k as i64 - 4) {
                for b in &base {
                    span.insert(&t.mul(b).as_vector());
                }
            }
            let ours: Vec<_> = model.level(0).map(|r| r.element.as_vector()).collect();
            assert_eq!(span.rank(), ours.len(), "k={k}");
            assert!(ours.iter().all(|v| span.contains(v)), "k={k}");
        }
    }

    #[test]
    fn unsupported_knots() {
        assert!(build_model(knot(4, 7)).is_err());
        assert!(build_model(knot(5, 6)).is_err());
    }
}
