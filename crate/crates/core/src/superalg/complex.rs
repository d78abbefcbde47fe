//! Tri-graded spaces spanned by explicit elements, homology of an odd
//! derivation by exact rank, and truncated windows of the free algebra.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::derivation::Operator;
use super::element::{add_degree, sub_degree, Degree, Mono, SuperElement};
use crate::algebra::{Echelon, MultiPoly, Vars, HALF_Q};
use crate::error::{Error, Result};

/// Tri-homogeneous elements, grouped by degree and assumed independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    rank: usize,
    pieces: BTreeMap<Degree, Vec<SuperElement>>,
}

impl GradedSpace {
    pub fn new(rank: usize) -> Self {
        GradedSpace { rank, pieces: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn push(&mut self, x: SuperElement) -> Result<()> {
        let d = x
            .degree()?
            .ok_or_else(|| Error::InvalidInput("zero element in a basis".into()))?;
        self.pieces.entry(d).or_default().push(x);
        Ok(())
    }

    pub fn piece(&self, d: Degree) -> &[SuperElement] {
        self.pieces.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degrees(&self) -> impl Iterator<Item = Degree> + '_ {
        self.pieces.keys().copied()
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn dims(&self) -> BTreeMap<Degree, usize> {
        self.pieces.iter().map(|(d, v)| (*d, v.len())).collect()
    }

    /// Checks that each piece is linearly independent.
    pub fn check_independent(&self) -> Result<()> {
        for (d, v) in &self.pieces {
            let mut ech = Echelon::new();
            for x in v {
                if !ech.insert(&x.as_vector()) {
                    return Err(Error::InvalidInput(format!("{x} is dependent in degree {d:?}")));
                }
            }
        }
        Ok(())
    }
}

/// `sum dim * a^i q^j t^k` in the `(a, v, t)` ring.
pub fn poincare_of(dims: &BTreeMap<Degree, usize>) -> MultiPoly {
    MultiPoly::from_terms(
        &Vars::avt(),
        dims.iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&(a, q, t), &c)| (vec![a, 2 * q, t], BigInt::from(c))),
    )
}

/// Collapses `a^i q^j t^k` to `q^{2i+j} t^k`.
pub fn khovanov_regrade(p: &MultiPoly) -> MultiPoly {
    p.map_exponents(p.vars(), |e| vec![0, e[1] + 4 * e[0], e[2]])
}

/// The value at `t = -1`.
pub fn euler_characteristic_of(p: &MultiPoly) -> MultiPoly {
    p.specialize("t", &-BigInt::one()).expect("t = -1 is a unit")
}

/// Homology dimensions `dim C_D - rank(d|C_D) - rank(d|C_{D - shift})` at
/// the degrees selected by `report`. With `closed` set, every image is
/// required to lie in the span of the space.
pub fn homology(
    space: &GradedSpace,
    d: Operator,
    report: impl Fn(Degree) -> bool,
    closed: bool,
) -> Result<BTreeMap<Degree, usize>> {
    let shift = d.shift();
    let mut out_rank: BTreeMap<Degree, usize> = BTreeMap::new();
    let mut rank_of = |deg: Degree| -> Result<usize> {
        if let Some(&r) = out_rank.get(&deg) {
            return Ok(r);
        }
        let target = add_degree(deg, shift);
        let mut span = Echelon::new();
        if closed {
            for y in space.piece(target) {
                span.insert(&y.as_vector());
            }
        }
        let mut ech = Echelon::new();
        for x in space.piece(deg) {
            let img = d.apply(x)?;
            if img.is_zero() {
                continue;
            }
            let v = img.as_vector();
            if closed && !span.contains(&v) {
                return Err(Error::NotInvariant(format!("{d} maps {x} to {img}")));
            }
            ech.insert(&v);
        }
        out_rank.insert(deg, ech.rank());
        Ok(ech.rank())
    };
    let mut result = BTreeMap::new();
    let wanted: Vec<Degree> = space.degrees().filter(|&x| report(x)).collect();
    for deg in wanted {
        let dim = space.piece(deg).len();
        let out = rank_of(deg)?;
        let inc = rank_of(sub_degree(deg, shift))?;
        let h = dim
            .checked_sub(out + inc)
            .ok_or_else(|| Error::NotInvariant(format!("{d} does not square to zero in degree {deg:?}")))?;
        if h > 0 {
            result.insert(deg, h);
        }
    }
    if closed {
        for deg in space.degrees().collect::<Vec<_>>() {
            rank_of(deg)?;
        }
    }
    Ok(result)
}

/// Monomials of the free algebra on `n - 1` even and odd generators with
/// q-degree at most `max_q`.
pub fn stable_window(n: usize, max_q: i32) -> GradedSpace {
    let rank = n.saturating_sub(1);
    let mut space = GradedSpace::new(rank);
    let mut m = Mono::one(rank);
    fn odd(space: &mut GradedSpace, m: &mut Mono, k: usize, rank: usize, budget: i32) {
        if k > rank {
            let x = SuperElement::monomial(m.clone(), BigRational::one());
            space.push(x).expect("monomials are homogeneous");
            return;
        }
        odd(space, m, k + 1, rank, budget);
        let cost = 2 * k as i32;
        if cost <= budget {
            m.xi |= 1 << (k - 1);
            odd(space, m, k + 1, rank, budget - cost);
            m.xi &= !(1 << (k - 1));
        }
    }
    fn even(space: &mut GradedSpace, m: &mut Mono, k: usize, rank: usize, budget: i32) {
        if k > rank {
            odd(space, m, 1, rank, budget);
            return;
        }
        let cost = 2 * k as i32 + 2;
        let mut used = 0;
        loop {
            m.e[k - 1] = (used / cost) as u32;
            even(space, m, k + 1, rank, budget - used);
            used += cost;
            if used > budget {
                break;
            }
        }
        m.e[k - 1] = 0;
    }
    if max_q >= 0 {
        even(&mut space, &mut m, 1, rank, max_q);
    }
    space
}

/// Poincaré series of the free algebra through `q^{cutoff}`.
pub fn stable_poincare(n: usize, cutoff: i32) -> MultiPoly {
    poincare_of(&stable_window(n, cutoff).dims())
}

/// Closed form `prod_k (1 + a^2 q^{2k} t^{2k+1}) / (1 - q^{2k+2} t^{2k})`
/// expanded through `q^{cutoff}`.
pub fn stable_poincare_formula(n: usize, cutoff: i32) -> Result<MultiPoly> {
    let vars = Vars::avt();
    let one = MultiPoly::one(&vars);
    let mut num = one.clone();
    let mut den = one.clone();
    for k in 1..n as i32 {
        num = &num * &(&one + &MultiPoly::monomial(&vars, vec![2, 4 * k, 2 * k + 1], 1));
        den = &den * &(&one - &MultiPoly::monomial(&vars, vec![0, 4 * k + 4, 2 * k], 1));
    }
    num.series_quotient(&den, HALF_Q, 2 * cutoff)
}

/// Homology of `d` on the free algebra in all degrees with q-degree at most
/// `cutoff`, computed on a window wide enough to include incoming pieces.
pub fn stable_homology(n: usize, d: Operator, cutoff: i32) -> Result<BTreeMap<Degree, usize>> {
    let window = stable_window(n, cutoff + d.shift().1.abs());
    homology(&window, d, |deg| deg.1 <= cutoff, false)
}
