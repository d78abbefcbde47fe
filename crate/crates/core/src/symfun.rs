//! Symmetric functions in the elementary basis `e_1..e_N`.
//!
//! A monomial `e_1^{c_1} ... e_N^{c_N}` has degree `S = sum k c_k` and
//! filtration degree `b = sum c_k`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::linalg::{Echelon, SparseVec};
use crate::algebra::{MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, DyckPath, Partition};

/// The polynomial ring in `e_1..e_N` with `h_0..h_N` precomputed.
#[derive(Clone, Debug)]
pub struct SymRing {
    vars: Vars,
    h: Vec<MultiPoly>,
}

/// An element of a [`SymRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly(MultiPoly);

impl SymRing {
    pub fn new(n: usize) -> Self {
        let vars = Vars::new((1..=n).map(|k| format!("e{k}")));
        let mut h = vec![MultiPoly::one(&vars)];
        for k in 1..=n {
            let mut hk = MultiPoly::zero(&vars);
            for i in 1..=k {
                let term = &MultiPoly::var(&vars, &format!("e{i}")) * &h[k - i];
                if i % 2 == 1 {
                    hk += &term;
                } else {
                    hk -= &term;
                }
            }
            h.push(hk);
        }
        SymRing { vars, h }
    }

    /// Ring large enough for the diagrams of Dyck paths in an `n x n` square.
    pub fn for_size(n: usize) -> Self {
        Self::new((2 * n).max(1))
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    fn check_index(&self, k: usize) {
        assert!(k <= self.rank(), "index {k} exceeds the ring's {} generators", self.rank());
    }

    pub fn one(&self) -> SymPoly {
        SymPoly(MultiPoly::one(&self.vars))
    }

    pub fn zero(&self) -> SymPoly {
        SymPoly(MultiPoly::zero(&self.vars))
    }

    /// `e_k`, with `e_0 = 1` and `e_k = 0` for negative `k`.
    pub fn e(&self, k: i64) -> SymPoly {
        match k {
            k if k < 0 => self.zero(),
            0 => self.one(),
            k => {
                self.check_index(k as usize);
                SymPoly(MultiPoly::var(&self.vars, &format!("e{k}")))
            }
        }
    }

    /// `h_k = sum_{i>=1} (-1)^{i-1} e_i h_{k-i}`, zero for negative `k`.
    pub fn h(&self, k: i64) -> SymPoly {
        if k < 0 {
            return self.zero();
        }
        self.check_index(k as usize);
        SymPoly(self.h[k as usize].clone())
    }

    pub fn from_exponents(&self, exp: Vec<i32>, c: BigInt) -> SymPoly {
        SymPoly(MultiPoly::monomial(&self.vars, exp, c))
    }

    /// `det(h_{mu_i - i + j})`.
    pub fn schur(&self, mu: &Partition) -> SymPoly {
        let s = mu.len();
        let entries: Vec<Vec<SymPoly>> = (1..=s)
            .map(|i| {
                (1..=s)
                    .map(|j| self.h(mu.part(i) as i64 - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        self.determinant(&entries)
    }

    /// `det(e_{mu'_i - i + j})`, the dual form.
    pub fn schur_dual(&self, mu: &Partition) -> SymPoly {
        let conj = mu.conjugate();
        let s = conj.len();
        let entries: Vec<Vec<SymPoly>> = (1..=s)
            .map(|i| {
                (1..=s)
                    .map(|j| self.e(conj.part(i) as i64 - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        self.determinant(&entries)
    }

    /// Laplace expansion by rows with a subset table over used columns.
    fn determinant(&self, m: &[Vec<SymPoly>]) -> SymPoly {
        let s = m.len();
        if s == 0 {
            return self.one();
        }
        let mut dp: Vec<Option<MultiPoly>> = vec![None; 1 << s];
        dp[0] = Some(MultiPoly::one(&self.vars));
        for mask in 0usize..(1 << s) {
            let Some(cur) = dp[mask].take() else { continue };
            if mask == (1 << s) - 1 {
                dp[mask] = Some(cur);
                continue;
            }
            let row = mask.count_ones() as usize;
            for col in 0..s {
                if mask >> col & 1 == 1 || m[row][col].0.is_zero() {
                    continue;
                }
                let above = (mask >> (col + 1)).count_ones();
                let mut term = &cur * &m[row][col].0;
                if above % 2 == 1 {
                    term = -term;
                }
                let slot = &mut dp[mask | 1 << col];
                match slot {
                    Some(acc) => *acc += &term,
                    None => *slot = Some(term),
                }
            }
        }
        SymPoly(dp[(1 << s) - 1].take().unwrap_or_else(|| MultiPoly::zero(&self.vars)))
    }

    /// Product of the Schur functions of the slices of a square path.
    pub fn z_of_path(&self, p: &DyckPath) -> SymPoly {
        p.slicing()
            .slices
            .iter()
            .fold(self.one(), |acc, s| acc.mul(&self.schur(s)))
    }

    /// Rewrites `p` as a polynomial in `h_1..h_N`, with variables named `h1, h2, ...`.
    pub fn to_h_basis(&self, p: &SymPoly) -> MultiPoly {
        // The involution e_k <-> h_k is a ring map, so p(e) = Q(h) iff Q(e) = p(h).
        let mut out = MultiPoly::zero(&self.vars);
        for (exp, c) in p.0.terms() {
            let mut term = MultiPoly::constant(&self.vars, c.clone());
            for (k, &x) in exp.iter().enumerate() {
                term = &term * &self.h[k + 1].pow(x as u32);
            }
            out += &term;
        }
        let hvars = Vars::new((1..=self.rank()).map(|k| format!("h{k}")));
        out.map_exponents(&hvars, |e| e.to_vec())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }
}

fn s_degree(exp: &[i32]) -> i32 {
    exp.iter().enumerate().map(|(k, &c)| (k as i32 + 1) * c).sum()
}

fn b_degree(exp: &[i32]) -> i32 {
    exp.iter().sum()
}

impl SymPoly {
    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        SymPoly(&self.0 * &other.0)
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        SymPoly(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        SymPoly(&self.0 - &other.0)
    }

    /// The common `S` degree, or `NotHomogeneous`. Zero has no degree.
    pub fn s_degree(&self) -> Result<Option<i32>> {
        let mut degs = self.0.terms().map(|(e, _)| s_degree(e));
        let Some(first) = degs.next() else { return Ok(None) };
        if degs.any(|d| d != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(first))
    }

    /// Largest `b` over the monomials.
    pub fn b_degree(&self) -> Option<i32> {
        self.0.terms().map(|(e, _)| b_degree(e)).max()
    }

    /// Terms attaining the maximal `b`. The input must be `S`-homogeneous.
    pub fn b_maximal_part(&self) -> Result<SymPoly> {
        self.s_degree()?;
        let Some(top) = self.b_degree() else {
            return Err(Error::InvalidInput("b-maximal part of zero".into()));
        };
        Ok(SymPoly(MultiPoly::from_terms(
            self.0.vars(),
            self.0.terms().filter(|(e, _)| b_degree(e) == top).map(|(e, c)| (e.clone(), c.clone())),
        )))
    }

    /// `c` with `self = c * other`, if it exists.
    pub fn ratio_to(&self, other: &SymPoly) -> Option<BigRational> {
        let (e, c) = other.0.leading_term()?;
        let r = BigRational::new(self.0.coeff(e), c.clone());
        let scaled = other.0.terms().all(|(e, c)| {
            BigRational::from_integer(self.0.coeff(e)) == &r * BigRational::from_integer(c.clone())
        });
        (scaled && self.0.num_terms() == other.0.num_terms() && !r.is_zero()).then_some(r)
    }

    pub(crate) fn as_vector(&self) -> SparseVec<Vec<i32>> {
        self.0
            .terms()
            .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone())))
            .collect()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The span of homogeneous generators, reduced separately in each `S` degree.
#[derive(Clone, Debug)]
pub struct SpanSpace {
    generators: Vec<SymPoly>,
    by_degree: BTreeMap<i32, Echelon<Vec<i32>>>,
}

impl SpanSpace {
    pub fn new(generators: Vec<SymPoly>) -> Result<Self> {
        let mut by_degree: BTreeMap<i32, Echelon<Vec<i32>>> = BTreeMap::new();
        for g in &generators {
            if let Some(d) = g.s_degree()? {
                by_degree.entry(d).or_default().insert(&g.as_vector());
            }
        }
        Ok(SpanSpace { generators, by_degree })
    }

    pub fn generators(&self) -> &[SymPoly] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.by_degree.values().map(Echelon::rank).sum()
    }

    pub fn dim_in_degree(&self, s: i32) -> usize {
        self.by_degree.get(&s).map_or(0, Echelon::rank)
    }

    /// Span of the `b`-maximal parts of all elements, i.e. the associated
    /// graded space of the filtration by `b`.
    pub fn initial_forms(&self) -> Result<SpanSpace> {
        let Some(vars) = self.generators.first().map(|g| g.0.vars().clone()) else {
            return SpanSpace::new(Vec::new());
        };
        let mut gens = Vec::new();
        for ech in self.by_degree.values() {
            let mut by_b: Echelon<(Reverse<i32>, Vec<i32>)> = Echelon::new();
            for row in ech.rows() {
                by_b.insert(&row.iter().map(|(e, c)| ((Reverse(b_degree(e)), e.clone()), c.clone())).collect());
            }
            for row in by_b.rows() {
                let Some(top) = row.keys().next().map(|k| k.0) else { continue };
                let lead: Vec<_> = row.iter().filter(|(k, _)| k.0 == top).collect();
                let den = lead.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
                let terms = lead.into_iter().map(|(k, c)| (k.1.clone(), (c * BigRational::from_integer(den.clone())).to_integer()));
                gens.push(SymPoly(MultiPoly::from_terms(&vars, terms)));
            }
        }
        SpanSpace::new(gens)
    }

    pub fn contains(&self, p: &SymPoly) -> Result<bool> {
        match p.s_degree()? {
            None => Ok(true),
            Some(d) => Ok(self.by_degree.get(&d).is_some_and(|e| e.contains(&p.as_vector()))),
        }
    }

    /// Whether both spaces contain each other.
    pub fn same_span(&self, other: &SpanSpace) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `span{Z(pi)}` over Dyck paths in the `n x n` square.
pub fn l_space(ring: &SymRing, n: usize) -> Result<SpanSpace> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidInput(format!("l_space supports 1 <= n <= 8, got {n}")));
    }
    SpanSpace::new(enumerate_dyck(n, n).iter().map(|p| ring.z_of_path(p)).collect())
}

/// `span{h_{a_1} ... h_{a_n}}` over weakly increasing `a` with `a_k <= k` and
/// `a_k >= 1`, or `a_k >= 0` when `allow_zero_parts`.
pub fn monomial_l_space(ring: &SymRing, n: usize, allow_zero_parts: bool) -> Result<SpanSpace> {
    if n > 8 {
        return Err(Error::InvalidInput(format!("monomial_l_space supports n <= 8, got {n}")));
    }
    let lo = if allow_zero_parts { 0 } else { 1 };
    let mut gens = Vec::new();
    fn rec(ring: &SymRing, n: usize, k: usize, min: usize, acc: SymPoly, gens: &mut Vec<SymPoly>) {
        if k > n {
            gens.push(acc);
            return;
        }
        for a in min..=k {
            rec(ring, n, k + 1, a, acc.mul(&ring.h(a as i64)), gens);
        }
    }
    rec(ring, n, 1, lo, ring.one(), &mut gens);
    SpanSpace::new(gens)
}

/// `sum_{m,r} q^m t^r dim[(L cap Lambda(m,r)) / (L cap Lambda(m,r-1))]`.
pub fn bigraded_hilbert(sp: &SpanSpace) -> MultiPoly {
    let avt = Vars::avt();
    let mut out = MultiPoly::zero(&avt);
    for (&m, ech) in &sp.by_degree {
        let basis = ech.rows();
        let dim = basis.len();
        let max_b = basis.iter().flat_map(|v| v.keys().map(|e| b_degree(e))).max().unwrap_or(0);
        // Dimension of the part of L with all monomials at b <= r.
        let filtered = |r: i32| -> usize {
            let mut proj = Echelon::new();
            for v in basis {
                let high: SparseVec<Vec<i32>> =
                    v.iter().filter(|(e, _)| b_degree(e) > r).map(|(e, c)| (e.clone(), c.clone())).collect();
                proj.insert(&high);
            }
            dim - proj.rank()
        };
        let mut prev = 0usize;
        for r in 0..=max_b {
            let f = filtered(r);
            if f > prev {
                out.add_term(vec![0, 2 * m, r], BigInt::from(f - prev));
            }
            prev = f;
        }
    }
    out
}
