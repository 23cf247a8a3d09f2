//! The Chevalley–Eilenberg complex with trivial coefficients.
//!
//! A `k`-cochain is stored on the exterior basis `w_I = w_{i_1} ∧ … ∧ w_{i_k}`
//! (dual basis forms, `I` strictly increasing) with `w_I(e_{i_1}, …, e_{i_k}) = 1`.
//! Evaluating on a permuted tuple multiplies by the permutation sign.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussianRational};

/// A strictly increasing set of basis indices (at most 64), ordered
/// lexicographically as sorted lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &i in indices {
            assert!(i < 64, "index {i} exceeds IndexSet capacity");
            bits |= 1 << i;
        }
        Self(bits)
    }

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Self(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    /// Number of elements strictly below `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// All `k`-subsets of `{0, …, n-1}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(IndexSet::from_indices(&idx));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    out
}

/// Sorts a tuple of basis indices, returning the sorted set and the
/// permutation sign, or `None` when an index repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(IndexSet, bool)> {
    let mut set = IndexSet::EMPTY;
    let mut inversions = 0;
    for &i in tuple {
        if set.contains(i) {
            return None;
        }
        // elements already placed that are larger than i
        inversions += set.degree() - set.count_below(i);
        set = set.with(i);
    }
    Some((set, inversions % 2 == 1))
}

/// An alternating `degree`-form on `algebra`, with coefficients on the exterior basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain<'g> {
    algebra: &'g LieAlgebra,
    degree: usize,
    coeffs: BTreeMap<IndexSet, GaussianRational>,
}

impl<'g> Cochain<'g> {
    pub fn zero(algebra: &'g LieAlgebra, degree: usize) -> Self {
        Self {
            algebra,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis form `w_I`.
    pub fn basis(algebra: &'g LieAlgebra, set: IndexSet) -> Self {
        let mut c = Self::zero(algebra, set.degree());
        c.add_term(set, &GaussianRational::one());
        c
    }

    /// The constant 0-cochain.
    pub fn constant(algebra: &'g LieAlgebra, value: GaussianRational) -> Self {
        let mut c = Self::zero(algebra, 0);
        c.add_term(IndexSet::EMPTY, &value);
        c
    }

    /// Builds a cochain from `(indices, coefficient)` pairs; indices need not be
    /// sorted and are normalized with the permutation sign.
    pub fn from_terms(
        algebra: &'g LieAlgebra,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, GaussianRational)>,
    ) -> Result<Self> {
        let mut c = Self::zero(algebra, degree);
        for (tuple, v) in terms {
            if tuple.len() != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    found: tuple.len(),
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&i| i >= algebra.dim()) {
                return Err(Error::DimensionMismatch {
                    expected: algebra.dim(),
                    found: bad + 1,
                });
            }
            if let Some((set, odd)) = sort_with_sign(&tuple) {
                c.add_term(set, &if odd { -v } else { v });
            }
        }
        Ok(c)
    }

    /// Dense coefficient vector in the lexicographic basis of `Λ^degree`.
    pub fn from_vector(algebra: &'g LieAlgebra, degree: usize, v: &[GaussianRational]) -> Self {
        let mut c = Self::zero(algebra, degree);
        for (set, x) in subsets(algebra.dim(), degree).into_iter().zip(v) {
            c.add_term(set, x);
        }
        c
    }

    pub fn to_vector(&self) -> Vec<GaussianRational> {
        subsets(self.algebra.dim(), self.degree)
            .into_iter()
            .map(|s| self.coeff(s))
            .collect()
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.algebra
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, set: IndexSet) -> GaussianRational {
        self.coeffs.get(&set).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &GaussianRational)> {
        self.coeffs.iter().map(|(s, v)| (*s, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, set: IndexSet, v: &GaussianRational) {
        debug_assert_eq!(set.degree(), self.degree);
        if v.is_zero() {
            return;
        }
        let e = self.coeffs.entry(set).or_default();
        *e += v;
        if e.is_zero() {
            self.coeffs.remove(&set);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding cochains of different degree");
        let mut out = self.clone();
        for (s, v) in other.terms() {
            out.add_term(s, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut out = Self::zero(self.algebra, self.degree);
        for (set, v) in self.terms() {
            out.add_term(set, &(v * s));
        }
        out
    }

    /// Value on a tuple of basis vectors.
    pub fn eval_basis(&self, tuple: &[usize]) -> GaussianRational {
        if tuple.len() != self.degree {
            return GaussianRational::zero();
        }
        match sort_with_sign(tuple) {
            Some((set, odd)) => {
                let v = self.coeff(set);
                if odd {
                    -v
                } else {
                    v
                }
            }
            None => GaussianRational::zero(),
        }
    }
}

impl fmt::Debug for Cochain<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg {}) {:?}", self.degree, self.coeffs)
    }
}

/// For each `c`, the pairs `(x, y, C^c_{xy})` with `x < y` and nonzero constant.
fn pairs_by_target(g: &LieAlgebra) -> Vec<Vec<(usize, usize, GaussianRational)>> {
    let n = g.dim();
    let mut out = vec![Vec::new(); n];
    for x in 0..n {
        for y in x + 1..n {
            for (c, v) in g.bracket_basis(x, y) {
                out[*c].push((x, y, v.clone()));
            }
        }
    }
    out
}

/// The coboundary, from
/// `du(X_0,…,X_k) = Σ_{j<l} (-1)^{j+l} u([X_j,X_l], X_0,…,X̂_j,…,X̂_l,…,X_k)`.
pub fn ce_d<'g>(u: &Cochain<'g>) -> Cochain<'g> {
    let pairs = pairs_by_target(u.algebra);
    ce_d_with(u, &pairs)
}

fn ce_d_with<'g>(u: &Cochain<'g>, pairs: &[Vec<(usize, usize, GaussianRational)>]) -> Cochain<'g> {
    let mut out = Cochain::zero(u.algebra, u.degree + 1);
    for (set, coef) in u.terms() {
        for c in set.iter() {
            let rest = set.without(c);
            // moving e_c into the leading slot of w_I
            let lead_sign = rest.count_below(c) % 2 == 1;
            for (x, y, cxy) in &pairs[c] {
                if rest.contains(*x) || rest.contains(*y) {
                    continue;
                }
                let target = rest.with(*x).with(*y);
                let a = target.count_below(*x);
                let b = target.count_below(*y);
                let negative = (a + b) % 2 == 1;
                let mut term = cxy * coef;
                if negative != lead_sign {
                    term = -term;
                }
                out.add_term(target, &term);
            }
        }
    }
    out
}

/// `ι_x u (Y_1, …) = u(x, Y_1, …)`.
pub fn interior<'g>(x: &[GaussianRational], u: &Cochain<'g>) -> Result<Cochain<'g>> {
    if u.degree == 0 {
        return Err(Error::DegreeZero);
    }
    if x.len() != u.algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.algebra.dim(),
            found: x.len(),
        });
    }
    let mut out = Cochain::zero(u.algebra, u.degree - 1);
    for (set, coef) in u.terms() {
        for (pos, i) in set.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            let mut term = &x[i] * coef;
            if pos % 2 == 1 {
                term = -term;
            }
            out.add_term(set.without(i), &term);
        }
    }
    Ok(out)
}

/// `(𝓛_x u)(Y_1, …, Y_k) = -Σ_i u(Y_1, …, [x, Y_i], …, Y_k)` (trivial action).
pub fn lie_derivative<'g>(x: &[GaussianRational], u: &Cochain<'g>) -> Result<Cochain<'g>> {
    let ad = u.algebra.ad_matrix(x)?;
    Ok(apply_derivation(&ad, u))
}

/// The derivation of `Λ g*` induced by `-A^T`, where column `j` of `A` is the
/// image of `e_j`.
pub(crate) fn apply_derivation<'g>(a: &ExactMatrix, u: &Cochain<'g>) -> Cochain<'g> {
    let mut by_row: HashMap<usize, Vec<(usize, &GaussianRational)>> = HashMap::new();
    for (c, j, v) in a.iter() {
        by_row.entry(c).or_default().push((j, v));
    }
    let mut out = Cochain::zero(u.algebra, u.degree);
    for (set, coef) in u.terms() {
        for c in set.iter() {
            let Some(row) = by_row.get(&c) else { continue };
            let rest = set.without(c);
            let pos_c = rest.count_below(c);
            for &(j, acj) in row {
                if rest.contains(j) {
                    continue;
                }
                let pos_j = rest.count_below(j);
                let mut term = -(acj * coef);
                if pos_c.abs_diff(pos_j) % 2 == 1 {
                    term = -term;
                }
                out.add_term(rest.with(j), &term);
            }
        }
    }
    out
}

/// Lexicographic position of each `k`-subset.
pub(crate) fn position_map(sets: &[IndexSet]) -> HashMap<IndexSet, usize> {
    sets.iter().enumerate().map(|(i, s)| (*s, i)).collect()
}

/// Matrix of `d : C^k → C^{k+1}` in the lexicographic exterior bases, assembled
/// column by column.
pub fn coboundary_matrix(g: &LieAlgebra, k: usize) -> ExactMatrix {
    let n = g.dim();
    let cols = subsets(n, k);
    let rows = subsets(n, k + 1);
    let row_pos = position_map(&rows);
    let pairs = pairs_by_target(g);
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (ci, set) in cols.iter().enumerate() {
        let du = ce_d_with(&Cochain::basis(g, *set), &pairs);
        for (target, v) in du.terms() {
            m.set(row_pos[&target], ci, v.clone());
        }
    }
    m
}

/// Binomial coefficient.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim H^q(g; C)` for `q = 0..=N` by exact ranks.
pub fn ce_cohomology_dims(g: &LieAlgebra) -> Result<Vec<usize>> {
    g.validate_jacobi()?;
    let n = g.dim();
    let ranks: Vec<usize> = (0..n).into_par_iter().map(|k| coboundary_matrix(g, k).rank()).collect();
    Ok(dims_from_ranks(&(0..=n).map(|q| binom(n, q)).collect::<Vec<_>>(), &ranks))
}

/// `dim H^q = dim C^q - rank d_q - rank d_{q-1}`, where `ranks[q]` is the rank of
/// `d_q : C^q → C^{q+1}` (missing entries count as zero).
pub fn dims_from_ranks(space_dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    let r = |q: usize| ranks.get(q).copied().unwrap_or(0);
    space_dims
        .iter()
        .enumerate()
        .map(|(q, &c)| c - r(q) - if q > 0 { r(q - 1) } else { 0 })
        .collect()
}
