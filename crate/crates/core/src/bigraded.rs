//! The bigraded complex `C^{p,q}` of a subalgebra `h ⊂ g` and the
//! Hochschild–Serre module complex `C^q(h; C^p(g/h))`.
//!
//! Both are realized in an adapted basis `W = (L_1, …, L_n, M_1, …, M_m)` whose
//! first `n` vectors span `h`. A `(p+q)`-form `w_K` lies in the `(p, q)` slice
//! when `K` has exactly `q` indices among the `L`'s and `p` among the `M`'s.
//! The slice represents `N^{p,q} / N^{p+1,q-1}` and `d′` is the slice component of
//! the full coboundary.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::cecomplex::{binom, ce_d, dims_from_ranks, position_map, sort_with_sign, subsets, Cochain, IndexSet};
use crate::exactnum::{span_rank, ExactMatrix, ExactVector, GaussianRational};

/// An adapted basis of `g` for a subalgebra, with its dual basis and the
/// structure constants of `g` re-expressed in it.
#[derive(Clone, Debug)]
pub struct AdaptedBasis<'g> {
    parent: &'g LieAlgebra,
    h_basis: Vec<ExactVector>,
    complement: Vec<usize>,
    change: ExactMatrix,
    dual: ExactMatrix,
    adapted: LieAlgebra,
}

/// Completes the spanning vectors of `h` greedily with parent basis vectors, in
/// parent order, and solves for the dual basis.
pub fn adapt<'g>(h: &Subalgebra<'g>) -> AdaptedBasis<'g> {
    let g = h.parent();
    let n_total = g.dim();
    let mut vectors: Vec<ExactVector> = h.span().to_vec();
    let mut complement = Vec::new();
    for k in 0..n_total {
        if vectors.len() == n_total {
            break;
        }
        let mut trial = vectors.clone();
        trial.push(g.basis_vector(k));
        if span_rank(&trial) == trial.len() {
            vectors = trial;
            complement.push(k);
        }
    }
    let change = ExactMatrix::from_columns(n_total, &vectors).expect("vectors have parent length");
    let dual = change.inverse().expect("adapted vectors form a basis");

    let n = h.dim();
    let mut names: Vec<String> = (1..=n).map(|a| format!("L{a}")).collect();
    names.extend((1..=complement.len()).map(|b| format!("M{b}")));
    let mut brackets = Vec::new();
    for a in 0..n_total {
        for b in a + 1..n_total {
            let w = g.bracket(&vectors[a], &vectors[b]).expect("same length");
            let coords = dual.mul_vec(&w).expect("square");
            let terms: Vec<_> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            brackets.push((a, b, terms));
        }
    }
    let adapted = LieAlgebra::new(format!("{}/adapted", g.name()), names, brackets).expect("adapted table is valid");
    AdaptedBasis {
        parent: g,
        h_basis: h.span().to_vec(),
        complement,
        change,
        dual,
        adapted,
    }
}

impl<'g> AdaptedBasis<'g> {
    pub fn parent(&self) -> &'g LieAlgebra {
        self.parent
    }

    /// `n = dim h`.
    pub fn h_dim(&self) -> usize {
        self.h_basis.len()
    }

    /// `m = dim g - dim h`.
    pub fn complement_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn h_basis(&self) -> &[ExactVector] {
        &self.h_basis
    }

    /// Parent basis indices chosen for the complement, in order.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    pub fn complement(&self) -> Vec<ExactVector> {
        self.complement.iter().map(|&k| self.parent.basis_vector(k)).collect()
    }

    /// Columns are `L_1, …, L_n, M_1, …, M_m` in parent coordinates.
    pub fn change_matrix(&self) -> &ExactMatrix {
        &self.change
    }

    /// Rows are `τ_1, …, τ_n, ζ_1, …, ζ_m`.
    pub fn dual_matrix(&self) -> &ExactMatrix {
        &self.dual
    }

    pub fn tau(&self, a: usize) -> ExactVector {
        (0..self.parent.dim()).map(|c| self.dual.get(a, c)).collect()
    }

    pub fn zeta(&self, b: usize) -> ExactVector {
        self.tau(self.h_dim() + b)
    }

    /// `g` with its structure constants in the adapted basis.
    pub fn adapted_algebra(&self) -> &LieAlgebra {
        &self.adapted
    }

    fn h_mask(&self) -> u64 {
        (1u64 << self.h_dim()) - 1
    }

    /// `|K ∩ complement|`.
    pub fn quotient_degree(&self, set: IndexSet) -> usize {
        (set.bits() & !self.h_mask()).count_ones() as usize
    }

    /// The exterior basis of `C^{p,q}`; empty when `p > m` or `q > n`.
    pub fn space(&self, p: usize, q: usize) -> BigradedSpace {
        let basis = subsets(self.adapted.dim(), p + q)
            .into_iter()
            .filter(|s| self.quotient_degree(*s) == p)
            .collect();
        BigradedSpace { p, q, basis }
    }

    /// Basis of `N^{p,q}`: `(p+q)`-forms with at least `p` complement indices.
    pub fn filtration_basis(&self, p: usize, q: usize) -> Vec<IndexSet> {
        subsets(self.adapted.dim(), p + q)
            .into_iter()
            .filter(|s| self.quotient_degree(*s) >= p)
            .collect()
    }

    /// Matrix of `d′ : C^{p,q} → C^{p,q+1}`.
    pub fn dprime_matrix(&self, p: usize, q: usize) -> ExactMatrix {
        let cols = self.space(p, q).basis;
        let rows = self.space(p, q + 1).basis;
        let row_pos = position_map(&rows);
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (ci, set) in cols.iter().enumerate() {
            let du = ce_d(&Cochain::basis(&self.adapted, *set));
            for (target, v) in du.terms() {
                if self.quotient_degree(target) == p {
                    m.set(row_pos[&target], ci, v.clone());
                }
            }
        }
        m
    }

    /// Components of `d(w_K)`, `K` in the `(p, q)` slice, with fewer than `p`
    /// complement indices. These vanish exactly when `d N^{p,q} ⊂ N^{p,q+1}`.
    pub fn filtration_leak(&self, p: usize, q: usize) -> usize {
        self.space(p, q)
            .basis
            .iter()
            .map(|set| {
                ce_d(&Cochain::basis(&self.adapted, *set))
                    .terms()
                    .filter(|(t, _)| self.quotient_degree(*t) < p)
                    .count()
            })
            .sum()
    }

    /// `dim H^{p,q}` for `q = 0..=n`.
    pub fn cohomology_dims(&self, p: usize) -> Vec<usize> {
        let n = self.h_dim();
        let spaces: Vec<usize> = (0..=n).map(|q| self.space(p, q).dim()).collect();
        let ranks: Vec<usize> = (0..n).into_par_iter().map(|q| self.dprime_matrix(p, q).rank()).collect();
        dims_from_ranks(&spaces, &ranks)
    }

    /// The Hochschild–Serre module complex built on this basis.
    pub fn module_complex(&self) -> HsModuleComplex<'_, 'g> {
        HsModuleComplex::new(self)
    }
}

/// The exterior basis `{ζ_I ∧ τ_J : |I| = p, |J| = q}` of `C^{p,q}`, as index sets
/// over the adapted basis in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedSpace {
    pub p: usize,
    pub q: usize,
    pub basis: Vec<IndexSet>,
}

impl BigradedSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `dim H^{p,q}_h(g)` over `q = 0..=dim h` via the slice realization of `d′`.
pub fn bigraded_cohomology_dims(h: &Subalgebra<'_>, p: usize) -> Vec<usize> {
    adapt(h).cohomology_dims(p)
}

/// `dim H^q(h; C^p(g/h))` over `q = 0..=dim h` via the module complex.
pub fn hs_module_cohomology_dims(h: &Subalgebra<'_>, p: usize) -> Vec<usize> {
    adapt(h).module_complex().cohomology_dims(p)
}

/// A `q`-cochain on `h` valued in `C^p(g/h)`: coefficients indexed by
/// (`h`-basis set `J`, quotient-basis set `I`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ModuleCochain {
    p: usize,
    q: usize,
    coeffs: BTreeMap<(IndexSet, IndexSet), GaussianRational>,
}

impl ModuleCochain {
    pub fn zero(p: usize, q: usize) -> Self {
        Self {
            p,
            q,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn coeff(&self, j: IndexSet, i: IndexSet) -> GaussianRational {
        self.coeffs.get(&(j, i)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, IndexSet, &GaussianRational)> {
        self.coeffs.iter().map(|((j, i), v)| (*j, *i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, j: IndexSet, i: IndexSet, v: &GaussianRational) {
        debug_assert!(j.degree() == self.q && i.degree() == self.p);
        if v.is_zero() {
            return;
        }
        let e = self.coeffs.entry((j, i)).or_default();
        *e += v;
        if e.is_zero() {
            self.coeffs.remove(&(j, i));
        }
    }

    /// Value on an `h`-tuple and a quotient tuple, alternating in each.
    pub fn eval(&self, h_tuple: &[usize], quotient_tuple: &[usize]) -> GaussianRational {
        let (Some((j, odd_j)), Some((i, odd_i))) = (sort_with_sign(h_tuple), sort_with_sign(quotient_tuple)) else {
            return GaussianRational::zero();
        };
        let v = self.coeff(j, i);
        if odd_j != odd_i {
            -v
        } else {
            v
        }
    }
}

impl fmt::Debug for ModuleCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleCochain(p {}, q {}) {:?}", self.p, self.q, self.coeffs)
    }
}

/// The complex `C^q(h; C^p(g/h))` with `h` acting on `C^p(g/h)` by
/// `(X·v)([Y_1], …) = -Σ_j v([Y_1], …, [[X, Y_j]], …)`.
pub struct HsModuleComplex<'a, 'g> {
    adapted: &'a AdaptedBasis<'g>,
    /// `h_consts[a][b]`: `[L_a, L_b]` as `(c, coefficient)` over `h`.
    h_consts: Vec<Vec<Vec<(usize, GaussianRational)>>>,
    /// `action[a][(c, b)]`: coefficient of `[M_c]` in `[[L_a, M_b]]`.
    action: Vec<ExactMatrix>,
}

impl<'a, 'g> HsModuleComplex<'a, 'g> {
    fn new(adapted: &'a AdaptedBasis<'g>) -> Self {
        let n = adapted.h_dim();
        let m = adapted.complement_dim();
        let g = adapted.adapted_algebra();
        let h_consts = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        g.bracket_basis(a, b)
                            .iter()
                            .filter(|(c, _)| *c < n)
                            .cloned()
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let action = (0..n)
            .map(|a| {
                let mut q = ExactMatrix::zeros(m, m);
                for b in 0..m {
                    for (c, v) in g.bracket_basis(a, n + b) {
                        if *c >= n {
                            q.set(c - n, b, v.clone());
                        }
                    }
                }
                q
            })
            .collect();
        Self {
            adapted,
            h_consts,
            action,
        }
    }

    pub fn basis(&self, p: usize, q: usize) -> Vec<(IndexSet, IndexSet)> {
        let hs = subsets(self.adapted.h_dim(), q);
        let qs = subsets(self.adapted.complement_dim(), p);
        hs.iter().flat_map(|j| qs.iter().map(move |i| (*j, *i))).collect()
    }

    /// `(L_a · v)(I)` where `v` is the `C^p(g/h)`-value `u(h_tuple)`.
    fn act(&self, a: usize, u: &ModuleCochain, h_tuple: &[usize], quotient: &[usize]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        let mut slots = quotient.to_vec();
        for s in 0..quotient.len() {
            let b = quotient[s];
            for c in 0..self.adapted.complement_dim() {
                let coef = self.action[a].get(c, b);
                if coef.is_zero() {
                    continue;
                }
                slots[s] = c;
                acc -= &(&coef * &u.eval(h_tuple, &slots));
            }
            slots[s] = b;
        }
        acc
    }

    /// The coboundary of the module complex:
    /// `du(X_0,…,X_q) = Σ_j (-1)^j X_j·u(…X̂_j…) + Σ_{j<l} (-1)^{j+l} u([X_j,X_l], …X̂_j…X̂_l…)`.
    pub fn d(&self, u: &ModuleCochain) -> ModuleCochain {
        let (p, q) = (u.p, u.q);
        let mut out = ModuleCochain::zero(p, q + 1);
        if q + 1 > self.adapted.h_dim() {
            return out;
        }
        for (jset, iset) in self.basis(p, q + 1) {
            let xs = jset.indices();
            let is = iset.indices();
            let mut val = GaussianRational::zero();
            for j in 0..xs.len() {
                let rest: Vec<usize> = xs.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect();
                let t = self.act(xs[j], u, &rest, &is);
                if j % 2 == 0 {
                    val += &t;
                } else {
                    val -= &t;
                }
            }
            for j in 0..xs.len() {
                for l in j + 1..xs.len() {
                    let rest: Vec<usize> = xs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j && *k != l)
                        .map(|(_, x)| *x)
                        .collect();
                    for (c, coef) in &self.h_consts[xs[j]][xs[l]] {
                        let mut tuple = vec![*c];
                        tuple.extend_from_slice(&rest);
                        let t = coef * &u.eval(&tuple, &is);
                        if (j + l) % 2 == 0 {
                            val += &t;
                        } else {
                            val -= &t;
                        }
                    }
                }
            }
            out.add_term(jset, iset, &val);
        }
        out
    }

    /// Matrix of the coboundary `C^q → C^{q+1}` in the basis order of [`Self::basis`].
    pub fn d_matrix(&self, p: usize, q: usize) -> ExactMatrix {
        let cols = self.basis(p, q);
        let rows = self.basis(p, q + 1);
        let row_pos: BTreeMap<(IndexSet, IndexSet), usize> =
            rows.iter().enumerate().map(|(k, key)| (*key, k)).collect();
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (ci, (j, i)) in cols.iter().enumerate() {
            let mut e = ModuleCochain::zero(p, q);
            e.add_term(*j, *i, &GaussianRational::one());
            for (tj, ti, v) in self.d(&e).terms() {
                m.set(row_pos[&(tj, ti)], ci, v.clone());
            }
        }
        m
    }

    pub fn cohomology_dims(&self, p: usize) -> Vec<usize> {
        let n = self.adapted.h_dim();
        let spaces: Vec<usize> = (0..=n).map(|q| self.basis(p, q).len()).collect();
        let ranks: Vec<usize> = (0..n).into_par_iter().map(|q| self.d_matrix(p, q).rank()).collect();
        dims_from_ranks(&spaces, &ranks)
    }

    /// The transfer `r`: `[(ru)(X_1,…,X_q)]([Y_1],…,[Y_p]) = u(X_1,…,X_q, Y_1,…,Y_p)`
    /// for a `(p+q)`-cochain `u` on the adapted algebra.
    pub fn transfer(&self, u: &Cochain<'_>, p: usize) -> ModuleCochain {
        let n = self.adapted.h_dim();
        let q = u.degree().saturating_sub(p);
        let mut out = ModuleCochain::zero(p, q);
        if u.degree() < p {
            return out;
        }
        for (jset, iset) in self.basis(p, q) {
            let mut tuple = jset.indices();
            tuple.extend(iset.iter().map(|i| n + i));
            out.add_term(jset, iset, &u.eval_basis(&tuple));
        }
        out
    }

    /// The section `u(X_1,…,X_{p+q}) = (1/(p!q!)) Σ_σ sgn(σ) v(T X_σ(1),…,T X_σ(q))(π X_σ(q+1),…)`,
    /// with `T` the adapted projection onto `h` and `π` the quotient map.
    pub fn section<'h>(&self, v: &ModuleCochain) -> Cochain<'h>
    where
        'a: 'h,
    {
        let g = self.adapted.adapted_algebra();
        let n = self.adapted.h_dim();
        let (p, q) = (v.p, v.q);
        let mut out = Cochain::zero(g, p + q);
        let norm = GaussianRational::from(factorial(p) as i64 * factorial(q) as i64)
            .inv()
            .expect("nonzero");
        for set in subsets(g.dim(), p + q) {
            let elems = set.indices();
            let mut total = GaussianRational::zero();
            let mut arrangement = Vec::with_capacity(elems.len());
            let mut used = vec![false; elems.len()];
            permute_blocks(&elems, n, q, &mut arrangement, &mut used, &mut |arr: &[usize]| {
                let positions: Vec<usize> = arr.iter().map(|x| elems.iter().position(|e| e == x).unwrap()).collect();
                let (_, odd) = sort_with_sign(&positions).expect("permutation");
                let h_tuple = &arr[..q];
                let quotient: Vec<usize> = arr[q..].iter().map(|x| x - n).collect();
                let val = v.eval(h_tuple, &quotient);
                if odd {
                    total -= &val;
                } else {
                    total += &val;
                }
            });
            out.add_term(set, &(&total * &norm));
        }
        out
    }

    /// Matrix of `r` restricted to `N^{p,q}`, columns in `filtration_basis` order.
    pub fn transfer_matrix_on_filtration(&self, p: usize, q: usize) -> ExactMatrix {
        let g = self.adapted.adapted_algebra();
        let cols = self.adapted.filtration_basis(p, q);
        let rows = self.basis(p, q);
        let row_pos: BTreeMap<(IndexSet, IndexSet), usize> =
            rows.iter().enumerate().map(|(k, key)| (*key, k)).collect();
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (ci, set) in cols.iter().enumerate() {
            for (j, i, v) in self.transfer(&Cochain::basis(g, *set), p).terms() {
                m.set(row_pos[&(j, i)], ci, v.clone());
            }
        }
        m
    }
}

/// Enumerates arrangements of `elems` whose first `q` slots hold `h`-indices
/// (`< n`) and whose remaining slots hold complement indices. Arrangements
/// violating this pattern contribute zero to the section sum.
fn permute_blocks(
    elems: &[usize],
    n: usize,
    q: usize,
    arrangement: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if arrangement.len() == elems.len() {
        visit(arrangement);
        return;
    }
    let slot = arrangement.len();
    for k in 0..elems.len() {
        if used[k] || (slot < q) != (elems[k] < n) {
            continue;
        }
        used[k] = true;
        arrangement.push(elems[k]);
        permute_blocks(elems, n, q, arrangement, used, visit);
        arrangement.pop();
        used[k] = false;
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// `dim N^{p,q} = Σ_{i ≥ p} C(m, i) C(n, p+q-i)`.
pub fn filtration_dim(n: usize, m: usize, p: usize, q: usize) -> usize {
    (p..=m.min(p + q)).map(|i| binom(m, i) * binom(n, p + q - i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{su2, su3, torus, Subalgebra};
    use crate::cecomplex::{ce_cohomology_dims, coboundary_matrix};
    use crate::exactnum::{gr, lin_comb};

    fn l(g: &LieAlgebra, x: &str, y: &str) -> ExactVector {
        lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y))
    }

    #[test]
    fn adapt_su2_borel() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![g.e("T"), l(&g, "X", "Y")]).unwrap();
        let ad = adapt(&h);
        assert_eq!(ad.complement_indices(), &[0]);
        let prod = ad.dual_matrix().mul(ad.change_matrix()).unwrap();
        assert_eq!(prod, ExactMatrix::identity(3));
        // [L1, L2] = [T, L] = 2i L
        assert_eq!(ad.adapted_algebra().bracket_basis(0, 1), &vec![(1, gr(0, 2))]);
    }

    #[test]
    fn adapt_whole_and_torus_line() {
        let g = su3();
        let whole = adapt(&Subalgebra::whole(&g));
        assert_eq!(whole.complement_dim(), 0);
        let t = torus(2);
        let mu = gr(-1, 0) * gr(1, 2).inv().unwrap();
        let line = Subalgebra::new(&t, vec![vec![gr(1, 0), mu.clone()]]).unwrap();
        let ad = adapt(&line);
        assert_eq!(ad.complement_indices(), &[0]);
        assert_eq!(ad.zeta(0), vec![gr(1, 0), -(gr(1, 0) / mu.clone())]);
        assert_eq!(ad.tau(0), vec![gr(0, 0), gr(1, 0) / mu]);
    }

    #[test]
    fn whole_algebra_dprime_is_ce_d() {
        let g = su2();
        let ad = adapt(&Subalgebra::whole(&g));
        for q in 0..3 {
            assert_eq!(ad.dprime_matrix(0, q), coboundary_matrix(&g, q));
        }
    }

    #[test]
    fn su2_borel_dims() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![g.e("T"), l(&g, "X", "Y")]).unwrap();
        assert_eq!(adapt(&h).dprime_matrix(0, 1).rank(), 1);
        assert_eq!(bigraded_cohomology_dims(&h, 0), vec![1, 1, 0]);
        assert_eq!(hs_module_cohomology_dims(&h, 0), vec![1, 1, 0]);
    }

    #[test]
    fn torus_line_dims() {
        let t = torus(2);
        let line = Subalgebra::new(&t, vec![vec![gr(1, 0), gr(-1, 0) * gr(1, 2).inv().unwrap()]]).unwrap();
        let ad = adapt(&line);
        assert!(ad.dprime_matrix(0, 0).is_zero() && ad.dprime_matrix(1, 0).is_zero());
        assert_eq!(bigraded_cohomology_dims(&line, 0), vec![1, 1]);
        assert_eq!(hs_module_cohomology_dims(&line, 1), vec![1, 1]);
    }

    #[test]
    fn whole_algebra_module_complex_is_ce() {
        let g = su2();
        assert_eq!(hs_module_cohomology_dims(&Subalgebra::whole(&g), 0), ce_cohomology_dims(&g).unwrap());
    }

    #[test]
    fn degenerate_degrees_are_empty() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![l(&g, "X", "Y")]).unwrap();
        let ad = adapt(&h);
        assert_eq!(ad.space(3, 0).dim(), 0);
        assert_eq!(ad.dprime_matrix(3, 0).cols(), 0);
        assert_eq!(ad.cohomology_dims(3), vec![0, 0]);
    }

    #[test]
    fn filtration_counts() {
        assert_eq!(filtration_dim(2, 1, 0, 1), 3);
        assert_eq!(filtration_dim(2, 1, 1, 1), binom(1, 1) * binom(2, 1));
        assert_eq!(filtration_dim(2, 1, 2, 1), 0);
    }
}
