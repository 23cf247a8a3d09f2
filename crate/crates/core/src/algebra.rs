//! Lie algebras given by structure constants, subalgebras, conjugation and the
//! involutive-structure classification.
//!
//! Every algebra is the complexification of a real form whose basis is the
//! stored basis, so conjugation acts entrywise on coordinates.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{conj_vec, gr, span_rank, unit_vector, ExactMatrix, ExactVector, GaussianRational};

/// Sparse bracket value: `(k, c)` pairs with `c != 0`, sorted by `k`.
pub type BracketTerms = Vec<(usize, GaussianRational)>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    /// Full antisymmetric table `table[i][j] = [e_i, e_j]`.
    table: Vec<Vec<BracketTerms>>,
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`; pairs not
    /// listed bracket to zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, BracketTerms)>,
    ) -> Result<Self> {
        let n = basis.len();
        let unique: BTreeSet<&String> = basis.iter().collect();
        if unique.len() != n {
            return Err(Error::InvalidAlgebra("basis names must be distinct".into()));
        }
        let mut table = vec![vec![BracketTerms::new(); n]; n];
        let mut seen = BTreeSet::new();
        for (i, j, terms) in brackets {
            if i >= j || j >= n {
                return Err(Error::InvalidAlgebra(format!("bracket index pair ({i}, {j}) must satisfy i < j < {n}")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) listed twice")));
            }
            let mut dense = vec![GaussianRational::zero(); n];
            let mut ks = BTreeSet::new();
            for (k, c) in terms {
                if k >= n {
                    return Err(Error::InvalidAlgebra(format!("term index {k} out of range")));
                }
                if !ks.insert(k) {
                    return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) repeats term {k}")));
                }
                dense[k] = c;
            }
            let sparse = to_sparse(&dense);
            table[j][i] = sparse.iter().map(|(k, c)| (*k, -c)).collect();
            table[i][j] = sparse;
        }
        Ok(Self {
            name: name.into(),
            basis,
            table,
        })
    }

    /// Abelian algebra with the given basis names.
    pub fn abelian(name: impl Into<String>, basis: Vec<String>) -> Self {
        Self::new(name, basis, []).expect("abelian algebra is always valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn basis_vector(&self, k: usize) -> ExactVector {
        unit_vector(self.dim(), k)
    }

    /// Basis vector by name; panics on unknown names.
    pub fn e(&self, name: &str) -> ExactVector {
        let k = self.index_of(name).unwrap_or_else(|| panic!("no basis element {name}"));
        self.basis_vector(k)
    }

    /// `[e_i, e_j]` as sparse terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &BracketTerms {
        &self.table[i][j]
    }

    /// Structure constant `c^k_{ij}`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> GaussianRational {
        self.table[i][j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    fn check_len(&self, v: &[GaussianRational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, v: &[GaussianRational], w: &[GaussianRational]) -> Result<ExactVector> {
        self.check_len(v)?;
        self.check_len(w)?;
        let mut out = vec![GaussianRational::zero(); self.dim()];
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if i == j {
                    continue;
                }
                let coeff = vi * wj;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &coeff * c;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_v`; column `j` holds `[v, e_j]`.
    pub fn ad_matrix(&self, v: &[GaussianRational]) -> Result<ExactMatrix> {
        self.check_len(v)?;
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..n {
                for (k, c) in &self.table[i][j] {
                    m.add_to(*k, j, &(vi * c));
                }
            }
        }
        Ok(m)
    }

    /// First basis triple `(i, j, k)`, `i < j < k`, violating the Jacobi identity.
    pub fn check_jacobi(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_sum(i, j, k).iter().all(Zero::is_zero) {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> ExactVector {
        let n = self.dim();
        let mut out = vec![GaussianRational::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coef) in &self.table[a][b] {
                for (t, d) in &self.table[*m][c] {
                    out[*t] += coef * d;
                }
            }
        }
        out
    }

    /// `check_jacobi` with the witness reported by basis names.
    pub fn validate_jacobi(&self) -> Result<()> {
        self.check_jacobi().map_err(|(i, j, k)| {
            Error::JacobiFailure(self.basis[i].clone(), self.basis[j].clone(), self.basis[k].clone())
        })
    }

    /// Complex conjugation relative to the real basis.
    pub fn conjugate(&self, v: &[GaussianRational]) -> ExactVector {
        conj_vec(v)
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if self.table[i][j].is_empty() {
                    continue;
                }
                brackets.push(BracketEntry {
                    i,
                    j,
                    terms: self.table[i][j]
                        .iter()
                        .map(|(k, c)| Term { k: *k, c: c.clone() })
                        .collect(),
                });
            }
        }
        AlgebraFile {
            name: self.name.clone(),
            basis: self.basis.clone(),
            brackets,
        }
    }

    pub fn from_file(file: AlgebraFile) -> Result<Self> {
        Self::new(
            file.name,
            file.basis,
            file.brackets
                .into_iter()
                .map(|b| (b.i, b.j, b.terms.into_iter().map(|t| (t.k, t.c)).collect())),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(text)?)
    }

    /// Human-readable linear combination of basis names.
    pub fn format_vector(&self, v: &[GaussianRational]) -> String {
        format_combination(&self.basis, v)
    }
}

fn to_sparse(dense: &[GaussianRational]) -> BracketTerms {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Formats `sum v_k name_k`, e.g. `"2i*T1 + -1*X2"`; the zero vector is `"0"`.
pub fn format_combination(names: &[String], v: &[GaussianRational]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("{c}*{n}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraFile {
    pub span: Vec<Vec<GaussianRational>>,
}

/// The built-in algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Su2,
    Su3,
    Torus(usize),
    Heisenberg3,
}

impl Builtin {
    /// Accepts `su2`, `su3`, `heisenberg3`, `torus(r)` and `torusR`.
    pub fn parse(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        let rank = |s: &str| s.parse::<usize>().ok().filter(|&r| r >= 1);
        match lower.as_str() {
            "su2" => Ok(Self::Su2),
            "su3" => Ok(Self::Su3),
            "heisenberg3" => Ok(Self::Heisenberg3),
            s => s
                .strip_prefix("torus")
                .and_then(|rest| {
                    let inner = rest
                        .strip_prefix('(')
                        .and_then(|r| r.strip_suffix(')'))
                        .unwrap_or(rest);
                    rank(inner)
                })
                .map(Self::Torus)
                .ok_or_else(|| Error::UnknownBuiltin(name.to_string())),
        }
    }

    pub fn algebra(self) -> LieAlgebra {
        match self {
            Self::Su2 => su2(),
            Self::Su3 => su3(),
            Self::Torus(r) => torus(r),
            Self::Heisenberg3 => heisenberg3(),
        }
    }

    /// Basis indices of the declared maximal torus, when the algebra has one.
    pub fn torus_indices(self) -> Option<Vec<usize>> {
        match self {
            Self::Su2 => Some(vec![2]),
            Self::Su3 => Some(vec![0, 1]),
            Self::Torus(r) => Some((0..r).collect()),
            Self::Heisenberg3 => None,
        }
    }
}

pub fn builtin(name: &str) -> Result<LieAlgebra> {
    Builtin::parse(name).map(Builtin::algebra)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// su(2) in the basis `(X, Y, T)`: `[T,X] = 2Y`, `[T,Y] = -2X`, `[X,Y] = 2T`.
pub fn su2() -> LieAlgebra {
    let (x, y, t) = (0, 1, 2);
    LieAlgebra::new(
        "su2",
        names(&["X", "Y", "T"]),
        [
            (x, y, vec![(t, gr(2, 0))]),
            (x, t, vec![(y, gr(-2, 0))]),
            (y, t, vec![(x, gr(2, 0))]),
        ],
    )
    .expect("su2 table is valid")
}

/// su(3) in the basis `(T1, T2, X1, Y1, X2, Y2, X3, Y3)`.
pub fn su3() -> LieAlgebra {
    let basis = ["T1", "T2", "X1", "Y1", "X2", "Y2", "X3", "Y3"];
    let ix = |s: &str| basis.iter().position(|b| *b == s).unwrap();
    // (row, column, [(coefficient, element)]) for every nonzero upper cell
    type Cell<'a> = (&'a str, &'a str, &'a [(i64, &'a str)]);
    let cells: &[Cell<'_>] = &[
        ("T1", "X1", &[(2, "Y1")]),
        ("T1", "Y1", &[(-2, "X1")]),
        ("T1", "X2", &[(1, "Y2")]),
        ("T1", "Y2", &[(-1, "X2")]),
        ("T1", "X3", &[(-1, "Y3")]),
        ("T1", "Y3", &[(1, "X3")]),
        ("T2", "X2", &[(3, "Y2")]),
        ("T2", "Y2", &[(-3, "X2")]),
        ("T2", "X3", &[(3, "Y3")]),
        ("T2", "Y3", &[(-3, "X3")]),
        ("X1", "Y1", &[(2, "T1")]),
        ("X1", "X2", &[(1, "Y3")]),
        ("X1", "Y2", &[(-1, "X3")]),
        ("X1", "X3", &[(1, "Y2")]),
        ("X1", "Y3", &[(-1, "X2")]),
        ("Y1", "X2", &[(1, "X3")]),
        ("Y1", "Y2", &[(1, "Y3")]),
        ("Y1", "X3", &[(-1, "X2")]),
        ("Y1", "Y3", &[(-1, "Y2")]),
        ("X2", "Y2", &[(1, "T2"), (1, "T1")]),
        ("X2", "X3", &[(1, "Y1")]),
        ("X2", "Y3", &[(1, "X1")]),
        ("Y2", "X3", &[(-1, "X1")]),
        ("Y2", "Y3", &[(1, "Y1")]),
        ("X3", "Y3", &[(1, "T2"), (-1, "T1")]),
    ];
    let brackets = cells.iter().map(|(a, b, terms)| {
        let mut t: BracketTerms = terms.iter().map(|(c, e)| (ix(e), gr(*c, 0))).collect();
        t.sort_by_key(|(k, _)| *k);
        (ix(a), ix(b), t)
    });
    LieAlgebra::new("su3", names(&basis), brackets).expect("su3 table is valid")
}

/// Abelian algebra of rank `r` with basis `D1..Dr`.
pub fn torus(r: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("torus({r})"), (1..=r).map(|k| format!("D{k}")).collect())
}

/// Heisenberg algebra `[X, Y] = Z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::new("heisenberg3", names(&["X", "Y", "Z"]), [(0, 1, vec![(2, gr(1, 0))])])
        .expect("heisenberg table is valid")
}

/// Involutive-structure flags of a subalgebra. Not mutually exclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureClass {
    pub elliptic: bool,
    pub complex: bool,
    #[serde(rename = "CR")]
    pub cr: bool,
    pub essentially_real: bool,
}

/// A bracket-closed subspace of a parent algebra, given by independent
/// spanning vectors in parent coordinates.
#[derive(Clone, Debug)]
pub struct Subalgebra<'g> {
    parent: &'g LieAlgebra,
    span: Vec<ExactVector>,
}

impl<'g> Subalgebra<'g> {
    pub fn new(parent: &'g LieAlgebra, span: Vec<ExactVector>) -> Result<Self> {
        for v in &span {
            parent.check_len(v)?;
        }
        let n = span.len();
        if span_rank(&span) != n {
            return Err(Error::NotIndependent);
        }
        for a in 0..n {
            for b in a + 1..n {
                let w = parent.bracket(&span[a], &span[b])?;
                let mut extended = span.clone();
                extended.push(w);
                if span_rank(&extended) != n {
                    return Err(Error::NotClosed(a, b));
                }
            }
        }
        Ok(Self { parent, span })
    }

    /// The subalgebra spanned by basis vectors with the given names.
    pub fn from_names(parent: &'g LieAlgebra, names: &[&str]) -> Result<Self> {
        let span = names
            .iter()
            .map(|n| {
                parent
                    .index_of(n)
                    .map(|k| parent.basis_vector(k))
                    .ok_or_else(|| Error::InvalidAlgebra(format!("no basis element {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parent, span)
    }

    /// The whole algebra, spanned by its basis.
    pub fn whole(parent: &'g LieAlgebra) -> Self {
        let span = (0..parent.dim()).map(|k| parent.basis_vector(k)).collect();
        Self { parent, span }
    }

    pub fn from_file(parent: &'g LieAlgebra, file: SubalgebraFile) -> Result<Self> {
        Self::new(parent, file.span)
    }

    pub fn from_json(parent: &'g LieAlgebra, text: &str) -> Result<Self> {
        Self::from_file(parent, serde_json::from_str(text)?)
    }

    pub fn to_file(&self) -> SubalgebraFile {
        SubalgebraFile {
            span: self.span.clone(),
        }
    }

    pub fn parent(&self) -> &'g LieAlgebra {
        self.parent
    }

    pub fn span(&self) -> &[ExactVector] {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.len()
    }

    pub fn conjugate_span(&self) -> Vec<ExactVector> {
        self.span.iter().map(|v| self.parent.conjugate(v)).collect()
    }

    /// Rank of `span ∪ conj(span)`, i.e. `dim(h + h̄)`.
    fn sum_with_conjugate_rank(&self) -> usize {
        let mut all = self.span.clone();
        all.extend(self.conjugate_span());
        span_rank(&all)
    }

    pub fn classify(&self) -> StructureClass {
        let n = self.dim();
        let sum = self.sum_with_conjugate_rank();
        let elliptic = sum == self.parent.dim();
        // dim(h ∩ h̄) = 2n - dim(h + h̄)
        let cr = 2 * n == sum;
        StructureClass {
            elliptic,
            complex: elliptic && cr,
            cr,
            essentially_real: sum == n,
        }
    }

    /// Coordinates of `v` in the spanning basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<ExactVector> {
        express_in_basis(&self.span, v)
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// The subalgebra as an abstract Lie algebra in its spanning basis.
    pub fn intrinsic(&self, name: &str) -> LieAlgebra {
        let n = self.dim();
        let basis = (0..n).map(|k| format!("v{k}")).collect();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let w = self.parent.bracket(&self.span[a], &self.span[b]).expect("same length");
                let coords = self.coordinates(&w).expect("subalgebra is closed");
                brackets.push((a, b, to_sparse(&coords)));
            }
        }
        LieAlgebra::new(name, basis, brackets).expect("intrinsic table is valid")
    }
}

/// Solves `v = sum c_a basis_a` exactly; `None` if `v` is outside the span.
/// The basis vectors must be linearly independent.
pub fn express_in_basis(basis: &[ExactVector], v: &[GaussianRational]) -> Option<ExactVector> {
    let mut cols = basis.to_vec();
    cols.push(v.to_vec());
    let m = ExactMatrix::from_columns(v.len(), &cols).ok()?;
    let n = basis.len();
    m.nullspace().into_iter().find(|x| !x[n].is_zero()).map(|x| {
        let scale = -x[n].inv().expect("nonzero");
        x[..n].iter().map(|c| c * &scale).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::lin_comb;

    fn l_su2(g: &LieAlgebra) -> ExactVector {
        lin_comb(&gr(1, 0), &g.e("X"), &gr(0, -1), &g.e("Y"))
    }

    #[test]
    fn su2_brackets() {
        let g = su2();
        let scaled = |name: &str, c: i64| g.e(name).iter().map(|x| x * &gr(c, 0)).collect::<Vec<_>>();
        assert_eq!(g.bracket(&g.e("T"), &g.e("X")).unwrap(), scaled("Y", 2));
        assert_eq!(g.bracket(&g.e("X"), &g.e("Y")).unwrap(), scaled("T", 2));
        let l = l_su2(&g);
        assert!(g.bracket(&l, &l).unwrap().iter().all(Zero::is_zero));
        let lbar = g.conjugate(&l);
        let expected: Vec<_> = g.e("T").iter().map(|x| x * &gr(0, 4)).collect();
        assert_eq!(g.bracket(&l, &lbar).unwrap(), expected);
    }

    #[test]
    fn su3_table_cells() {
        let g = su3();
        let w = g.bracket(&g.e("X2"), &g.e("Y2")).unwrap();
        assert_eq!(w, lin_comb(&gr(1, 0), &g.e("T1"), &gr(1, 0), &g.e("T2")));
        let w = g.bracket(&g.e("X3"), &g.e("Y3")).unwrap();
        assert_eq!(w, lin_comb(&gr(-1, 0), &g.e("T1"), &gr(1, 0), &g.e("T2")));
    }

    #[test]
    fn builtins_satisfy_jacobi() {
        for name in ["su2", "su3", "torus(3)", "heisenberg3"] {
            assert_eq!(builtin(name).unwrap().check_jacobi(), Ok(()), "{name}");
        }
        let t = builtin("torus(2)").unwrap();
        assert!(t.bracket(&t.e("D1"), &t.e("D2")).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn perturbed_su2_fails_jacobi_with_witness() {
        let g = LieAlgebra::new(
            "bad",
            names(&["X", "Y", "T"]),
            [
                // [X, Y] = 2T + X; rescaling c^T_{XY} alone keeps Jacobi
                (0, 1, vec![(0, gr(1, 0)), (2, gr(2, 0))]),
                (0, 2, vec![(1, gr(-2, 0))]),
                (1, 2, vec![(0, gr(2, 0))]),
            ],
        )
        .unwrap();
        assert_eq!(g.check_jacobi(), Err((0, 1, 2)));
        assert!(matches!(g.validate_jacobi(), Err(Error::JacobiFailure(a, b, c)) if a == "X" && b == "Y" && c == "T"));

        let rescaled = LieAlgebra::new(
            "rescaled",
            names(&["X", "Y", "T"]),
            [
                (0, 1, vec![(2, gr(3, 0))]),
                (0, 2, vec![(1, gr(-2, 0))]),
                (1, 2, vec![(0, gr(2, 0))]),
            ],
        )
        .unwrap();
        assert_eq!(rescaled.check_jacobi(), Ok(()));
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(builtin("so5"), Err(Error::UnknownBuiltin(_))));
        assert!(builtin("torus(0)").is_err());
        assert_eq!(builtin("torus4").unwrap().dim(), 4);
    }

    #[test]
    fn conjugation_examples() {
        let g = su2();
        assert_eq!(g.conjugate(&g.e("X")), g.e("X"));
        assert_eq!(g.conjugate(&l_su2(&g)), lin_comb(&gr(1, 0), &g.e("X"), &gr(0, 1), &g.e("Y")));
        let it: Vec<_> = g.e("T").iter().map(|x| x * &gr(0, 1)).collect();
        let minus_it: Vec<_> = g.e("T").iter().map(|x| x * &gr(0, -1)).collect();
        assert_eq!(g.conjugate(&it), minus_it);
    }

    #[test]
    fn classify_su2_examples() {
        let g = su2();
        let cr = Subalgebra::new(&g, vec![l_su2(&g)]).unwrap().classify();
        assert!(cr.cr && !cr.elliptic && !cr.complex && !cr.essentially_real);
        let ell = Subalgebra::new(&g, vec![g.e("T"), l_su2(&g)]).unwrap().classify();
        assert!(ell.elliptic && !ell.complex && !ell.cr && !ell.essentially_real);
        let whole = Subalgebra::whole(&g).classify();
        assert!(whole.elliptic && whole.essentially_real && !whole.cr);
        let zero = Subalgebra::new(&g, vec![]).unwrap().classify();
        assert!(zero.cr && zero.essentially_real && !zero.elliptic);
    }

    #[test]
    fn subalgebra_validation() {
        let g = su2();
        assert!(matches!(Subalgebra::from_names(&g, &["X", "Y"]), Err(Error::NotClosed(0, 1))));
        assert!(matches!(Subalgebra::new(&g, vec![g.e("X"), g.e("X")]), Err(Error::NotIndependent)));
        let s3 = su3();
        let l1 = lin_comb(&gr(1, 0), &s3.e("X1"), &gr(0, -1), &s3.e("Y1"));
        // mixing vectors of su2 and su3 is a dimension error
        assert!(matches!(Subalgebra::new(&g, vec![g.e("X"), l1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for name in ["su2", "su3", "torus(2)", "heisenberg3"] {
            let g = builtin(name).unwrap();
            let text = g.to_json();
            let back = LieAlgebra::from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn json_errors_carry_position() {
        let err = LieAlgebra::from_json("{\"name\": \"x\",\n \"basis\": [1]}").unwrap_err();
        assert!(matches!(err, Error::Json { line: 2, .. }), "{err:?}");
        let bad_pair = r#"{"name":"x","basis":["a","b"],"brackets":[{"i":1,"j":0,"terms":[]}]}"#;
        assert!(matches!(LieAlgebra::from_json(bad_pair), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn intrinsic_algebra_of_borel_in_su2() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![g.e("T"), l_su2(&g)]).unwrap();
        let b = h.intrinsic("b");
        // [T, L] = 2i L
        assert_eq!(b.bracket_basis(0, 1), &vec![(1, gr(0, 2))]);
    }
}
