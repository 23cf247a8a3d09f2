//! Shared fixtures and random generators for the integration tests.
#![allow(dead_code)]

use liecoh::algebra::{heisenberg3, su2, su3, torus, LieAlgebra, Subalgebra};
use liecoh::cecomplex::{subsets, Cochain};
use liecoh::exactnum::{gr, lin_comb, ExactMatrix, ExactVector, GaussianRational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `X − iY` in parent coordinates.
pub fn l_vec(g: &LieAlgebra, x: &str, y: &str) -> ExactVector {
    lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y))
}

/// A named subalgebra given by its parent and spanning vectors.
pub struct Case {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub span: Vec<ExactVector>,
}

impl Case {
    pub fn sub(&self) -> Subalgebra<'_> {
        Subalgebra::new(&self.algebra, self.span.clone()).expect("fixture is a subalgebra")
    }
}

fn whole(name: &'static str, g: LieAlgebra) -> Case {
    let span = (0..g.dim()).map(|k| g.basis_vector(k)).collect();
    Case { name, algebra: g, span }
}

/// The structures used throughout: every built-in as a whole, and the
/// subalgebras `span{L}`, `span{T, L}` of su2, `span{L1, L2, L3}` and its
/// extensions by `T2` and by `T1, T2` in su3, a complex structure on su3, a
/// line in the two-torus and two Heisenberg subalgebras.
pub fn cases() -> Vec<Case> {
    let s2 = su2();
    let s3 = su3();
    let cr3 = vec![l_vec(&s3, "X1", "Y1"), l_vec(&s3, "X2", "Y2"), l_vec(&s3, "X3", "Y3")];
    let with = |extra: Vec<ExactVector>| {
        let mut v = cr3.clone();
        v.extend(extra);
        v
    };
    let t1_plus_i_t2 = lin_comb(&gr(1, 0), &s3.e("T1"), &gr(0, 1), &s3.e("T2"));
    let t2 = torus(2);
    let h = heisenberg3();
    vec![
        Case {
            name: "su2 span{L}",
            span: vec![l_vec(&s2, "X", "Y")],
            algebra: s2.clone(),
        },
        Case {
            name: "su2 span{T, L}",
            span: vec![s2.e("T"), l_vec(&s2, "X", "Y")],
            algebra: s2.clone(),
        },
        Case {
            name: "su2 span{T}",
            span: vec![s2.e("T")],
            algebra: s2.clone(),
        },
        whole("su2", s2),
        Case {
            name: "su3 span{L1, L2, L3}",
            span: cr3.clone(),
            algebra: s3.clone(),
        },
        Case {
            name: "su3 h' = span{L1, L2, L3, T2}",
            span: with(vec![s3.e("T2")]),
            algebra: s3.clone(),
        },
        Case {
            name: "su3 h'' = span{L1, L2, L3, T1, T2}",
            span: with(vec![s3.e("T1"), s3.e("T2")]),
            algebra: s3.clone(),
        },
        Case {
            name: "su3 span{L1, L2, L3, T1 + iT2}",
            span: with(vec![t1_plus_i_t2]),
            algebra: s3.clone(),
        },
        whole("su3", s3),
        Case {
            name: "torus(2) span{D1 - 1/2 D2}",
            span: vec![vec![gr(1, 0), GaussianRational::from_frac(-1, 2)]],
            algebra: t2,
        },
        whole("torus(3)", torus(3)),
        Case {
            name: "heisenberg3 span{X, Z}",
            span: vec![h.e("X"), h.e("Z")],
            algebra: h.clone(),
        },
        Case {
            name: "heisenberg3 span{X - iY}",
            span: vec![l_vec(&h, "X", "Y")],
            algebra: h.clone(),
        },
        whole("heisenberg3", h),
    ]
}

pub fn small_gr(rng: &mut ChaCha8Rng) -> GaussianRational {
    if rng.gen_bool(0.3) {
        return GaussianRational::default();
    }
    let re = GaussianRational::from_frac(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    let im = GaussianRational::from_frac(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    re + im.mul_i()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> ExactVector {
    (0..n).map(|_| small_gr(rng)).collect()
}

pub fn random_cochain<'g>(rng: &mut ChaCha8Rng, g: &'g LieAlgebra, degree: usize) -> Cochain<'g> {
    let len = subsets(g.dim(), degree).len();
    Cochain::from_vector(g, degree, &random_vector(rng, len))
}

/// `span{A_1..A_k} ⋉ C^m` where `A_i` acts by `p_i(M)` for one random `M` and
/// random polynomials `p_i` of degree at most 2, so the actions commute.
pub fn semidirect(rng: &mut ChaCha8Rng, k: usize, m: usize) -> LieAlgebra {
    let mut base = ExactMatrix::zeros(m, m);
    for r in 0..m {
        for c in 0..m {
            base.set(r, c, small_gr(rng));
        }
    }
    let square = base.mul(&base).unwrap();
    let actions: Vec<ExactMatrix> = (0..k)
        .map(|_| {
            let (c0, c1, c2) = (small_gr(rng), small_gr(rng), small_gr(rng));
            ExactMatrix::identity(m)
                .scale(&c0)
                .add(&base.scale(&c1))
                .unwrap()
                .add(&square.scale(&c2))
                .unwrap()
        })
        .collect();
    let mut names: Vec<String> = (1..=k).map(|i| format!("A{i}")).collect();
    names.extend((1..=m).map(|a| format!("V{a}")));
    let mut brackets = Vec::new();
    for (i, act) in actions.iter().enumerate() {
        for a in 0..m {
            let terms: Vec<(usize, GaussianRational)> = (0..m)
                .map(|b| (k + b, act.get(b, a)))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            brackets.push((i, k + a, terms));
        }
    }
    LieAlgebra::new("semidirect", names, brackets).unwrap()
}

/// `V ⊕ Z` with `[v_a, v_b]` a random element of the center `Z`.
pub fn two_step(rng: &mut ChaCha8Rng, m: usize, z: usize) -> LieAlgebra {
    let mut names: Vec<String> = (1..=m).map(|a| format!("V{a}")).collect();
    names.extend((1..=z).map(|c| format!("Z{c}")));
    let mut brackets = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let terms: Vec<(usize, GaussianRational)> = (0..z)
                .map(|c| (m + c, small_gr(rng)))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            brackets.push((a, b, terms));
        }
    }
    LieAlgebra::new("two-step", names, brackets).unwrap()
}

/// A random algebra from the built-ins and the two random families.
pub fn random_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    match rng.gen_range(0..5) {
        0 => su2(),
        1 => su3(),
        2 => heisenberg3(),
        3 => {
            let (k, m) = (rng.gen_range(1..=2), rng.gen_range(2..=3));
            semidirect(rng, k, m)
        }
        _ => {
            let (m, z) = (rng.gen_range(2..=4), rng.gen_range(1..=2));
            two_step(rng, m, z)
        }
    }
}
