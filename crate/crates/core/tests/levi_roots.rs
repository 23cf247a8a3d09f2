//! Levi-form invariances, exact inertia against congruence, and root-space
//! relations checked by direct bracketing.

mod common;

use common::{cases, random_vector, rng, small_gr};
use liecoh::algebra::{su2, su3, LieAlgebra, Subalgebra};
use liecoh::exactnum::{gr, lin_comb, span_rank, ExactMatrix, ExactVector, GaussianRational};
use liecoh::levi_roots::{
    characteristic_basis, levi_form, levi_signature, levi_signature_float, rational, root_decomposition, scale_covector,
    standard_structure, CharacteristicCovector, LeviMatrix, Signature,
};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    loop {
        let rows: Vec<ExactVector> = (0..n).map(|_| random_vector(r, n)).collect();
        let m = ExactMatrix::from_rows(&rows).unwrap();
        if m.rank() == n {
            return m;
        }
    }
}

fn congruent(p: &ExactMatrix, m: &ExactMatrix) -> ExactMatrix {
    p.mul(m).unwrap().mul(&p.conj_transpose()).unwrap()
}

fn random_covector(r: &mut ChaCha8Rng, h: &Subalgebra<'_>) -> Option<CharacteristicCovector> {
    let basis = characteristic_basis(h);
    let coords: Vec<BigRational> = basis.iter().map(|_| rational(r.gen_range(-4..=4), r.gen_range(1..=3))).collect();
    CharacteristicCovector::combine(h, &basis, &coords).ok()
}

/// Sylvester's law of inertia: `P D P*` has the signs of the diagonal `D`.
#[test]
fn exact_inertia_matches_congruent_diagonal() {
    let mut r = rng(31);
    for _ in 0..60 {
        let (pos, neg, zero) = (r.gen_range(0..=3), r.gen_range(0..=3), r.gen_range(0..=2));
        let n = pos + neg + zero;
        if n == 0 {
            continue;
        }
        let mut d = ExactMatrix::zeros(n, n);
        for k in 0..n {
            let mag = GaussianRational::from_frac(r.gen_range(1..=5), r.gen_range(1..=3));
            let v = if k < pos { mag } else if k < pos + neg { -mag } else { GaussianRational::zero() };
            d.set(k, k, v);
        }
        let p = random_invertible(&mut r, n);
        let h = LeviMatrix::new(congruent(&p, &d)).unwrap();
        let expected = Signature {
            positive: pos,
            negative: neg,
            zero,
        };
        assert_eq!(levi_signature(&h), expected);
        assert_eq!(levi_signature_float(&h), expected);
    }
}

#[test]
fn non_hermitian_matrix_is_rejected() {
    let m = ExactMatrix::from_rows(&[vec![gr(0, 0), gr(1, 0)], vec![gr(0, 0), gr(0, 0)]]).unwrap();
    assert!(LeviMatrix::new(m).is_err());
}

#[test]
fn levi_form_is_hermitian_with_agreeing_signatures() {
    let mut r = rng(32);
    for case in cases() {
        let h = case.sub();
        for _ in 0..5 {
            let Some(xi) = random_covector(&mut r, &h) else { continue };
            let levi = levi_form(&h, &xi).unwrap();
            assert!(levi.matrix().is_hermitian(), "{}", case.name);
            assert_eq!(levi_signature(&levi), levi_signature_float(&levi), "{}", case.name);
        }
    }
}

/// Positive scaling keeps the signature and negation swaps its sign counts.
#[test]
fn signature_under_scaling_and_negation() {
    let mut r = rng(33);
    for case in cases() {
        let h = case.sub();
        for _ in 0..5 {
            let Some(xi) = random_covector(&mut r, &h) else { continue };
            let sig = levi_signature(&levi_form(&h, &xi).unwrap());
            let c = rational(r.gen_range(1..=7), r.gen_range(1..=5));
            let up = scale_covector(&h, &xi, &c).unwrap();
            assert_eq!(levi_signature(&levi_form(&h, &up).unwrap()), sig, "{}", case.name);
            let down = scale_covector(&h, &xi, &-c).unwrap();
            let flipped = levi_signature(&levi_form(&h, &down).unwrap());
            assert_eq!(flipped.as_tuple(), (sig.negative, sig.positive, sig.zero), "{}", case.name);
        }
    }
}

/// Replacing the spanning vectors `v` by `P v` transforms the form to `P 𝓛 P*`.
#[test]
fn levi_form_transforms_by_congruence() {
    let mut r = rng(34);
    for case in cases() {
        let h = case.sub();
        let Some(xi) = random_covector(&mut r, &h) else { continue };
        let levi = levi_form(&h, &xi).unwrap();
        let p = random_invertible(&mut r, h.dim());
        let span: Vec<ExactVector> = (0..h.dim())
            .map(|a| {
                let mut w = vec![GaussianRational::zero(); case.algebra.dim()];
                for (b, vb) in h.span().iter().enumerate() {
                    w = lin_comb(&gr(1, 0), &w, &p.get(a, b), vb);
                }
                w
            })
            .collect();
        let h2 = Subalgebra::new(&case.algebra, span).unwrap();
        let levi2 = levi_form(&h2, &xi).unwrap();
        assert_eq!(levi2.matrix(), &congruent(&p, levi.matrix()), "{}", case.name);
        assert_eq!(levi_signature(&levi2), levi_signature(&levi), "{}", case.name);
    }
}

#[test]
fn characteristic_covectors_annihilate_h_and_conjugate() {
    for case in cases() {
        let h = case.sub();
        let basis = characteristic_basis(&h);
        let mut both = h.span().to_vec();
        both.extend(h.conjugate_span());
        assert_eq!(basis.len(), case.algebra.dim() - span_rank(&both), "{}", case.name);
        for xi in &basis {
            assert!(xi.coeffs().iter().all(GaussianRational::is_real));
            assert!(both.iter().all(|v| xi.apply(v).is_zero()), "{}", case.name);
        }
    }
}

fn ad(g: &LieAlgebra, t: &ExactVector, x: &ExactVector) -> ExactVector {
    g.bracket(t, x).unwrap()
}

fn scaled(c: &GaussianRational, v: &ExactVector) -> ExactVector {
    v.iter().map(|x| c * x).collect()
}

/// Checks every root vector by bracketing with the torus, the bracket of
/// root spaces against the sum of their roots, and that the pieces span `g`.
fn check_decomposition(g: &LieAlgebra, torus: &[ExactVector]) {
    let rd = root_decomposition(g, torus).unwrap();
    assert_eq!(rd.total_dim(), g.dim());
    let mut all = rd.zero_space().to_vec();
    for root in rd.roots() {
        all.extend(root.space.iter().cloned());
        for x in &root.space {
            for (t, a) in torus.iter().zip(&root.alpha) {
                assert_eq!(ad(g, t, x), scaled(a, x));
            }
        }
    }
    assert_eq!(span_rank(&all), g.dim());
    for ra in rd.roots() {
        for rb in rd.roots() {
            let sum: Vec<GaussianRational> = ra.alpha.iter().zip(&rb.alpha).map(|(a, b)| a + b).collect();
            for x in &ra.space {
                for y in &rb.space {
                    let w = g.bracket(x, y).unwrap();
                    for (t, s) in torus.iter().zip(&sum) {
                        assert_eq!(ad(g, t, &w), scaled(s, &w));
                    }
                    if rd.root_of(&sum).is_none() && !sum.iter().all(Zero::is_zero) {
                        assert!(w.iter().all(Zero::is_zero));
                    }
                }
            }
        }
    }
    let positive = rd.positive_roots().count();
    assert_eq!(2 * positive, rd.roots().len());
}

#[test]
fn root_decompositions_of_builtins_and_rotated_tori() {
    let g2 = su2();
    check_decomposition(&g2, &[g2.e("T")]);
    let g3 = su3();
    check_decomposition(&g3, &[g3.e("T1"), g3.e("T2")]);
    let sum = lin_comb(&gr(1, 0), &g3.e("T1"), &gr(1, 0), &g3.e("T2"));
    let diff = lin_comb(&gr(1, 0), &g3.e("T1"), &gr(-1, 0), &g3.e("T2"));
    check_decomposition(&g3, &[sum, diff]);
    let mut r = rng(35);
    for _ in 0..5 {
        let (a, b) = (small_gr(&mut r), small_gr(&mut r));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let t = lin_comb(&a, &g3.e("T1"), &b, &g3.e("T2"));
        let real = t.iter().all(GaussianRational::is_real);
        let t2 = if real { g3.e("T2") } else { g3.e("T1") };
        if span_rank(&[t.clone(), t2.clone()]) == 2 {
            check_decomposition(&g3, &[t, t2]);
        }
    }
}

#[test]
fn standard_structures_are_closed_and_classified() {
    for (g, torus) in [(su2(), vec!["T"]), (su3(), vec!["T1", "T2"])] {
        let t: Vec<ExactVector> = torus.iter().map(|n| g.e(n)).collect();
        let rd = root_decomposition(&g, &t).unwrap();
        let rank = rd.rank();
        for s in 0..=rank {
            for tt in 0..=(rank - s) / 2 {
                let h = standard_structure(&rd, s, tt).unwrap();
                let class = h.classify();
                assert_eq!(class.elliptic, s + 2 * tt == rank, "{} s = {s} t = {tt}", g.name());
                assert_eq!(class.cr, s == 0, "{} s = {s} t = {tt}", g.name());
                assert_eq!(h.dim(), s + tt + (g.dim() - rank) / 2);
            }
        }
        assert!(standard_structure(&rd, rank + 1, 0).is_err());
    }
}
