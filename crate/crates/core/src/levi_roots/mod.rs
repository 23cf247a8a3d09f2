//! Levi forms of involutive structures and root decompositions with respect to
//! a torus, together with the standard structures `h = u ⊕ ⊕_{Δ₊} g_α`.

mod levi;
mod roots;

pub use levi::{
    characteristic_basis, hypocomplexity_flag, hypocomplexity_flag_with, levi_form, levi_signature,
    levi_signature_float, rational, scale_covector, CharacteristicCovector, HypocomplexityFlag, LeviMatrix, Signature,
    FLOAT_EIGEN_TOLERANCE, MAX_GRID_POINTS,
};
pub use roots::{
    builtin_torus, exact_eigenvalues, is_positive_root, root_decomposition, standard_structure, RootDecomposition,
    RootSpace,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{su2, su3, Subalgebra};
    use crate::exactnum::{gr, lin_comb, ExactVector};
    use num_rational::BigRational;

    fn l_vec(g: &crate::algebra::LieAlgebra, x: &str, y: &str) -> ExactVector {
        lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y))
    }

    fn su3_cr(g: &crate::algebra::LieAlgebra) -> Subalgebra<'_> {
        Subalgebra::new(g, vec![l_vec(g, "X1", "Y1"), l_vec(g, "X2", "Y2"), l_vec(g, "X3", "Y3")]).unwrap()
    }

    #[test]
    fn su2_levi() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![l_vec(&g, "X", "Y")]).unwrap();
        let basis = characteristic_basis(&h);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].coeffs(), &g.e("T")[..]);
        let xi = CharacteristicCovector::combine(&h, &basis, &[rational(3, 1)]).unwrap();
        let m = levi_form(&h, &xi).unwrap();
        assert_eq!(m.matrix().get(0, 0), gr(6, 0));
        let sig = levi_signature(&m);
        assert_eq!(sig.as_tuple(), (1, 0, 0));
        assert_eq!(levi_signature_float(&m), sig);
        match hypocomplexity_flag(&h).unwrap() {
            HypocomplexityFlag::FailsAtWitness { covector, .. } => assert_eq!(covector.coeffs(), &g.e("T")[..]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn su3_levi_diagonal() {
        let g = su3();
        let h = su3_cr(&g);
        let basis = characteristic_basis(&h);
        assert_eq!(basis.len(), 2);
        let (x1, x2) = (rational(2, 3), rational(-5, 1));
        let xi = CharacteristicCovector::combine(&h, &basis, &[x1.clone(), x2.clone()]).unwrap();
        let m = levi_form(&h, &xi).unwrap();
        let real = |q: BigRational| crate::exactnum::GaussianRational::real(q);
        assert_eq!(m.matrix().get(0, 0), real(&x1 * BigRational::from_integer(2.into())));
        assert_eq!(m.matrix().get(1, 1), real(&x1 + &x2));
        assert_eq!(m.matrix().get(2, 2), real(&x2 - &x1));
        assert_eq!(m.matrix().nnz(), 3);
        let at = CharacteristicCovector::combine(&h, &basis, &[rational(0, 1), rational(1, 1)]).unwrap();
        assert_eq!(levi_signature(&levi_form(&h, &at).unwrap()).as_tuple(), (2, 0, 1));
        match hypocomplexity_flag(&h).unwrap() {
            HypocomplexityFlag::FailsAtWitness { coordinates, .. } => {
                assert_eq!(coordinates, vec![rational(0, 1), rational(1, 1)])
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn su3_h_prime_indefinite() {
        let g = su3();
        let mut span = su3_cr(&g).span().to_vec();
        span.push(g.e("T2"));
        let h = Subalgebra::new(&g, span).unwrap();
        let basis = characteristic_basis(&h);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].coeffs(), &g.e("T1")[..]);
        let xi = CharacteristicCovector::combine(&h, &basis, &[rational(-1, 1)]).unwrap();
        let sig = levi_signature(&levi_form(&h, &xi).unwrap());
        assert!(sig.is_indefinite());
        assert_eq!(sig.as_tuple(), (1, 2, 1));
        assert!(matches!(hypocomplexity_flag(&h).unwrap(), HypocomplexityFlag::IndefiniteOnGrid { .. }));
    }

    #[test]
    fn elliptic_is_vacuous_and_bad_covector_rejected() {
        let g = su2();
        let h = Subalgebra::new(&g, vec![g.e("T"), l_vec(&g, "X", "Y")]).unwrap();
        assert!(characteristic_basis(&h).is_empty());
        assert_eq!(hypocomplexity_flag(&h).unwrap(), HypocomplexityFlag::Vacuous);
        let cr = Subalgebra::new(&g, vec![l_vec(&g, "X", "Y")]).unwrap();
        assert!(CharacteristicCovector::new(&cr, g.e("X")).is_err());
        assert!(CharacteristicCovector::new(&cr, vec![gr(0, 0), gr(0, 0), gr(0, 1)]).is_err());
    }
}
