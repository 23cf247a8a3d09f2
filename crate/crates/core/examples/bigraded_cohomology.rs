//! Bigraded cohomology of an involutive structure, computed two ways: on the
//! slices C^{p,q} of the adapted exterior basis and on the module complex with
//! coefficients in Λ^p(g/h). The transfer map links the two.
//!
//! ```bash
//! cargo run -p liecoh --example bigraded_cohomology
//! ```

use liecoh::algebra::{su2, su3, Subalgebra};
use liecoh::bigraded::{adapt, bigraded_cohomology_dims, filtration_dim, hs_module_cohomology_dims, ModuleCochain};
use liecoh::cecomplex::ce_d;
use liecoh::exactnum::{gr, lin_comb, ExactVector};

fn l(g: &liecoh::algebra::LieAlgebra, x: &str, y: &str) -> ExactVector {
    lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y))
}

fn main() -> liecoh::Result<()> {
    let s2 = su2();
    let borel = Subalgebra::new(&s2, vec![s2.e("T"), l(&s2, "X", "Y")])?;
    let cr = Subalgebra::new(&s2, vec![l(&s2, "X", "Y")])?;
    let s3 = su3();
    let cr3 = Subalgebra::new(&s3, vec![l(&s3, "X1", "Y1"), l(&s3, "X2", "Y2"), l(&s3, "X3", "Y3")])?;

    for (name, h) in [("su2 span{T, L}", &borel), ("su2 span{L}", &cr), ("su3 span{L1, L2, L3}", &cr3)] {
        let m = h.parent().dim() - h.dim();
        println!("{name}: n = {}, m = {m}", h.dim());
        for p in 0..=m {
            let slice = bigraded_cohomology_dims(h, p);
            let module = hs_module_cohomology_dims(h, p);
            println!("  p = {p}: H^(p,.) = {slice:?}, module complex {module:?}");
        }
    }

    // The adapted basis puts the spanning vectors of h first, followed by a
    // complement drawn from the parent basis.
    let ad = adapt(&borel);
    println!("\nadapted algebra basis: {:?}", ad.adapted_algebra().basis_names());
    println!("dim N^(1,1) = {}", filtration_dim(ad.h_dim(), ad.complement_dim(), 1, 1));
    println!("d' leaves the filtration in (0, 1): {}", ad.filtration_leak(0, 1) != 0);

    // Lift a module cochain with the section and push it back with r.
    let module = ad.module_complex();
    let mut v = ModuleCochain::zero(1, 1);
    for (j, i) in module.basis(1, 1) {
        v.add_term(j, i, &gr(3, -1));
    }
    let u = module.section(&v);
    println!("r(section(v)) = v: {}", module.transfer(&u, 1) == v);
    println!("r(d u) = d(r u): {}", module.transfer(&ce_d(&u), 1) == module.d(&v));
    Ok(())
}
