//! Characteristic covectors, exact Levi forms, inertia and the grid
//! hypocomplexity flag.
//!
//! ```bash
//! cargo run -p liecoh --example levi_form
//! ```

use liecoh::algebra::{su3, Subalgebra};
use liecoh::exactnum::{gr, lin_comb, ExactVector};
use liecoh::levi_roots::{
    characteristic_basis, hypocomplexity_flag, levi_form, levi_signature, levi_signature_float, rational,
    CharacteristicCovector,
};

fn main() -> liecoh::Result<()> {
    let g = su3();
    let l = |x: &str, y: &str| -> ExactVector { lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y)) };
    let cr = Subalgebra::new(&g, vec![l("X1", "Y1"), l("X2", "Y2"), l("X3", "Y3")])?;
    println!("span{{L1, L2, L3}} is {:?}", cr.classify());

    let basis = characteristic_basis(&cr);
    for (k, xi) in basis.iter().enumerate() {
        println!("characteristic covector {k}: {}", g.format_vector(xi.coeffs()));
    }

    for coords in [[0, 1], [1, 0], [1, 2], [-1, 1]] {
        let c: Vec<_> = coords.iter().map(|&v| rational(v, 1)).collect();
        let xi = CharacteristicCovector::combine(&cr, &basis, &c)?;
        let m = levi_form(&cr, &xi)?;
        let diag: Vec<String> = (0..m.dim()).map(|k| m.matrix().get(k, k).to_string()).collect();
        println!(
            "ξ = {coords:?}: diagonal [{}], signature {} (float {})",
            diag.join(", "),
            levi_signature(&m),
            levi_signature_float(&m)
        );
    }
    println!("{}", hypocomplexity_flag(&cr)?.describe());

    let mut span = cr.span().to_vec();
    span.push(g.e("T2"));
    let h_prime = Subalgebra::new(&g, span)?;
    println!("\nspan{{L1, L2, L3, T2}}: {}", hypocomplexity_flag(&h_prime)?.describe());
    Ok(())
}
