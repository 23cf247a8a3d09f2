//! Chevalley–Eilenberg cochains, the coboundary, interior products, Lie
//! derivatives and cohomology dimensions.
//!
//! ```bash
//! cargo run -p liecoh --example ce_cohomology
//! ```

use liecoh::algebra::{heisenberg3, su2, su3, torus};
use liecoh::cecomplex::{ce_cohomology_dims, ce_d, interior, lie_derivative, Cochain, IndexSet};
use liecoh::exactnum::gr;

fn main() -> liecoh::Result<()> {
    for g in [su2(), su3(), heisenberg3(), torus(4)] {
        println!("dim H^*({}) = {:?}", g.name(), ce_cohomology_dims(&g)?);
    }

    // The dual 1-form of T on su2 and its coboundary.
    let g = su2();
    let t_star = Cochain::basis(&g, IndexSet::from_indices(&[2]));
    let dt = ce_d(&t_star);
    println!("\nd(T*) on su2:");
    for (set, c) in dt.terms() {
        let names: Vec<&str> = set.iter().map(|k| g.basis_names()[k].as_str()).collect();
        println!("  {c} * {}*", names.join("*^"));
    }
    println!("d(d(T*)) is zero: {}", ce_d(&dt).is_zero());

    // Cartan's formula ι_X d + d ι_X = 𝓛_X on a 2-cochain.
    let u = Cochain::from_terms(
        &g,
        2,
        vec![(vec![0, 1], gr(1, 0)), (vec![1, 2], gr(0, 2))],
    )?;
    let x = g.e("X");
    let lhs = interior(&x, &ce_d(&u))?.add(&ce_d(&interior(&x, &u)?));
    println!("ι_X d u + d ι_X u = 𝓛_X u: {}", lhs == lie_derivative(&x, &u)?);
    Ok(())
}
