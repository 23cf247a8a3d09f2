//! Exact Hodge theory on the bigraded complex: the Laplacian
//! □ = D D* + D* D in the orthonormal adapted basis and its kernel.
//!
//! ```bash
//! cargo run -p liecoh --example hodge_harmonic
//! ```

use liecoh::algebra::{su2, Subalgebra};
use liecoh::bigraded::{adapt, bigraded_cohomology_dims};
use liecoh::exactnum::{gr, lin_comb};
use liecoh::hodge::{harmonic_basis, harmonic_dims, laplacian, HodgeProblem};

fn main() -> liecoh::Result<()> {
    let g = su2();
    let l = lin_comb(&gr(1, 0), &g.e("X"), &gr(0, -1), &g.e("Y"));
    let h = Subalgebra::new(&g, vec![g.e("T"), l])?;
    let ad = adapt(&h);

    for p in 0..=ad.complement_dim() {
        println!(
            "p = {p}: dim ker □ = {:?}, dim H = {:?}",
            harmonic_dims(&h, p),
            bigraded_cohomology_dims(&h, p)
        );
    }

    let window = HodgeProblem::bigraded(&ad, 0, 1);
    let lap = laplacian(&window);
    println!("\n□ at (0, 1) is {}x{} and Hermitian: {}", lap.rows(), lap.cols(), lap.is_hermitian());
    for (r, row) in lap.to_dense().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  row {r}: [{}]", cells.join(", "));
    }
    for v in harmonic_basis(&window) {
        let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("harmonic representative: [{}]", cells.join(", "));
    }
    Ok(())
}
