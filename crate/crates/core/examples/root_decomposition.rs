//! Simultaneous eigenspaces of a torus and the standard involutive structures
//! t-part ⊕ positive root spaces.
//!
//! ```bash
//! cargo run -p liecoh --example root_decomposition
//! ```

use liecoh::algebra::{su3, Builtin};
use liecoh::exactnum::GaussianRational;
use liecoh::levi_roots::{builtin_torus, root_decomposition, standard_structure};

fn show(alpha: &[GaussianRational]) -> String {
    let parts: Vec<String> = alpha.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn main() -> liecoh::Result<()> {
    let g = su3();
    let indices = Builtin::Su3.torus_indices().expect("su3 declares a torus");
    let rd = root_decomposition(&g, &builtin_torus(&g, &indices))?;
    println!("rank {}, zero space of dimension {}", rd.rank(), rd.zero_space().len());
    for root in rd.roots() {
        let sign = if root.is_positive() { "+" } else { "-" };
        let vectors: Vec<String> = root.space.iter().map(|v| g.format_vector(v)).collect();
        println!("{sign} α = {}: {}", show(&root.alpha), vectors.join("; "));
    }
    println!("dimensions sum to {}", rd.total_dim());

    for (s, t) in [(0, 0), (1, 0), (2, 0), (0, 1)] {
        let h = standard_structure(&rd, s, t)?;
        println!("s = {s}, t = {t}: dim h = {}, {:?}", h.dim(), h.classify());
    }
    Ok(())
}
