//! Exact arithmetic over Q(i): Gaussian rationals, sparse matrices, rank and
//! nullspace, and characteristic polynomials.
//!
//! ```bash
//! cargo run -p liecoh --example exact_arithmetic
//! ```

use liecoh::exactnum::poly::{charpoly, squarefree_part};
use liecoh::exactnum::{gr, ExactMatrix, GaussianRational};

fn main() -> liecoh::Result<()> {
    // Parsing and printing use the text form "a/b", "c/di" or "a/b+c/di".
    let z: GaussianRational = "1/2-3/4i".parse()?;
    let w = GaussianRational::from_frac(2, 3).mul_i();
    println!("z = {z}, w = {w}");
    println!("z * w = {}", &z * &w);
    println!("1/z = {}", z.inv().expect("z is nonzero"));
    println!("|z|^2 = {}", z.norm_sqr());

    // A rank-2 matrix: the third row is i times the first plus the second.
    let rows = vec![
        vec![gr(1, 0), gr(0, 1), gr(2, 0)],
        vec![gr(0, 0), gr(1, 0), gr(-1, 1)],
        vec![gr(0, 1), gr(0, 0), gr(-1, 3)],
    ];
    let m = ExactMatrix::from_rows(&rows)?;
    println!("\nrank = {}", m.rank());
    for v in m.nullspace() {
        let image = m.mul_vec(&v)?;
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector [{}], image is zero: {}", shown.join(", "), image.iter().all(|c| c == &gr(0, 0)));
    }

    // det(λI − A) for the adjoint action of T on su2 is λ³ + 4λ.
    let su2 = liecoh::algebra::su2();
    let ad_t = su2.ad_matrix(&su2.e("T"))?;
    let p = charpoly(&ad_t);
    let coeffs: Vec<String> = p.iter().map(ToString::to_string).collect();
    println!("\ncharpoly of ad T, low to high: [{}]", coeffs.join(", "));
    println!("squarefree part degree: {}", squarefree_part(&p).len() - 1);
    Ok(())
}
