//! Built-in algebras, brackets, the Jacobi check, conjugation and the JSON
//! algebra format.
//!
//! ```bash
//! cargo run -p liecoh --example structure_constants
//! ```

use liecoh::algebra::{builtin, su3, LieAlgebra};
use liecoh::exactnum::{gr, lin_comb};

fn main() -> liecoh::Result<()> {
    let g = su3();
    println!("{} has basis {:?}", g.name(), g.basis_names());
    for (a, b) in [("T1", "X1"), ("X1", "Y1"), ("X1", "X2"), ("X2", "Y3")] {
        let w = g.bracket(&g.e(a), &g.e(b))?;
        println!("[{a}, {b}] = {}", g.format_vector(&w));
    }

    // L1 = X1 − iY1 and its conjugate.
    let l1 = lin_comb(&gr(1, 0), &g.e("X1"), &gr(0, -1), &g.e("Y1"));
    let l1_bar = g.conjugate(&l1);
    println!("[L1, conj L1] = {}", g.format_vector(&g.bracket(&l1, &l1_bar)?));

    g.validate_jacobi()?;
    println!("Jacobi holds on all triples");

    // Round-trip through the JSON format.
    let text = builtin("heisenberg3")?.to_json();
    println!("\nheisenberg3 as JSON:\n{text}");
    let reloaded = LieAlgebra::from_json(&text)?;
    println!("reloaded {} of dimension {}", reloaded.name(), reloaded.dim());

    // A table that violates Jacobi is rejected with a witness triple.
    let broken = LieAlgebra::from_json(
        r#"{"name":"broken","basis":["X","Y","T"],"brackets":[
            {"i":0,"j":1,"terms":[{"k":0,"c":"1"},{"k":2,"c":"2"}]},
            {"i":0,"j":2,"terms":[{"k":1,"c":"-2"}]},
            {"i":1,"j":2,"terms":[{"k":0,"c":"2"}]}]}"#,
    )?;
    match broken.validate_jacobi() {
        Ok(()) => println!("unexpected: Jacobi holds"),
        Err(e) => println!("broken table: {e}"),
    }
    Ok(())
}
