//! Verification reports: the SU(2)/SU(3) table regression, the Bott
//! dimension identity and the product identity for h = k ⊕ u.
//!
//! ```bash
//! cargo run -p liecoh --example verification_reports
//! ```

use liecoh::algebra::su3;
use liecoh::exactnum::{gr, lin_comb};
use liecoh::reports::{verify_bott_corollary, verify_product_identity, verify_su3_tables};

fn main() -> liecoh::Result<()> {
    let tables = verify_su3_tables();
    println!("{}", tables.to_text());
    for check in tables.failures() {
        println!("differs: {} printed {} computed {}", check.name, check.expected, check.computed);
    }

    let g = su3();
    let torus = vec![g.e("T1"), g.e("T2")];
    println!("\n{}", verify_bott_corollary(&g, &torus)?.to_text());

    // k = span{T1, T2} acting on the ideal u = span{L1, L2, L3}.
    let l = |x: &str, y: &str| lin_comb(&gr(1, 0), &g.e(x), &gr(0, -1), &g.e(y));
    let u = vec![l("X1", "Y1"), l("X2", "Y2"), l("X3", "Y3")];
    println!("\n{}", verify_product_identity(&g, &torus, &u)?.to_text());
    Ok(())
}
