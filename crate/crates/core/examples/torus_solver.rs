//! Fourier solution of (∂x − μ∂y)u = f on the two-torus, with resonances,
//! small-divisor profiles and the Liouville-type scales.
//!
//! ```bash
//! cargo run -p liecoh --example torus_solver
//! ```

use liecoh::torus_solver::{liouville_scales, resonant_modes, small_divisor_profile, solve, FourierForm, MuParameter};
use num_complex::Complex64;

fn main() -> liecoh::Result<()> {
    let mu: MuParameter = "1/2".parse()?;
    let mut f = FourierForm::new(4);
    f.add(0, 0, Complex64::new(1.0, 0.0))?;
    f.add(1, 2, Complex64::new(0.5, 0.0))?;
    f.add(3, -1, Complex64::new(0.0, 2.0))?;
    let sol = solve(&mu, &f);
    println!("μ = {mu}: obstructions {:?}, residual {:.1e}", sol.obstructions, sol.residual);
    for (&(xi, eta), c) in sol.solution.modes() {
        println!("  û({xi}, {eta}) = {c}");
    }
    println!("resonant modes with R = 6: {:?}", resonant_modes(&mu, 6));

    println!("\nsmall divisors for μ = 1/2:");
    for row in small_divisor_profile(&mu, 5) {
        println!("  shell {}: min {} at {:?}, running {}", row.shell, row.shell_min, row.argmin, row.running_min);
    }

    let liouville = MuParameter::liouville(4)?;
    println!("\n{liouville} = {}", liouville.value());
    for s in liouville_scales(&liouville, 64) {
        println!("  η = {}: ξ = {}, |ξ − μη| = {:.3e}, decay exponent {:.3}", s.eta, s.xi, s.divisor, s.exponent);
    }
    println!("\nJSON form of f:\n{}", f.to_json());
    Ok(())
}
