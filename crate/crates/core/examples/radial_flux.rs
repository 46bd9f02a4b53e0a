//! Exact radial solutions of `div(a(|∇u|)/|∇u| ∇u) + C = 0` on geodesic annuli
//! via the conserved flux, including the minimal-surface non-existence case.
//!
//! ```text
//! cargo run --release --example radial_flux
//! ```

use hyperlie::elliptic::{radial_solve, radial_solve_disk, FluxLaw};
use hyperlie::error::SolveError;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let laws = [FluxLaw::Linear, FluxLaw::PLaplace { p: 1.5 }, FluxLaw::PLaplace { p: 3.0 }, FluxLaw::MinimalSurface];
    for law in laws {
        let sol = radial_solve(law, 2, 0.1, 1.0, 2.0, 0.0, 0.3)?;
        let drift = (0..=10)
            .map(|k| sol.flux_invariant(1.0 + 0.1 * k as f64))
            .collect::<Result<Vec<_>, _>>()?
            .windows(2)
            .fold(0.0f64, |m, w| m.max((w[1] - w[0]).abs()));
        println!(
            "{:<16} A = {:+.12}  u(1.5) = {:.10}  flux drift {:.1e}",
            law.name(),
            sol.flux_constant(),
            sol.value(1.5)?,
            drift
        );
    }

    let l = |x: f64| (0.5 * x).tanh().ln();
    let sol = radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, 2.0, 0.0, 1.0)?;
    println!("\nlinear, C = 0: A = {:.12}, 1/(ln tanh 1 − ln tanh ½) = {:.12}", sol.flux_constant(), 1.0 / (l(2.0) - l(1.0)));

    match radial_solve(FluxLaw::MinimalSurface, 2, 0.0, 0.05, 2.0, 0.0, 50.0) {
        Err(SolveError::NoSolution { radius }) => println!("mse jump of 50 on [0.05, 2]: no solution, slope blows up at r = {radius}"),
        other => println!("unexpected: {other:?}"),
    }

    let disk = radial_solve_disk(FluxLaw::PLaplace { p: 3.0 }, 3, 0.0, 2.0, 1.0)?;
    println!("regular at the centre with C = 0 forces A = {}", disk.flux_constant());
    Ok(())
}
