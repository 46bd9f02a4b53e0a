//! Finite-volume solves on a polar grid of the hyperbolic plane, compared with
//! the radial solution on two grids to read off the convergence order.
//!
//! ```text
//! cargo run --release --example annulus_solver
//! ```

use hyperlie::elliptic::{fd_solve, radial_solve, AnnulusGrid, DiscreteField, FluxLaw, SolverParams};
use hyperlie::verify::ring_data;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let law = FluxLaw::PLaplace { p: 3.0 };
    let c = 1.0;
    let exact = radial_solve(law, 2, c, 1.0, 2.0, 0.0, 1.0)?;
    let mut errors = Vec::new();
    for n in [32, 64, 128] {
        let grid = AnnulusGrid::annulus(1.0, 2.0, n, n)?;
        let sol = fd_solve(&grid, law, c, &ring_data(&grid, |_| 0.0, |_| 1.0), &SolverParams::default())?;
        let mut err: f64 = 0.0;
        for i in 0..grid.rings() {
            err = err.max((sol.field.get(i, 0) - exact.value(grid.r(i))?).abs());
        }
        println!("{n:4}×{n:<4} newton steps {:2}  residual {:.2e}  max error {err:.3e}", sol.iterations, sol.residual);
        errors.push(err);
    }
    for w in errors.windows(2) {
        println!("observed order {:.4}", (w[0] / w[1]).log2());
    }

    // Non-symmetric data on a disk; Gauss-Seidel is available for small grids.
    let grid = AnnulusGrid::disk(1.5, 16, 16)?;
    let data = DiscreteField::from_fn(&grid, |_, t| (2.0 * t).cos());
    let newton = fd_solve(&grid, law, 0.0, &data, &SolverParams::default())?;
    let gs = fd_solve(&grid, law, 0.0, &data, &SolverParams::gauss_seidel(0.7, 50_000))?;
    println!(
        "disk: newton {} steps, gauss-seidel {} sweeps, max difference {:.2e}",
        newton.iterations,
        gs.iterations,
        newton.field.max_abs_diff(&gs.field)
    );
    Ok(())
}
