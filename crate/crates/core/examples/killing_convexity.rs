//! Right-invariant vector fields are Killing fields; along a geodesic their
//! squared length is convex, so it has no interior maximum.
//!
//! ```text
//! cargo run --release --example killing_convexity
//! ```

use hyperlie::halfspace::{geodesic_through, HPoint, HTangent};
use hyperlie::killing::{convexity_at, critical_scan, jacobi_residual, norm_sq_along, norm_sq_second_derivative, RightInvField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = RightInvField::new(vec![1.0, -0.4])?;
    let p = HPoint::planar(0.2, 1.3);
    let gamma = geodesic_through(&p, &HTangent::new(p.clone(), vec![0.6, -0.8])?)?;

    println!("  tau     ‖X‖²           d²/dτ² ‖X‖²");
    for k in -4..=4 {
        let tau = 0.5 * k as f64;
        println!(
            "{tau:5.2}  {:13.8}  {:13.8}",
            norm_sq_along(&x, &gamma, tau),
            norm_sq_second_derivative(&x, &gamma, tau)
        );
    }

    for tau in critical_scan(&x, &gamma, -3.0, 3.0, 600) {
        println!(
            "critical point at tau = {tau:.10}: second derivative {:.8} (numeric {:.8})",
            norm_sq_second_derivative(&x, &gamma, tau),
            convexity_at(&x, &gamma, tau)
        );
    }
    println!("Jacobi equation residual on [-2, 2]: {:.3e}", jacobi_residual(&x, &gamma, -2.0, 2.0, 1e-3));
    Ok(())
}
